#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hmdual/duality.hpp"
#include "hmdual/errors.hpp"
#include "hmdual/families.hpp"
#include "hmdual/io.hpp"
#include "hmdual/todd_coxeter.hpp"

namespace hmdual::cli {

namespace detail {

inline AnalyzeOptions parse_ops(const std::string& csv) {
  AnalyzeOptions opts{false, false, false};
  std::size_t begin = 0;
  while (begin <= csv.size()) {
    const auto comma = csv.find(',', begin);
    const std::string token =
        csv.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    if (token == "alpha")
      opts.alpha = true;
    else if (token == "beta")
      opts.beta = true;
    else if (token == "mirror")
      opts.mirror = true;
    else
      throw BadParameter("unknown operation '" + token +
                         "' (expected a comma-separated subset of alpha,beta,mirror)");
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return opts;
}

inline std::map<std::string, int> parse_family_parameters(
    const std::vector<std::string>& tokens) {
  std::map<std::string, int> parameters;
  for (const std::string& token : tokens) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
      throw BadParameter("family parameters look like k=3, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    std::size_t used = 0;
    int number = 0;
    try {
      number = std::stoi(value, &used);
    } catch (const std::exception&) {
      throw BadParameter("parameter '" + key + "' needs an integer value");
    }
    if (used != value.size())
      throw BadParameter("parameter '" + key + "' needs an integer value");
    if (!parameters.emplace(key, number).second)
      throw BadParameter("duplicate parameter '" + key + "'");
  }
  return parameters;
}

/// Re-derives every reported index with the independent algorithms: coset
/// enumeration over the assignment-augmented presentation (when one is
/// available) and the exhaustive minimal-normal-subgroup search (order <= 24).
inline bool oracle_agrees(const OrientedHypermap& h,
                          const std::optional<Presentation>& presentation,
                          const DualityReport& report, int max_cosets, std::ostream& err) {
  std::map<std::string, OperationSpec> specs;
  for (const OperationSpec& op : named_operations()) specs.emplace(op.name, op);
  bool ok = true;
  for (const auto& [name, entry] : report.operations) {
    const OperationSpec& spec = specs.at(name);
    if (presentation) {
      const int coindex = index_via_presentation(*presentation, spec, max_cosets);
      if (entry.index * static_cast<std::uint64_t>(coindex) != report.group_order) {
        err << "oracle disagreement on " << name << ": enumerated coindex " << coindex
            << " does not match kernel index " << entry.index << " for order "
            << report.group_order << "\n";
        ok = false;
      }
    }
    if (report.group_order <= 24 &&
        bruteforce_minimal_normal(h, spec) != entry.index) {
      err << "oracle disagreement on " << name
          << ": exhaustive search does not match kernel index " << entry.index << "\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace detail

/// Runs the command line given in `args` (program name excluded). Reports go
/// to `out`, diagnostics to `err`. Exit codes: 0 success, 1 input error,
/// 2 internal disagreement, 3 resource cap exceeded.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"duality analysis for oriented regular hypermaps", "hmdual"};
  app.require_subcommand(1);

  std::string ops_csv;
  bool json = false;
  bool oracle = false;
  std::string emit_path;
  int max_cosets = kDefaultMaxCosets;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--ops", ops_csv, "comma-separated subset of alpha,beta,mirror");
    cmd->add_flag("--json", json, "print the report as JSON");
    cmd->add_flag("--oracle", oracle,
                  "cross-check every index with independent algorithms");
    cmd->add_option("--emit", emit_path, "also write the hypermap in perm format here");
    cmd->add_option("--max-cosets", max_cosets, "coset enumeration limit")
        ->check(CLI::PositiveNumber);
  };

  std::string input_path;
  CLI::App* cmd_analyze = app.add_subcommand("analyze", "analyze a hypermap input file");
  cmd_analyze->add_option("file", input_path, "input file in perm or fp format")->required();
  add_common(cmd_analyze);

  std::vector<std::string> family_tokens;
  CLI::App* cmd_family =
      app.add_subcommand("family", "construct and analyze a named family member");
  cmd_family
      ->add_option("name", family_tokens, "family name followed by key=value parameters")
      ->required()
      ->expected(-1);
  add_common(cmd_family);

  std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed args
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    RealizedInput realized = [&] {
      if (cmd_analyze->parsed()) return realize(load_input(input_path), max_cosets);
      FamilyResult family = make_family(
          family_tokens.front(),
          detail::parse_family_parameters(
              {family_tokens.begin() + 1, family_tokens.end()}),
          max_cosets);
      return RealizedInput{std::move(family.hypermap), std::move(family.presentation)};
    }();

    const bool ops_given = cmd_analyze->count("--ops") + cmd_family->count("--ops") > 0;
    const AnalyzeOptions opts = ops_given ? detail::parse_ops(ops_csv) : AnalyzeOptions{};
    const DualityReport report = analyze(realized.hypermap, opts);

    if (oracle && !detail::oracle_agrees(realized.hypermap, realized.presentation, report,
                                         max_cosets, err))
      return 2;

    if (!emit_path.empty()) {
      std::ofstream file(emit_path);
      if (!file) {
        err << "error: cannot write '" << emit_path << "'\n";
        return 1;
      }
      file << emit_perm(realized.hypermap);
    }

    out << (json ? render_report_json(report) : render_report_text(report));
    return 0;
  } catch (const InternalInconsistency& e) {
    err << "internal disagreement: " << e.what() << "\n";
    return 2;
  } catch (const NonUniqueMinimum& e) {
    err << "internal disagreement: " << e.what() << "\n";
    return 2;
  } catch (const ImagesDoNotGenerate& e) {
    err << "internal disagreement: " << e.what() << "\n";
    return 2;
  } catch (const TooLarge& e) {
    err << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const CosetLimitExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const EmptyPresentationDegenerate& e) {
    err << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hmdual::cli

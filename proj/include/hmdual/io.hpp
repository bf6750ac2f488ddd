#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hmdual/duality.hpp"
#include "hmdual/errors.hpp"
#include "hmdual/hypermap.hpp"
#include "hmdual/permutation.hpp"
#include "hmdual/presentation.hpp"
#include "hmdual/structure.hpp"
#include "hmdual/todd_coxeter.hpp"
#include "hmdual/word.hpp"

namespace hmdual {

/// A parsed hypermap description: either two marks in cycle notation over a
/// declared degree ("perm") or a two-generator presentation ("fp").
struct InputDocument {
  std::string format;
  // perm
  int degree = 0;
  std::optional<Permutation> x;
  std::optional<Permutation> y;
  // fp
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
};

namespace detail {

inline std::string strip_line(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto begin = line.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = line.find_last_not_of(" \t\r\n");
  return line.substr(begin, end - begin + 1);
}

inline ParseError at_line(int line, const std::string& what) {
  return ParseError("line " + std::to_string(line) + ": " + what);
}

inline std::vector<std::vector<int>> parse_cycle_text(const std::string& text, int line) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) throw at_line(line, "expected cycle notation");
  while (pos < text.size()) {
    if (text[pos] != '(') throw at_line(line, "expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    skip();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw at_line(line, "expected a point number in a cycle");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 100000000) throw at_line(line, "point number out of range");
        ++pos;
      }
      cycle.push_back(value);
      skip();
    }
    if (pos == text.size()) throw at_line(line, "unterminated cycle");
    ++pos;  // consume ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip();
  }
  return cycles;
}

inline bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (const char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace detail

/// Parses the two input formats. `#` starts a comment anywhere; every
/// non-blank line is `key: value`. Exactly two marks (perm) or two
/// generators (fp) are accepted.
inline InputDocument parse_input(std::istream& in) {
  InputDocument doc;
  std::string raw;
  int line_number = 0;
  bool have_degree = false;
  struct RawMark {
    std::string text;
    int line = 0;
  };
  std::optional<RawMark> raw_x, raw_y;

  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = detail::strip_line(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw detail::at_line(line_number, "expected 'key: value'");
    const std::string key = detail::strip_line(line.substr(0, colon));
    const std::string value = detail::strip_line(line.substr(colon + 1));
    if (value.empty()) throw detail::at_line(line_number, "missing value for '" + key + "'");

    if (key == "format") {
      if (!doc.format.empty()) throw detail::at_line(line_number, "duplicate format line");
      if (value != "perm" && value != "fp")
        throw detail::at_line(line_number, "unknown format '" + value + "'");
      doc.format = value;
      continue;
    }
    if (doc.format.empty())
      throw detail::at_line(line_number, "the format line must come first");

    if (doc.format == "perm") {
      if (key == "degree") {
        if (have_degree) throw detail::at_line(line_number, "duplicate degree line");
        try {
          doc.degree = std::stoi(value);
        } catch (const std::exception&) {
          throw detail::at_line(line_number, "degree must be an integer");
        }
        if (doc.degree < 1 || doc.degree > kDefaultDegreeCap)
          throw detail::at_line(line_number, "degree out of range");
        have_degree = true;
      } else if (key == "x" || key == "y") {
        auto& slot = key == "x" ? raw_x : raw_y;
        if (slot) throw detail::at_line(line_number, "duplicate mark '" + key + "'");
        slot = RawMark{value, line_number};
      } else {
        throw detail::at_line(line_number,
                              "unexpected key '" + key + "' (a hypermap has two marks)");
      }
    } else {
      if (key == "generators") {
        if (!doc.generator_names.empty())
          throw detail::at_line(line_number, "duplicate generators line");
        std::istringstream names(value);
        std::string name;
        while (names >> name) {
          if (!detail::valid_identifier(name))
            throw detail::at_line(line_number, "invalid generator name '" + name + "'");
          doc.generator_names.push_back(name);
        }
        if (doc.generator_names.size() != 2)
          throw detail::at_line(line_number, "exactly two generators are required");
        if (doc.generator_names[0] == doc.generator_names[1])
          throw detail::at_line(line_number, "generator names must differ");
      } else if (key == "relator" || key == "equation") {
        if (doc.generator_names.empty())
          throw detail::at_line(line_number, "generators must be declared before relators");
        try {
          if (key == "relator") {
            doc.relators.push_back(parse_word(value, doc.generator_names));
          } else {
            const auto eq = value.find('=');
            if (eq == std::string::npos)
              throw detail::at_line(line_number, "an equation needs '='");
            const std::string lhs = detail::strip_line(value.substr(0, eq));
            const std::string rhs = detail::strip_line(value.substr(eq + 1));
            if (rhs.find('=') != std::string::npos)
              throw detail::at_line(line_number, "an equation needs exactly one '='");
            doc.relators.push_back(parse_word(lhs, doc.generator_names)
                                       .then(parse_word(rhs, doc.generator_names).inverse()));
          }
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw detail::at_line(line_number, e.what());
        }
      } else {
        throw detail::at_line(line_number, "unexpected key '" + key + "'");
      }
    }
  }

  if (doc.format.empty()) throw ParseError("empty input: missing format line");
  if (doc.format == "perm") {
    if (!have_degree) throw ParseError("perm input needs a degree line");
    if (!raw_x || !raw_y) throw ParseError("perm input needs marks x and y");
    for (auto* slot : {&raw_x, &raw_y}) {
      try {
        const Permutation p =
            Permutation::from_cycles(detail::parse_cycle_text((*slot)->text, (*slot)->line),
                                     doc.degree);
        (slot == &raw_x ? doc.x : doc.y) = p;
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw detail::at_line((*slot)->line, e.what());
      }
    }
  } else if (doc.generator_names.empty()) {
    throw ParseError("fp input needs a generators line");
  }
  return doc;
}

inline InputDocument parse_input_text(const std::string& text) {
  std::istringstream in(text);
  return parse_input(in);
}

inline InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_input(in);
}

struct RealizedInput {
  OrientedHypermap hypermap;
  std::optional<Presentation> presentation;
};

/// Turns a parsed document into a hypermap; fp documents go through coset
/// enumeration and keep their presentation for cross-checks.
inline RealizedInput realize(const InputDocument& doc, int max_cosets = kDefaultMaxCosets) {
  if (doc.format == "perm")
    return RealizedInput{OrientedHypermap(*doc.x, *doc.y), std::nullopt};
  Presentation p(doc.generator_names, doc.relators);
  const TcResult r = todd_coxeter(p, {}, max_cosets);
  return RealizedInput{OrientedHypermap(r.generator_images[0], r.generator_images[1]),
                       std::move(p)};
}

/// Serializes a hypermap in the perm input format (round-trippable).
inline std::string emit_perm(const OrientedHypermap& h) {
  std::ostringstream out;
  out << "format: perm\n";
  out << "degree: " << h.degree() << "\n";
  out << "x: " << format_cycles(h.x()) << "\n";
  out << "y: " << format_cycles(h.y()) << "\n";
  return out.str();
}

inline nlohmann::json report_to_json(const DualityReport& report) {
  nlohmann::json j;
  j["order"] = report.group_order;
  j["type"] = {report.type.l, report.type.m, report.type.n};
  j["is_map"] = report.type.is_map;
  j["euler_characteristic"] = report.euler_characteristic;
  j["genus"] = report.genus;
  nlohmann::json ops = nlohmann::json::object();
  for (const auto& [name, entry] : report.operations) {
    nlohmann::json op;
    op["index"] = entry.index;
    op["coindex"] = entry.coindex;
    op["kernel"] = {{"order", entry.kernel_structure.order},
                    {"structure", structure_label(entry.kernel_structure)}};
    op["self_dual"] = entry.self_dual;
    op["extreme"] = entry.extreme;
    ops[name] = std::move(op);
  }
  j["operations"] = std::move(ops);
  return j;
}

inline std::string render_report_json(const DualityReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

inline std::string render_report_text(const DualityReport& report) {
  std::ostringstream out;
  out << "order: " << report.group_order << "\n";
  out << "type: (" << report.type.l << ", " << report.type.m << ", " << report.type.n
      << ")" << (report.type.is_map ? "  [map]" : "") << "\n";
  out << "euler characteristic: " << report.euler_characteristic << "\n";
  out << "genus: " << report.genus << "\n";
  for (const auto& [name, entry] : report.operations) {
    out << name << ": index " << entry.index << ", coindex " << entry.coindex
        << ", kernel " << structure_label(entry.kernel_structure) << " (order "
        << entry.kernel_structure.order << ")";
    if (entry.self_dual) out << ", self-dual";
    if (entry.extreme) out << ", extreme";
    out << "\n";
  }
  return out.str();
}

}  // namespace hmdual

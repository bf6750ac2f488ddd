// Acceptance gate: each numbered criterion prints one PASS/FAIL line; the
// binary exits nonzero if any criterion fails.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hmdual/duality.hpp"
#include "hmdual/families.hpp"
#include "hmdual/hypermap.hpp"
#include "hmdual/perm_group.hpp"
#include "hmdual/permutation.hpp"
#include "hmdual/presentation.hpp"
#include "hmdual/structure.hpp"

using namespace hmdual;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<void(std::ostringstream&)>& body) {
  std::ostringstream why;
  try {
    body(why);
  } catch (const std::exception& e) {
    why << "unexpected exception: " << e.what();
  }
  const bool ok = why.str().empty();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << "\n";
  if (!ok) {
    ++failures;
    std::cerr << "  criterion " << number << " detail: " << why.str() << "\n";
  }
}

struct SuiteEntry {
  std::string name;
  OrientedHypermap hypermap;
  std::optional<Presentation> presentation;
};

/// Small cross-section of every family; used by the oracle and symmetry
/// criteria below.
std::vector<SuiteEntry> suite() {
  std::vector<SuiteEntry> all;
  const auto add = [&](const std::string& name, const std::map<std::string, int>& params) {
    FamilyResult r = make_family(name, params);
    std::string label = name;
    for (const auto& [key, value] : params)
      label += " " + key + "=" + std::to_string(value);
    all.push_back(SuiteEntry{label, std::move(r.hypermap), std::move(r.presentation)});
  };
  for (int k = 1; k <= 6; ++k) add("cyclic_selfdual", {{"k", k}});
  for (int d = 1; d <= 6; ++d) add("cyclic_extreme", {{"d", d}});
  for (int k = 3; k <= 6; ++k) add("metacyclic", {{"k", k}});
  add("c6", {});
  for (int d = 1; d <= 5; ++d) add("dihedral_map", {{"d", d}});
  for (int n = 2; n <= 6; ++n) add("quaternion", {{"n", n}});
  add("a5", {});
  add("order20", {});
  for (int d = 1; d <= 6; ++d) add("theorem9", {{"d", d}});
  return all;
}

Permutation power(const Permutation& p, int e) {
  Permutation out(p.degree());
  for (int i = 0; i < e; ++i) out = out.then(p);
  return out;
}

std::string structure_signature(const PermGroup& g) {
  const StructureDescription d = structure_describe(g);
  std::ostringstream sig;
  sig << structure_label(d) << "/order=" << d.order << "/exp=" << d.exponent << "/inv=";
  for (const std::uint64_t inv : d.abelian_invariants) sig << inv << ".";
  return sig.str();
}

}  // namespace

int main() {
  const std::vector<SuiteEntry> all = suite();

  criterion(1, "self-dual cyclic hypermaps: duality index 1, coindex k (k=1..12)",
            [](std::ostringstream& why) {
              for (int k = 1; k <= 12; ++k) {
                const OrientedHypermap h = cyclic_selfdual(k);
                const KernelResult r = operation_kernel(h, alpha_operation());
                if (r.index != 1) {
                  why << "k=" << k << ": index " << r.index;
                  return;
                }
                if (h.order() / r.index != static_cast<std::uint64_t>(k)) {
                  why << "k=" << k << ": coindex " << h.order() / r.index;
                  return;
                }
              }
            });

  criterion(2, "metacyclic hypermaps: coindex exactly k, never self-dual (k=3..10)",
            [](std::ostringstream& why) {
              for (int k = 3; k <= 10; ++k) {
                const OrientedHypermap h = metacyclic(k);
                const KernelResult r = operation_kernel(h, alpha_operation());
                const std::uint64_t coindex = h.order() / r.index;
                if (coindex != static_cast<std::uint64_t>(k)) {
                  why << "k=" << k << ": coindex " << coindex;
                  return;
                }
                if (r.index == 1) {
                  why << "k=" << k << ": unexpectedly self-dual";
                  return;
                }
              }
              const OrientedHypermap c6 = c6_example();
              const KernelResult r = operation_kernel(c6, alpha_operation());
              if (r.index != 2) {
                why << "order-6 example: index " << r.index;
                return;
              }
              if (duality_quotient(c6, alpha_operation()).order() != 3)
                why << "order-6 example: quotient order "
                    << duality_quotient(c6, alpha_operation()).order();
            });

  criterion(3, "extreme cyclic hypermaps: index d with cyclic duality group (d=1..12)",
            [](std::ostringstream& why) {
              for (int d = 1; d <= 12; ++d) {
                const OrientedHypermap h = cyclic_extreme(d);
                const KernelResult r = operation_kernel(h, alpha_operation());
                if (!is_extreme(h)) {
                  why << "d=" << d << ": not extreme";
                  return;
                }
                if (r.index != static_cast<std::uint64_t>(d)) {
                  why << "d=" << d << ": index " << r.index;
                  return;
                }
                if (!structure_describe(r.kernel).is_cyclic) {
                  why << "d=" << d << ": duality group not cyclic";
                  return;
                }
              }
            });

  criterion(4, "product with a reversed extreme cover predicts the duality group (d=1..8)",
            [](std::ostringstream& why) {
              const OrientedHypermap h(Permutation::from_cycles({{1, 2}}, 2),
                                       Permutation(2));
              for (int d = 1; d <= 8; ++d) {
                std::vector<int> cycle(2 * d);
                for (int i = 0; i < 2 * d; ++i) cycle[i] = i + 1;
                const OrientedHypermap k(Permutation::from_cycles({cycle}, 2 * d),
                                         Permutation(2 * d));
                const ProductDualityResult r = product_duality_check(k, h);
                if (r.d_order != static_cast<std::uint64_t>(d)) {
                  why << "d=" << d << ": predicted order " << r.d_order;
                  return;
                }
                const KernelResult confirm = operation_kernel(r.product, alpha_operation());
                if (confirm.index != static_cast<std::uint64_t>(d)) {
                  why << "d=" << d << ": kernel index " << confirm.index
                      << " disagrees with prediction";
                  return;
                }
              }
            });

  criterion(5, "index-d constructions: non-extreme product of order 4d; dihedral maps with Klein four quotient (d=1..10)",
            [](std::ostringstream& why) {
              for (int d = 1; d <= 10; ++d) {
                const OrientedHypermap t9 = theorem9_construction(d);
                if (t9.order() != static_cast<std::uint64_t>(4 * d)) {
                  why << "product d=" << d << ": order " << t9.order();
                  return;
                }
                if (duality_index(t9) != static_cast<std::uint64_t>(d)) {
                  why << "product d=" << d << ": index " << duality_index(t9);
                  return;
                }
                if (is_extreme(t9)) {
                  why << "product d=" << d << ": unexpectedly extreme";
                  return;
                }
                const OrientedHypermap dm = dihedral_map(d);
                if (duality_index(dm) != static_cast<std::uint64_t>(d)) {
                  why << "dihedral d=" << d << ": index " << duality_index(dm);
                  return;
                }
                const OrientedHypermap q = duality_quotient(dm, alpha_operation());
                const StructureDescription s = structure_describe(q.group());
                if (!s.name || *s.name != "V4") {
                  why << "dihedral d=" << d << ": quotient is " << structure_label(s)
                      << ", not the Klein four-group";
                  return;
                }
              }
            });

  criterion(6, "generalized quaternion suite: indices, kernels, quotients, and trivial chirality (n=2..12)",
            [](std::ostringstream& why) {
              const auto kernel_is_power_cyclic = [](const KernelResult& r,
                                                     const OrientedHypermap& h, int e) {
                const Permutation xe = power(h.x(), e);
                return r.kernel.contains(xe) && r.kernel.order() == xe.element_order() &&
                       structure_describe(r.kernel).is_cyclic;
              };
              for (const int n : {6, 10}) {
                const OrientedHypermap h = generalized_quaternion(n);
                const KernelResult r = operation_kernel(h, alpha_operation());
                if (r.index != static_cast<std::uint64_t>(n / 2)) {
                  why << "n=" << n << ": index " << r.index;
                  return;
                }
                if (!kernel_is_power_cyclic(r, h, 4)) {
                  why << "n=" << n << ": kernel is not the cyclic group on x^4";
                  return;
                }
                const StructureDescription q =
                    structure_describe(duality_quotient(h, alpha_operation()).group());
                if (!q.name || *q.name != "Q8") {
                  why << "n=" << n << ": quotient " << structure_label(q);
                  return;
                }
              }
              for (const int n : {4, 8}) {
                const OrientedHypermap h = generalized_quaternion(n);
                const KernelResult r = operation_kernel(h, alpha_operation());
                if (r.index != static_cast<std::uint64_t>(n)) {
                  why << "n=" << n << ": index " << r.index;
                  return;
                }
                if (!kernel_is_power_cyclic(r, h, 2)) {
                  why << "n=" << n << ": kernel is not the cyclic group on x^2";
                  return;
                }
                const StructureDescription q =
                    structure_describe(duality_quotient(h, alpha_operation()).group());
                if (!q.name || *q.name != "V4") {
                  why << "n=" << n << ": quotient " << structure_label(q);
                  return;
                }
              }
              if (duality_index(generalized_quaternion(2)) != 1) {
                why << "n=2: not self-dual";
                return;
              }
              for (const int n : {3, 5, 7, 9, 11}) {
                const OrientedHypermap h = generalized_quaternion(n);
                if (!is_extreme(h) ||
                    duality_index(h) != static_cast<std::uint64_t>(4 * n)) {
                  why << "n=" << n << ": index " << duality_index(h) << " of "
                      << h.order();
                  return;
                }
              }
              for (int n = 2; n <= 12; ++n) {
                const OrientedHypermap h = generalized_quaternion(n);
                if (operation_kernel(h, mirror_operation()).index != 1) {
                  why << "n=" << n << ": nontrivial chirality group";
                  return;
                }
              }
            });

  criterion(7, "published examples: the order-20 group and the alternating group on 5 points",
            [](std::ostringstream& why) {
              const OrientedHypermap o20 = order20_example();
              if (o20.order() != 20) {
                why << "order " << o20.order();
                return;
              }
              const KernelResult a = operation_kernel(o20, alpha_operation());
              if (a.index != 5 || o20.order() / a.index != 4) {
                why << "order-20 alpha index " << a.index;
                return;
              }
              if (operation_kernel(o20, beta_operation()).index != 1) {
                why << "order-20 beta index not 1";
                return;
              }
              const OrientedHypermap a5 = a5_example();
              const KernelResult aa = operation_kernel(a5, alpha_operation());
              const KernelResult ab = operation_kernel(a5, beta_operation());
              if (aa.index != 60 || ab.index != 60) {
                why << "a5 indices " << aa.index << ", " << ab.index;
                return;
              }
              if (aa.kernel.order() != 60 || ab.kernel.order() != 60)
                why << "a5 kernel orders " << aa.kernel.order() << ", "
                    << ab.kernel.order();
            });

  criterion(8, "enumeration oracle: presentation route and kernel route agree on every suite member",
            [&all](std::ostringstream& why) {
              for (const SuiteEntry& entry : all) {
                if (!entry.presentation) continue;
                for (const OperationSpec& op : named_operations()) {
                  const std::uint64_t index =
                      operation_kernel(entry.hypermap, op).index;
                  const int coindex = index_via_presentation(*entry.presentation, op);
                  if (index * static_cast<std::uint64_t>(coindex) !=
                      entry.hypermap.order()) {
                    why << entry.name << " op " << op.name << ": kernel index " << index
                        << " vs enumerated coindex " << coindex;
                    return;
                  }
                }
              }
            });

  criterion(9, "exhaustive oracle: unique minimal normal subgroup matches the kernel (every suite member of order <= 24)",
            [&all](std::ostringstream& why) {
              int checked = 0;
              for (const SuiteEntry& entry : all) {
                if (entry.hypermap.order() > 24) continue;
                ++checked;
                for (const OperationSpec& op : named_operations()) {
                  const std::uint64_t expected =
                      operation_kernel(entry.hypermap, op).index;
                  const std::uint64_t found =
                      bruteforce_minimal_normal(entry.hypermap, op);
                  if (found != expected) {
                    why << entry.name << " op " << op.name << ": exhaustive " << found
                        << " vs kernel " << expected;
                    return;
                  }
                }
              }
              if (checked < 25) why << "only " << checked << " small suite members";
            });

  criterion(10, "randomized properties on 100 marked groups from permutation pairs of degree <= 8",
            [](std::ostringstream& why) {
              std::mt19937 rng(20260814u);
              const auto random_perm = [&rng](int degree) {
                std::vector<int> images(degree);
                for (int i = 0; i < degree; ++i) images[i] = i + 1;
                std::shuffle(images.begin(), images.end(), rng);
                return Permutation::from_images(images);
              };
              std::uniform_int_distribution<int> degree_dist(1, 8);
              for (int sample = 0; sample < 100; ++sample) {
                const int degree = degree_dist(rng);
                const OrientedHypermap h(random_perm(degree), random_perm(degree));
                const std::uint64_t order = h.order();
                for (const OperationSpec& op : named_operations()) {
                  const KernelResult r = operation_kernel(h, op);
                  if (order % r.index != 0) {
                    why << "sample " << sample << " op " << op.name
                        << ": index does not divide the order";
                    return;
                  }
                  const std::uint64_t coindex = order / r.index;
                  if (r.index * coindex != order) {
                    why << "sample " << sample << " op " << op.name
                        << ": index*coindex mismatch";
                    return;
                  }
                  for (const Permutation& kgen : r.kernel.generators())
                    for (const Permutation& ggen : h.group().generators())
                      if (!r.kernel.contains(conjugate(kgen, ggen))) {
                        why << "sample " << sample << " op " << op.name
                            << ": kernel not normal";
                        return;
                      }
                  const OrientedHypermap dual = apply_operation(h, op);
                  const OrientedHypermap twice = apply_operation(dual, op);
                  if (twice.x() != h.x() || twice.y() != h.y()) {
                    why << "sample " << sample << " op " << op.name
                        << ": double dual changed the marks";
                    return;
                  }
                  if ((r.index == 1) != marked_iso(h, dual)) {
                    why << "sample " << sample << " op " << op.name
                        << ": self-duality and marked isomorphism disagree";
                    return;
                  }
                  if (parallel_product(h, dual).order() != order * r.index) {
                    why << "sample " << sample << " op " << op.name
                        << ": parallel product order is not order*index";
                    return;
                  }
                  const OrientedHypermap quotient = duality_quotient(h, op);
                  if (operation_kernel(quotient, op).index != 1) {
                    why << "sample " << sample << " op " << op.name
                        << ": quotient is not self-dual";
                    return;
                  }
                }
                if (is_self_dual(h) != marked_iso(h, alpha_dual(h))) {
                  why << "sample " << sample << ": is_self_dual disagrees";
                  return;
                }
              }
            });

  criterion(11, "duality groups of a hypermap and its dual have equal order (suite), equal structure when order <= 24",
            [&all](std::ostringstream& why) {
              for (const SuiteEntry& entry : all) {
                const KernelResult here =
                    operation_kernel(entry.hypermap, alpha_operation());
                const KernelResult there =
                    operation_kernel(alpha_dual(entry.hypermap), alpha_operation());
                if (here.index != there.index) {
                  why << entry.name << ": " << here.index << " vs " << there.index;
                  return;
                }
                if (entry.hypermap.order() <= 24 &&
                    structure_signature(here.kernel) != structure_signature(there.kernel)) {
                  why << entry.name << ": kernel structures differ ("
                      << structure_signature(here.kernel) << " vs "
                      << structure_signature(there.kernel) << ")";
                  return;
                }
              }
            });

  if (failures == 0) {
    std::cout << "all 11 criteria passed\n";
    return 0;
  }
  std::cerr << failures << " criteria failed\n";
  return 1;
}

#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmdual/errors.hpp"
#include "hmdual/hypermap.hpp"
#include "hmdual/perm_group.hpp"
#include "hmdual/permutation.hpp"
#include "hmdual/presentation.hpp"
#include "hmdual/structure.hpp"
#include "hmdual/todd_coxeter.hpp"
#include "hmdual/word.hpp"

namespace hmdual {

/// A generator re-marking (x, y) ↦ (u(x,y), v(x,y)) given by words over the
/// two marks. `involutory` records whether applying the assignment twice is
/// the identity assignment on the free group; it is computed, not declared.
struct OperationSpec {
  std::string name;
  Word u;
  Word v;
  bool involutory = false;

  static OperationSpec custom(std::string name, Word u, Word v) {
    OperationSpec op;
    op.name = std::move(name);
    op.involutory = u.substitute({u, v}) == Word::generator(0) &&
                    v.substitute({u, v}) == Word::generator(1);
    op.u = std::move(u);
    op.v = std::move(v);
    return op;
  }
};

/// x ↦ y, y ↦ x.
inline OperationSpec alpha_operation() {
  return OperationSpec::custom("alpha", Word::generator(1), Word::generator(0));
}

/// x ↦ y⁻¹, y ↦ x⁻¹.
inline OperationSpec beta_operation() {
  return OperationSpec::custom("beta", Word::generator(1, true), Word::generator(0, true));
}

/// x ↦ x⁻¹, y ↦ y⁻¹.
inline OperationSpec mirror_operation() {
  return OperationSpec::custom("mirror", Word::generator(0, true), Word::generator(1, true));
}

inline std::vector<OperationSpec> named_operations() {
  return {alpha_operation(), beta_operation(), mirror_operation()};
}

/// The hypermap with marks re-assigned by op, on the same points.
inline OrientedHypermap apply_operation(const OrientedHypermap& h, const OperationSpec& op) {
  const std::vector<Permutation> marks = {h.x(), h.y()};
  return OrientedHypermap(op.u.evaluate(marks, h.degree()),
                          op.v.evaluate(marks, h.degree()));
}

struct KernelResult {
  PermGroup kernel;
  std::uint64_t index = 1;
  /// True when op is involutory, so the kernel is the minimal normal subgroup
  /// whose quotient is fixed by op; for other assignments the same
  /// construction is reported without that certification.
  bool minimal_normal_certified = false;
};

/// The duality group of h under op: builds K = ⟨(x,u), (y,v)⟩ on two copies
/// of h's point set and reads the pointwise stabilizer of the first copy off
/// the stabilizer chain; its second-copy image D is a normal subgroup of G
/// with |K| = |G|·|D|. index = |D|.
inline KernelResult operation_kernel(const OrientedHypermap& h, const OperationSpec& op,
                                     int degree_cap = kDefaultDegreeCap) {
  const int n = h.degree();
  const std::vector<Permutation> marks = {h.x(), h.y()};
  const Permutation u = op.u.evaluate(marks, n);
  const Permutation v = op.v.evaluate(marks, n);
  if (PermGroup(n, {u, v}).order() != h.order())
    throw ImagesDoNotGenerate("the assignment's images generate a proper subgroup");

  const OrientedHypermap dual(u, v);
  const PermGroup k = parallel_product(h, dual, degree_cap);
  if (k.order() % h.order() != 0)
    throw InternalInconsistency("pair-subgroup order is not a multiple of the group order");
  const std::uint64_t index = k.order() / h.order();

  std::vector<int> first_copy;
  for (int i = 1; i <= n; ++i) first_copy.push_back(i);
  const PermGroup stab = k.pointwise_stabilizer(first_copy);
  if (stab.order() != index)
    throw InternalInconsistency("first-copy stabilizer order disagrees with the index");

  std::vector<Permutation> restricted;
  for (const auto& g : stab.generators()) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i) - 1] = g(i + n) - n;
    restricted.push_back(Permutation::from_images(images));
  }
  KernelResult result{PermGroup(n, restricted), index, op.involutory};
  if (result.kernel.order() != index)
    throw InternalInconsistency("second-copy restriction is not faithful");
  return result;
}

inline std::uint64_t duality_index(const OrientedHypermap& h) {
  return operation_kernel(h, alpha_operation()).index;
}

inline std::uint64_t duality_coindex(const OrientedHypermap& h) {
  return h.order() / duality_index(h);
}

inline bool is_self_dual(const OrientedHypermap& h) { return duality_index(h) == 1; }

inline bool is_extreme(const OrientedHypermap& h) {
  return duality_index(h) == h.order();
}

/// The quotient hypermap (G/D, xD, yD) where D is the op kernel. Its
/// op-index is 1 and its order is the coindex. A trivial kernel returns h
/// unchanged (same marked group, original action).
inline OrientedHypermap duality_quotient(const OrientedHypermap& h, const OperationSpec& op,
                                         int degree_cap = kDefaultDegreeCap) {
  const KernelResult kr = operation_kernel(h, op, degree_cap);
  if (kr.index == 1) return h;
  const CosetAction action = coset_action(h.group(), kr.kernel, degree_cap);
  const OrientedHypermap quotient(action.generator_images[0], action.generator_images[1]);
  if (quotient.order() != h.order() / kr.index)
    throw InternalInconsistency("quotient order disagrees with the coindex");
  return quotient;
}

/// Enumerates the largest quotient shared by the presented group and its op
/// re-marking: the coindex. The kernel route must satisfy
/// index = |G| / coindex; the two algorithms are independent.
inline int index_via_presentation(const Presentation& p, const OperationSpec& op,
                                  int max_cosets = kDefaultMaxCosets) {
  return todd_coxeter(p.augment_with_assignment({op.u, op.v}), {}, max_cosets).index;
}

namespace detail {

/// Set closure of the marks by plain multiplication, independent of the
/// stabilizer-chain machinery. Element 0 is the identity. Stops as soon as
/// the closure exceeds cap elements so oversized inputs fail fast.
inline std::vector<Permutation> tiny_elements(const OrientedHypermap& h, std::size_t cap) {
  std::vector<Permutation> elements = {Permutation(h.degree())};
  const std::vector<Permutation> gens = {h.x(), h.y()};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : gens) {
      const Permutation next = elements[i].then(g);
      bool seen = false;
      for (const auto& e : elements)
        if (e == next) { seen = true; break; }
      if (!seen) {
        elements.push_back(next);
        if (elements.size() > cap) return elements;
      }
    }
  return elements;
}

}  // namespace detail

/// Exhaustive oracle for the kernel order on groups of order ≤ 24. Every
/// subgroup is found as the closure of some generating subset of size ≤ 4
/// (sufficient: the largest minimal generating set at these orders is the
/// elementary abelian group of order 16, which needs 4). Normal subgroups N
/// are kept when (G/N, x̄, ȳ) ≅ (G/N, ū, v̄) as marked groups, checked by
/// extending x̄ ↦ ū, ȳ ↦ v̄ along canonical words and verifying full
/// multiplicativity and bijectivity. Returns the minimum qualifying |N|.
inline std::uint64_t bruteforce_minimal_normal(const OrientedHypermap& h,
                                               const OperationSpec& op) {
  const std::vector<Permutation> elements = detail::tiny_elements(h, 24);
  const int size = static_cast<int>(elements.size());
  if (size > 24) throw TooLarge("brute-force oracle is limited to order 24");

  auto element_index = [&](const Permutation& p) {
    for (int i = 0; i < size; ++i)
      if (elements[static_cast<std::size_t>(i)] == p) return i;
    throw InternalInconsistency("element escaped its own closure");
  };
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(size),
                                     std::vector<int>(static_cast<std::size_t>(size)));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = element_index(
          elements[static_cast<std::size_t>(a)].then(elements[static_cast<std::size_t>(b)]));

  const std::vector<Permutation> marks = {h.x(), h.y()};
  const int xi = element_index(h.x());
  const int yi = element_index(h.y());
  const int ui = element_index(op.u.evaluate(marks, h.degree()));
  const int vi = element_index(op.v.evaluate(marks, h.degree()));

  using Mask = std::uint32_t;
  auto close = [&](Mask seed) {
    Mask mask = seed | 1u;  // identity is element 0
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < size; ++a)
        if (mask >> a & 1u)
          for (int b = 0; b < size; ++b)
            if (mask >> b & 1u) {
              const int c = mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
              if (!(mask >> c & 1u)) {
                mask |= Mask{1} << c;
                grew = true;
              }
            }
    }
    return mask;
  };

  std::vector<Mask> subgroups;
  auto add_subgroup = [&](Mask seed) {
    const Mask closed = close(seed);
    for (const Mask m : subgroups)
      if (m == closed) return;
    subgroups.push_back(closed);
  };
  add_subgroup(0);
  for (int a = 0; a < size; ++a) {
    add_subgroup(Mask{1} << a);
    for (int b = a + 1; b < size; ++b) {
      add_subgroup(Mask{1} << a | Mask{1} << b);
      for (int c = b + 1; c < size; ++c) {
        add_subgroup(Mask{1} << a | Mask{1} << b | Mask{1} << c);
        for (int d = c + 1; d < size; ++d)
          add_subgroup(Mask{1} << a | Mask{1} << b | Mask{1} << c | Mask{1} << d);
      }
    }
  }

  auto is_normal = [&](Mask mask) {
    for (const int g : {xi, yi}) {
      int ginv = 0;
      while (mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(ginv)] != 0) ++ginv;
      for (int a = 0; a < size; ++a)
        if (mask >> a & 1u) {
          const int conj = mult[static_cast<std::size_t>(
              mult[static_cast<std::size_t>(ginv)][static_cast<std::size_t>(a)])]
                              [static_cast<std::size_t>(g)];
          if (!(mask >> conj & 1u)) return false;
        }
    }
    return true;
  };

  // Marked-iso test on the quotient by N, entirely on the multiplication table.
  auto quotient_self_paired = [&](Mask mask) {
    std::vector<int> coset_of(static_cast<std::size_t>(size), -1);
    std::vector<int> reps;
    for (int a = 0; a < size; ++a) {
      if (coset_of[static_cast<std::size_t>(a)] >= 0) continue;
      const int id = static_cast<int>(reps.size());
      reps.push_back(a);
      for (int n = 0; n < size; ++n)
        if (mask >> n & 1u)
          coset_of[static_cast<std::size_t>(
              mult[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)])] = id;
    }
    const int q = static_cast<int>(reps.size());
    auto qmul = [&](int a, int b) {
      return coset_of[static_cast<std::size_t>(
          mult[static_cast<std::size_t>(reps[static_cast<std::size_t>(a)])]
              [static_cast<std::size_t>(reps[static_cast<std::size_t>(b)])])];
    };
    const int qx = coset_of[static_cast<std::size_t>(xi)];
    const int qy = coset_of[static_cast<std::size_t>(yi)];
    const int qu = coset_of[static_cast<std::size_t>(ui)];
    const int qv = coset_of[static_cast<std::size_t>(vi)];

    // Canonical positive words via breadth-first search from the identity.
    std::vector<int> phi(static_cast<std::size_t>(q), -1);
    std::vector<int> frontier = {coset_of[0]};
    phi[static_cast<std::size_t>(coset_of[0])] = coset_of[0];
    while (!frontier.empty()) {
      std::vector<int> next;
      for (const int c : frontier)
        for (const auto& [gen, img] : {std::pair{qx, qu}, std::pair{qy, qv}}) {
          const int step = qmul(c, gen);
          if (phi[static_cast<std::size_t>(step)] < 0) {
            phi[static_cast<std::size_t>(step)] =
                qmul(phi[static_cast<std::size_t>(c)], img);
            next.push_back(step);
          }
        }
      frontier = std::move(next);
    }
    if (phi[static_cast<std::size_t>(qx)] != qu || phi[static_cast<std::size_t>(qy)] != qv)
      return false;
    std::vector<bool> hit(static_cast<std::size_t>(q), false);
    for (const int image : phi) {
      if (image < 0 || hit[static_cast<std::size_t>(image)]) return false;
      hit[static_cast<std::size_t>(image)] = true;
    }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        if (phi[static_cast<std::size_t>(qmul(a, b))] !=
            qmul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]))
          return false;
    return true;
  };

  std::uint64_t best = 0;
  int winners = 0;
  for (const Mask mask : subgroups) {
    if (!is_normal(mask)) continue;
    if (!quotient_self_paired(mask)) continue;
    const auto order = static_cast<std::uint64_t>(std::popcount(mask));
    if (winners == 0 || order < best) {
      best = order;
      winners = 1;
    } else if (order == best) {
      ++winners;
    }
  }
  if (winners == 0) throw InternalInconsistency("no qualifying normal subgroup found");
  if (winners > 1)
    throw NonUniqueMinimum("two distinct minimal normal subgroups qualify");
  return best;
}

struct ProductDualityResult {
  OrientedHypermap product;
  std::uint64_t d_order = 1;
};

/// Given an extreme k covering h, the product L = k × alpha_dual(h) has
/// duality group of order |Mon(k)| / |Mon(h)|; the returned d_order is that
/// predicted value (callers can confirm it against operation_kernel on L).
inline ProductDualityResult product_duality_check(const OrientedHypermap& k,
                                                  const OrientedHypermap& h) {
  if (!is_extreme(k))
    throw PreconditionFailed("the covering hypermap must have extreme duality index");
  if (!covers(k, h))
    throw PreconditionFailed("the extreme hypermap must cover the second hypermap");
  OrientedHypermap product = direct_product(k, alpha_dual(h));
  return ProductDualityResult{std::move(product), k.order() / h.order()};
}

struct OperationReport {
  std::uint64_t index = 1;
  std::uint64_t coindex = 1;
  StructureDescription kernel_structure;
  bool self_dual = false;
  bool extreme = false;
};

struct DualityReport {
  std::uint64_t group_order = 1;
  HypermapType type;
  long long euler_characteristic = 2;
  long long genus = 0;
  std::map<std::string, OperationReport> operations;
};

struct AnalyzeOptions {
  bool alpha = true;
  bool beta = true;
  bool mirror = true;
};

inline DualityReport analyze(const OrientedHypermap& h, const AnalyzeOptions& opts = {}) {
  DualityReport report;
  report.group_order = h.order();
  report.type = hypermap_type(h);
  report.euler_characteristic = euler_characteristic(h);
  report.genus = genus(h);
  for (const OperationSpec& op : named_operations()) {
    if ((op.name == "alpha" && !opts.alpha) || (op.name == "beta" && !opts.beta) ||
        (op.name == "mirror" && !opts.mirror))
      continue;
    const KernelResult kr = operation_kernel(h, op);
    OperationReport entry;
    entry.index = kr.index;
    if (h.order() % kr.index != 0)
      throw InternalInconsistency("kernel index does not divide the group order");
    entry.coindex = h.order() / kr.index;
    entry.kernel_structure = structure_describe(kr.kernel);
    entry.self_dual = kr.index == 1;
    entry.extreme = kr.index == h.order();
    report.operations.emplace(op.name, std::move(entry));
  }
  return report;
}

}  // namespace hmdual

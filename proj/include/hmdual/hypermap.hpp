#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hmdual/errors.hpp"
#include "hmdual/perm_group.hpp"
#include "hmdual/permutation.hpp"

namespace hmdual {

/// An oriented regular hypermap presented as a marked group: the monodromy
/// group together with the ordered generator pair (x, y). The carrying
/// permutation action only needs to be faithful; every quantity computed here
/// depends on the marked group alone.
class OrientedHypermap {
public:
  OrientedHypermap(Permutation x, Permutation y, int degree_cap = kDefaultDegreeCap)
      : x_(std::move(x)), y_(std::move(y)),
        group_(make_group(x_, y_, degree_cap)) {}

  const Permutation& x() const { return x_; }
  const Permutation& y() const { return y_; }
  const PermGroup& group() const { return group_; }
  int degree() const { return group_.degree(); }
  std::uint64_t order() const { return group_.order(); }

private:
  static PermGroup make_group(const Permutation& x, const Permutation& y, int degree_cap) {
    if (x.degree() != y.degree())
      throw DegreeMismatch("marks must act on the same points");
    return PermGroup(x.degree(), {x, y}, {}, degree_cap);
  }

  Permutation x_;
  Permutation y_;
  PermGroup group_;
};

inline OrientedHypermap alpha_dual(const OrientedHypermap& h) {
  return OrientedHypermap(h.y(), h.x());
}

inline OrientedHypermap beta_dual(const OrientedHypermap& h) {
  return OrientedHypermap(h.y().inverse(), h.x().inverse());
}

inline OrientedHypermap mirror(const OrientedHypermap& h) {
  return OrientedHypermap(h.x().inverse(), h.y().inverse());
}

/// The same marked group acting regularly on its |G| elements.
inline OrientedHypermap regular_form(const OrientedHypermap& h,
                                     int degree_cap = kDefaultDegreeCap) {
  const CosetAction action =
      coset_action(h.group(), PermGroup::trivial(h.degree()), degree_cap);
  return OrientedHypermap(action.generator_images[0], action.generator_images[1]);
}

namespace detail {

/// p acting on the first n1 points and q on the next n2 of 1..n1+n2.
inline Permutation juxtapose(const Permutation& p, const Permutation& q) {
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(p.degree() + q.degree()));
  for (int i = 1; i <= p.degree(); ++i) images.push_back(p(i));
  for (int i = 1; i <= q.degree(); ++i) images.push_back(q(i) + p.degree());
  return Permutation::from_images(images);
}

}  // namespace detail

/// K = ⟨(x₁,x₂), (y₁,y₂)⟩ on the disjoint union of the two point sets,
/// with base ordered first-copy-first so the pointwise stabilizer of the
/// first copy falls out of the stabilizer chain.
inline PermGroup parallel_product(const OrientedHypermap& h1, const OrientedHypermap& h2,
                                  int degree_cap = kDefaultDegreeCap) {
  std::vector<int> base_hint;
  for (int i = 1; i <= h1.degree(); ++i) base_hint.push_back(i);
  return PermGroup(h1.degree() + h2.degree(),
                   {detail::juxtapose(h1.x(), h2.x()), detail::juxtapose(h1.y(), h2.y())},
                   base_hint, degree_cap);
}

/// True iff x₁↦x₂, y₁↦y₂ extends to an epimorphism G₁ → G₂.
inline bool covers(const OrientedHypermap& h1, const OrientedHypermap& h2) {
  return parallel_product(h1, h2).order() == h1.order();
}

/// True iff x₁↦x₂, y₁↦y₂ extends to a group isomorphism.
inline bool marked_iso(const OrientedHypermap& h1, const OrientedHypermap& h2) {
  return h1.order() == h2.order() && covers(h1, h2);
}

/// True iff the greatest common quotient of the marked groups is trivial,
/// i.e. the pair subgroup is the full direct product.
inline bool orthogonal(const OrientedHypermap& h1, const OrientedHypermap& h2) {
  return parallel_product(h1, h2).order() ==
         detail::checked_mul(h1.order(), h2.order());
}

/// Marks ((x₁,x₂), (y₁,y₂)) on the disjoint union; requires orthogonality so
/// the result's monodromy group is the full direct product.
inline OrientedHypermap direct_product(const OrientedHypermap& h1,
                                       const OrientedHypermap& h2) {
  if (!orthogonal(h1, h2))
    throw NotOrthogonal("the marked groups share a nontrivial common quotient");
  return OrientedHypermap(detail::juxtapose(h1.x(), h2.x()),
                          detail::juxtapose(h1.y(), h2.y()));
}

struct HypermapType {
  std::uint64_t l = 1;
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  bool is_map = false;
  bool operator==(const HypermapType&) const = default;
};

/// (order of x, order of y, order of xy); a map is a hypermap with n ≤ 2.
inline HypermapType hypermap_type(const OrientedHypermap& h) {
  HypermapType t;
  t.l = h.x().element_order();
  t.m = h.y().element_order();
  t.n = h.x().then(h.y()).element_order();
  t.is_map = t.n <= 2;
  return t;
}

/// χ = V + E + F − |G| with V = |G|/l, E = |G|/m, F = |G|/n.
inline long long euler_characteristic(const OrientedHypermap& h) {
  const HypermapType t = hypermap_type(h);
  const std::uint64_t g = h.order();
  return static_cast<long long>(g / t.l) + static_cast<long long>(g / t.m) +
         static_cast<long long>(g / t.n) - static_cast<long long>(g);
}

inline long long genus(const OrientedHypermap& h) {
  const long long chi = euler_characteristic(h);
  if ((2 - chi) % 2 != 0)
    throw InternalInconsistency("odd Euler characteristic on an oriented hypermap");
  return (2 - chi) / 2;
}

}  // namespace hmdual

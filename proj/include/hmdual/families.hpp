#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmdual/errors.hpp"
#include "hmdual/hypermap.hpp"
#include "hmdual/permutation.hpp"
#include "hmdual/presentation.hpp"
#include "hmdual/todd_coxeter.hpp"
#include "hmdual/word.hpp"

namespace hmdual {

namespace detail {

inline Permutation perm_power(const Permutation& p, int e) {
  Permutation r(p.degree());
  const Permutation base = e < 0 ? p.inverse() : p;
  for (int i = e < 0 ? -e : e; i > 0; --i) r = r.then(base);
  return r;
}

inline Permutation full_cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i) - 1] = i % n + 1;
  return Permutation::from_images(images);
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int multiplicative_order(int u, int q) {
  int order = 1;
  long long pow = u % q;
  while (pow != 1) {
    pow = pow * u % q;
    ++order;
  }
  return order;
}

inline Word word_x(bool inverted = false) { return Word::generator(0, inverted); }
inline Word word_y(bool inverted = false) { return Word::generator(1, inverted); }

inline const std::vector<std::string>& xy_names() {
  static const std::vector<std::string> names = {"x", "y"};
  return names;
}

inline OrientedHypermap from_presentation(const Presentation& p, int max_cosets) {
  const TcResult r = todd_coxeter(p, {}, max_cosets);
  return OrientedHypermap(r.generator_images[0], r.generator_images[1]);
}

}  // namespace detail

/// (C_k, g, g): self-dual of order k; k = 1 is the one-dart hypermap.
inline OrientedHypermap cyclic_selfdual(int k) {
  if (k < 1) throw BadParameter("cyclic_selfdual needs k >= 1");
  const Permutation g = detail::full_cycle(k);
  return OrientedHypermap(g, g);
}

inline Presentation cyclic_selfdual_presentation(int k) {
  if (k < 1) throw BadParameter("cyclic_selfdual needs k >= 1");
  return Presentation(detail::xy_names(),
                      {detail::word_x().pow(k), detail::word_x() * detail::word_y(true)});
}

/// (C_d, g, 1): extreme, with cyclic duality group of order d.
inline OrientedHypermap cyclic_extreme(int d) {
  if (d < 1) throw BadParameter("cyclic_extreme needs d >= 1");
  return OrientedHypermap(detail::full_cycle(d), Permutation(d));
}

inline Presentation cyclic_extreme_presentation(int d) {
  if (d < 1) throw BadParameter("cyclic_extreme needs d >= 1");
  return Presentation(detail::xy_names(), {detail::word_x().pow(d), detail::word_y()});
}

struct MetacyclicParameters {
  int q = 0;  // smallest prime ≡ 1 (mod k)
  int u = 0;  // smallest residue of multiplicative order exactly k mod q
};

inline MetacyclicParameters metacyclic_parameters(int k) {
  if (k < 3) throw BadParameter("metacyclic needs k >= 3");
  MetacyclicParameters p;
  for (int q = k + 1;; q += k)
    if (detail::is_prime(q)) {
      p.q = q;
      break;
    }
  for (int u = 2; u < p.q; ++u)
    if (detail::multiplicative_order(u, p.q) == k) {
      p.u = u;
      break;
    }
  if (p.u == 0) throw InternalInconsistency("no residue of the requested order");
  return p;
}

/// The metacyclic group C_q ⋊ C_k on the q residues (point i is residue i−1),
/// h: r ↦ r+1 and g: r ↦ u·r, marked (a, b) = (g, g⁻¹h) so that ab = h.
/// Not self-dual; coindex k, index q.
inline OrientedHypermap metacyclic(int k) {
  const MetacyclicParameters p = metacyclic_parameters(k);
  std::vector<int> h_images(static_cast<std::size_t>(p.q));
  std::vector<int> g_images(static_cast<std::size_t>(p.q));
  for (int i = 1; i <= p.q; ++i) {
    h_images[static_cast<std::size_t>(i) - 1] = i % p.q + 1;
    g_images[static_cast<std::size_t>(i) - 1] =
        static_cast<int>(static_cast<long long>(p.u) * (i - 1) % p.q) + 1;
  }
  const Permutation h = Permutation::from_images(h_images);
  const Permutation g = Permutation::from_images(g_images);
  return OrientedHypermap(g, g.inverse().then(h));
}

/// ⟨a, b | (ab)^q, a^k, a⁻¹(ab)a(ab)^−u⟩ — the same group on marks (a, b).
inline Presentation metacyclic_presentation(int k) {
  const MetacyclicParameters p = metacyclic_parameters(k);
  const Word a = Word::generator(0);
  const Word h = Word::generator(0) * Word::generator(1);
  return Presentation({"a", "b"},
                      {h.pow(p.q), a.pow(k), a.inverse() * h * a * h.pow(-p.u)});
}

/// (C₆, g, g⁴): duality index 2, coindex 3.
inline OrientedHypermap c6_example() {
  const Permutation g = detail::full_cycle(6);
  return OrientedHypermap(g, detail::perm_power(g, 4));
}

inline Presentation c6_presentation() {
  return Presentation(detail::xy_names(),
                      {detail::word_x().pow(6),
                       detail::word_x().pow(4) * detail::word_y(true)});
}

/// The dihedral map of the 2d-gon: rotation x and reflection y generate a
/// dihedral group of order 4d, type (2d, 2, 2). The 2-gon's rotation and
/// reflection coincide on 2 points, so d = 1 uses the faithful Klein
/// four-group action ⟨(1 2), (3 4)⟩ instead.
inline OrientedHypermap dihedral_map(int d) {
  if (d < 1) throw BadParameter("dihedral_map needs d >= 1");
  if (d == 1)
    return OrientedHypermap(Permutation::from_cycles({{1, 2}}, 4),
                            Permutation::from_cycles({{3, 4}}, 4));
  const int n = 2 * d;
  std::vector<int> reflect(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    reflect[static_cast<std::size_t>(i) - 1] = (n - (i - 1)) % n + 1;
  return OrientedHypermap(detail::full_cycle(n), Permutation::from_images(reflect));
}

inline Presentation dihedral_presentation(int d) {
  if (d < 1) throw BadParameter("dihedral_map needs d >= 1");
  const Word x = detail::word_x();
  const Word y = detail::word_y();
  return Presentation(detail::xy_names(), {x.pow(2 * d), y.pow(2), (x * y).pow(2)});
}

/// ⟨x, y | xⁿ = y², x²ⁿ = 1, y⁻¹xy = x⁻¹⟩, order 4n.
inline Presentation quaternion_presentation(int n) {
  if (n < 2) throw BadParameter("generalized_quaternion needs n >= 2");
  const Word x = detail::word_x();
  const Word y = detail::word_y();
  return Presentation(detail::xy_names(),
                      {x.pow(n) * y.pow(-2), x.pow(2 * n),
                       y.inverse() * x * y * x});
}

/// The generalized quaternion group of order 4n acting on its 4n elements.
inline OrientedHypermap generalized_quaternion(int n, int max_cosets = kDefaultMaxCosets) {
  return detail::from_presentation(quaternion_presentation(n), max_cosets);
}

/// (A₅, (1 2 3 4 5), (1 2 3)): both dualities extreme, mirror index 1.
inline OrientedHypermap a5_example() {
  return OrientedHypermap(Permutation::from_cycles({{1, 2, 3, 4, 5}}, 5),
                          Permutation::from_cycles({{1, 2, 3}}, 5));
}

/// ⟨x, y | x⁴, y⁴, xy = y²x²⟩ of order 20: β-self-dual but not α-self-dual.
inline Presentation order20_presentation() {
  const Word x = detail::word_x();
  const Word y = detail::word_y();
  return Presentation(detail::xy_names(),
                      {x.pow(4), y.pow(4), x * y * x.pow(-2) * y.pow(-2)});
}

inline OrientedHypermap order20_example(int max_cosets = kDefaultMaxCosets) {
  return detail::from_presentation(order20_presentation(), max_cosets);
}

/// L = (C₂d, g, 1) × alpha_dual(C₂, ḡ, 1): order 4d, duality index d, never
/// extreme (the duality group is the second factor's mirror image).
inline OrientedHypermap theorem9_construction(int d) {
  if (d < 1) throw BadParameter("theorem9 needs d >= 1");
  const OrientedHypermap k(detail::full_cycle(2 * d), Permutation(2 * d));
  const OrientedHypermap h(detail::full_cycle(2), Permutation(2));
  return direct_product(k, alpha_dual(h));
}

/// C₂d × C₂ on marks (x, y) = ((g,1), (1,h)).
inline Presentation theorem9_presentation(int d) {
  if (d < 1) throw BadParameter("theorem9 needs d >= 1");
  const Word x = detail::word_x();
  const Word y = detail::word_y();
  return Presentation(detail::xy_names(),
                      {x.pow(2 * d), y.pow(2),
                       x.inverse() * y.inverse() * x * y});
}

/// A constructed family instance: the hypermap plus, when the family is
/// defined by (or has) a presentation, that presentation for the
/// enumeration-based cross-checks.
struct FamilyResult {
  OrientedHypermap hypermap;
  std::optional<Presentation> presentation;
};

/// CLI-facing registry. Family names and parameter keys:
///   cyclic_selfdual(k), cyclic_extreme(d), metacyclic(k), c6,
///   dihedral_map(d), quaternion(n), a5, order20, theorem9(d).
inline FamilyResult make_family(const std::string& name,
                                const std::map<std::string, int>& parameters,
                                int max_cosets = kDefaultMaxCosets) {
  auto need = [&](const char* key) {
    if (parameters.size() != 1 || parameters.begin()->first != key)
      throw BadParameter("family '" + name + "' takes exactly one parameter: " +
                         std::string(key));
    return parameters.begin()->second;
  };
  auto reject_params = [&] {
    if (!parameters.empty())
      throw BadParameter("family '" + name + "' takes no parameters");
  };
  if (name == "cyclic_selfdual") {
    const int k = need("k");
    return {cyclic_selfdual(k), cyclic_selfdual_presentation(k)};
  }
  if (name == "cyclic_extreme") {
    const int d = need("d");
    return {cyclic_extreme(d), cyclic_extreme_presentation(d)};
  }
  if (name == "metacyclic") {
    const int k = need("k");
    return {metacyclic(k), metacyclic_presentation(k)};
  }
  if (name == "c6") {
    reject_params();
    return {c6_example(), c6_presentation()};
  }
  if (name == "dihedral_map") {
    const int d = need("d");
    return {dihedral_map(d), dihedral_presentation(d)};
  }
  if (name == "quaternion") {
    const int n = need("n");
    return {generalized_quaternion(n, max_cosets), quaternion_presentation(n)};
  }
  if (name == "a5") {
    reject_params();
    return {a5_example(), std::nullopt};
  }
  if (name == "order20") {
    reject_params();
    return {order20_example(max_cosets), order20_presentation()};
  }
  if (name == "theorem9") {
    const int d = need("d");
    return {theorem9_construction(d), theorem9_presentation(d)};
  }
  throw BadParameter("unknown family '" + name + "'");
}

}  // namespace hmdual

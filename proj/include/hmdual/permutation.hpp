#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "hmdual/errors.hpp"

namespace hmdual {

/// Default bound on permutation degrees constructed by this library.
inline constexpr int kDefaultDegreeCap = 100000;

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw TooLarge("order arithmetic exceeds 64 bits");
  return a * b;
}

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

struct IntVectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

/// A bijection of {1, ..., degree}. Points are 1-based everywhere.
///
/// The library uses right actions throughout: products act left to right,
/// so compose(p, q) applies p first and q second.
class Permutation {
public:
  /// Identity on {1..degree}.
  explicit Permutation(int degree) : images_(static_cast<std::size_t>(check_degree(degree))) {
    std::iota(images_.begin(), images_.end(), 1);
  }

  /// Builds from the full image table: images[i-1] is the image of point i.
  static Permutation from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    check_degree(n);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images) {
      if (v < 1 || v > n)
        throw PointOutOfRange("image " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v - 1)])
        throw RepeatedPoint("image " + std::to_string(v) + " appears twice");
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds from disjoint cycles on {1..degree}; unlisted points are fixed.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
    Permutation p(degree);
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    for (const auto& cycle : cycles) {
      for (int v : cycle) {
        if (v < 1 || v > degree)
          throw PointOutOfRange("point " + std::to_string(v) + " outside 1.." +
                                std::to_string(degree));
        if (seen[static_cast<std::size_t>(v - 1)])
          throw RepeatedPoint("point " + std::to_string(v) + " repeated in cycle notation");
        seen[static_cast<std::size_t>(v - 1)] = 1;
      }
      const std::size_t len = cycle.size();
      for (std::size_t i = 0; i < len; ++i)
        p.images_[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % len];
    }
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of a point under this permutation.
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }

  const std::vector<int>& images() const { return images_; }

  /// compose(*this, q): apply *this first, then q.
  Permutation then(const Permutation& q) const {
    if (q.degree() != degree()) throw DegreeMismatch("composing permutations of unequal degree");
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[i] = q.images_[static_cast<std::size_t>(images_[i] - 1)];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  bool moves(int point) const { return (*this)(point) != point; }

  /// Smallest moved point, or 0 for the identity.
  int smallest_moved_point() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return static_cast<int>(i) + 1;
    return 0;
  }

  /// Order as a group element: lcm of the cycle lengths.
  std::uint64_t element_order() const {
    std::uint64_t order = 1;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start - 1)]) continue;
      std::uint64_t len = 0;
      int p = start;
      do {
        seen[static_cast<std::size_t>(p - 1)] = 1;
        p = (*this)(p);
        ++len;
      } while (p != start);
      order = detail::checked_lcm(order, len);
    }
    return order;
  }

  /// Cycles of length >= 2, ordered by smallest moved point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> result;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start - 1)] || !moves(start)) continue;
      std::vector<int> cycle;
      int p = start;
      do {
        seen[static_cast<std::size_t>(p - 1)] = 1;
        cycle.push_back(p);
        p = (*this)(p);
      } while (p != start);
      result.push_back(std::move(cycle));
    }
    return result;
  }

  bool operator==(const Permutation& other) const = default;

private:
  Permutation() = default;

  static int check_degree(int degree) {
    if (degree < 1) throw BadParameter("degree must be at least 1");
    return degree;
  }

  std::vector<int> images_;
};

/// Right-action product: apply p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) { return p.then(q); }

/// Conjugate p^s = s^{-1} p s.
inline Permutation conjugate(const Permutation& p, const Permutation& s) {
  return s.inverse().then(p).then(s);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return detail::IntVectorHash{}(p.images());
  }
};

/// Renders disjoint cycle notation, "()" for the identity.
inline std::string format_cycles(const Permutation& p) {
  const auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace hmdual

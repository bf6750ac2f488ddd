#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmdual/errors.hpp"
#include "hmdual/perm_group.hpp"

namespace hmdual {

/// Isomorphism-type summary of a small group.
struct StructureDescription {
  std::uint64_t order = 1;
  bool is_abelian = true;
  bool is_cyclic = true;
  std::uint64_t exponent = 1;
  /// Elementary divisors d1 | d2 | ... with product = order; abelian case only.
  std::vector<std::uint64_t> abelian_invariants;
  /// Recognized label for groups of order <= 16 (C_n, V4, Q8, dihedral).
  std::optional<std::string> name;

  bool operator==(const StructureDescription&) const = default;
};

namespace detail {

inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> factors;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      factors.emplace_back(p, e);
    }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

// Reads off the elementary divisors of an abelian group from the number of
// elements of each order: for each prime p, #{x : x^(p^j) = 1} determines the
// partition of the p-primary component.
inline std::vector<std::uint64_t> abelian_invariants_from_counts(
    const std::map<std::uint64_t, std::uint64_t>& order_counts, std::uint64_t order) {
  std::vector<std::vector<int>> partitions;  // one partition per prime
  std::vector<std::uint64_t> primes;
  for (const auto& [p, mult] : factorize(order)) {
    (void)mult;
    std::vector<int> parts_at_least;  // parts_at_least[j-1] = #parts >= j
    std::uint64_t dividing = 0;
    int prev_log = 0;
    std::uint64_t pj = 1;
    for (int j = 1;; ++j) {
      pj = checked_mul(pj, p);
      dividing = 0;
      std::uint64_t d = 1;
      for (int i = 0; i <= j; ++i) {
        auto it = order_counts.find(d);
        if (it != order_counts.end()) dividing += it->second;
        if (d > pj / p) break;
        d *= p;
      }
      int log = 0;
      std::uint64_t check = 1;
      while (check < dividing) { check = checked_mul(check, p); ++log; }
      if (check != dividing)
        throw InternalInconsistency("element-order counts of an abelian group must be p-powers");
      const int new_parts = log - prev_log;
      if (new_parts <= 0) break;
      parts_at_least.push_back(new_parts);
      prev_log = log;
    }
    std::vector<int> partition;
    if (!parts_at_least.empty())
      for (int i = 1; i <= parts_at_least[0]; ++i) {
        int size = 0;
        for (int threshold : parts_at_least)
          if (threshold >= i) ++size;
        partition.push_back(size);  // partition[k] = exponent of (k+1)-largest part
      }
    partitions.push_back(partition);
    primes.push_back(p);
  }

  std::size_t count = 0;
  for (const auto& partition : partitions) count = std::max(count, partition.size());
  std::vector<std::uint64_t> divisors;
  for (std::size_t slot = 0; slot < count; ++slot) {
    std::uint64_t d = 1;
    for (std::size_t pi = 0; pi < partitions.size(); ++pi)
      if (slot < partitions[pi].size()) {
        std::uint64_t pk = 1;
        for (int e = 0; e < partitions[pi][slot]; ++e) pk = checked_mul(pk, primes[pi]);
        d = checked_mul(d, pk);
      }
    divisors.push_back(d);
  }
  std::reverse(divisors.begin(), divisors.end());  // ascending, each divides the next
  return divisors;
}

}  // namespace detail

/// Order, abelianness, cyclicity, exponent, abelian invariants, and a name for
/// recognized groups of order <= 16. Enumeration-backed, so capped.
inline StructureDescription structure_describe(const PermGroup& g,
                                               std::uint64_t probe_cap = 1000000) {
  if (g.order() > probe_cap)
    throw TooLarge("structure probing capped at " + std::to_string(probe_cap) + " elements");

  StructureDescription d;
  d.order = g.order();

  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size() && d.is_abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i].then(gens[j]) != gens[j].then(gens[i])) {
        d.is_abelian = false;
        break;
      }

  std::map<std::uint64_t, std::uint64_t> order_counts;
  g.for_each_element([&](const Permutation& p) { ++order_counts[p.element_order()]; });
  for (const auto& [elem_order, count] : order_counts) {
    (void)count;
    d.exponent = detail::checked_lcm(d.exponent, elem_order);
  }

  // A group has an element of order |G| exactly when it is abelian with
  // exponent equal to its order.
  d.is_cyclic = d.is_abelian && d.exponent == d.order;
  if (d.is_abelian) d.abelian_invariants = detail::abelian_invariants_from_counts(order_counts, d.order);

  if (d.order <= 16) {
    if (d.is_cyclic) {
      d.name = "C" + std::to_string(d.order);
    } else if (d.is_abelian && d.order == 4) {
      d.name = "V4";
    } else if (!d.is_abelian && d.order == 8 && order_counts[2] == 1) {
      d.name = "Q8";
    } else if (!d.is_abelian && d.order % 2 == 0) {
      // Dihedral: a cyclic subgroup of index 2 inverted by an involution
      // outside it. (Subscript convention: D_2m has order 2m.)
      const std::uint64_t half = d.order / 2;
      std::vector<Permutation> rotations;
      g.for_each_element([&](const Permutation& p) {
        if (p.element_order() == half && rotations.empty()) rotations.push_back(p);
      });
      if (!rotations.empty()) {
        const Permutation& r = rotations.front();
        std::vector<Permutation> powers{Permutation(g.degree())};
        for (std::uint64_t k = 1; k < half; ++k) powers.push_back(powers.back().then(r));
        bool found = false;
        g.for_each_element([&](const Permutation& s) {
          if (found || s.element_order() != 2) return;
          if (std::find(powers.begin(), powers.end(), s) != powers.end()) return;
          if (conjugate(r, s) == r.inverse()) found = true;
        });
        if (found) d.name = "D" + std::to_string(d.order);
      }
    }
  }
  return d;
}

/// Short deterministic label for reports. Falls back to order + abelianness
/// for groups beyond the naming range.
inline std::string structure_label(const StructureDescription& d) {
  if (d.name) return *d.name;
  if (d.is_cyclic) return "cyclic";
  if (d.is_abelian) return "abelian";
  return "nonabelian";
}

}  // namespace hmdual

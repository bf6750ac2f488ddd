#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hmdual/errors.hpp"
#include "hmdual/permutation.hpp"

namespace hmdual {

/// A finite permutation group held as a base and strong generating set.
///
/// The chain is built by a deterministic (non-randomized) Schreier-Sims run:
/// base points are taken from the optional hint first and otherwise as the
/// smallest moved point, orbits are explored breadth-first with generators in
/// insertion order. Equal inputs therefore always produce equal chains.
class PermGroup {
public:
  /// Group generated by `generators` on {1..degree}. Identity generators are
  /// allowed (and ignored by the chain). `base_hint` points are placed at the
  /// front of the base, which makes their pointwise stabilizer directly
  /// readable from the chain.
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_hint = {},
            int degree_cap = kDefaultDegreeCap)
      : degree_(degree), gens_(std::move(generators)) {
    if (degree < 1) throw BadParameter("degree must be at least 1");
    if (degree > degree_cap)
      throw TooLarge("degree " + std::to_string(degree) + " exceeds cap " +
                     std::to_string(degree_cap));
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw DegreeMismatch("generator degree differs from group degree");
    for (int p : base_hint)
      if (p < 1 || p > degree_) throw PointOutOfRange("base hint point outside 1..degree");
    build_chain(base_hint);
  }

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  /// Generators exactly as supplied (marks of a hypermap keep their slots).
  const std::vector<Permutation>& generators() const { return gens_; }

  const std::vector<int>& base() const { return base_; }

  std::vector<Permutation> strong_generators() const {
    std::vector<Permutation> out;
    for (const auto& level : levels_)
      for (const auto& g : level.gens)
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    return out;
  }

  std::vector<std::uint64_t> fundamental_orbit_lengths() const {
    std::vector<std::uint64_t> lens;
    lens.reserve(levels_.size());
    for (const auto& level : levels_) lens.push_back(level.orbit.size());
    return lens;
  }

  /// Orbit of base()[level] under the level's stabilizer subgroup, in
  /// breadth-first discovery order.
  const std::vector<int>& fundamental_orbit(int level) const { return levels_[level].orbit; }

  /// Witness u with base()[level]^u = point.
  Permutation transversal_element(int level, int point) const {
    const Level& lv = levels_[static_cast<std::size_t>(level)];
    const int slot = lv.slot[static_cast<std::size_t>(point)];
    if (slot < 0) throw PointOutOfRange("point not in fundamental orbit");
    return lv.transversal[static_cast<std::size_t>(slot)];
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) throw DegreeMismatch("membership test across degrees");
    auto [residue, level] = sift(p, 0);
    return level == levels_.size() && residue.is_identity();
  }

  /// Subgroup fixing every listed point, via a chain whose base starts with
  /// those points. Reuses this chain when its base already has that shape.
  PermGroup pointwise_stabilizer(const std::vector<int>& points) const {
    for (int p : points)
      if (p < 1 || p > degree_) throw PointOutOfRange("stabilized point outside 1..degree");
    std::vector<int> moved;
    for (int p : points) {
      bool m = false;
      for (const auto& g : gens_)
        if (g.moves(p)) { m = true; break; }
      if (m && std::find(moved.begin(), moved.end(), p) == moved.end()) moved.push_back(p);
    }
    if (has_base_prefix(moved)) return PermGroup(degree_, levels_at(moved.size()));
    PermGroup rebuilt(degree_, gens_, points);
    return PermGroup(degree_, rebuilt.levels_at(moved.size()));
  }

  /// Visits every element exactly once, in deterministic transversal order.
  template <typename F>
  void for_each_element(F&& fn) const {
    Permutation acc(degree_);
    enumerate(static_cast<int>(levels_.size()) - 1, acc, fn);
  }

  std::vector<Permutation> elements(std::uint64_t cap = 1000000) const {
    if (order_ > cap) throw TooLarge("refusing to enumerate " + std::to_string(order_) + " elements");
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order_));
    for_each_element([&](const Permutation& p) { out.push_back(p); });
    return out;
  }

private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;               // BFS order, orbit[0] == base_point
    std::vector<int> slot;                // slot[point] -> index into orbit, -1 if absent
    std::vector<Permutation> transversal; // aligned with orbit
  };

  std::vector<Permutation> levels_at(std::size_t level) const {
    if (level >= levels_.size()) return {};
    return levels_[level].gens;
  }

  bool has_base_prefix(const std::vector<int>& points) const {
    if (points.size() > base_.size()) return false;
    std::vector<int> prefix(base_.begin(), base_.begin() + static_cast<long>(points.size()));
    std::vector<int> want = points;
    std::sort(prefix.begin(), prefix.end());
    std::sort(want.begin(), want.end());
    return prefix == want;
  }

  template <typename F>
  void enumerate(int level, const Permutation& acc, F&& fn) const {
    if (level < 0) {
      fn(acc);
      return;
    }
    const Level& lv = levels_[static_cast<std::size_t>(level)];
    for (const auto& u : lv.transversal) enumerate(level - 1, acc.then(u), fn);
  }

  // Residue of p after stripping through levels [from, end); second component
  // is the level where stripping stopped (levels_.size() when it ran through).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& lv = levels_[i];
      const int image = p(lv.base_point);
      const int slot = lv.slot[static_cast<std::size_t>(image)];
      if (slot < 0) return {std::move(p), i};
      p = p.then(lv.transversal[static_cast<std::size_t>(slot)].inverse());
    }
    return {std::move(p), levels_.size()};
  }

  void rebuild_orbit(Level& lv) const {
    lv.orbit.clear();
    lv.transversal.clear();
    lv.slot.assign(static_cast<std::size_t>(degree_) + 1, -1);
    lv.orbit.push_back(lv.base_point);
    lv.transversal.emplace_back(degree_);
    lv.slot[static_cast<std::size_t>(lv.base_point)] = 0;
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      const int p = lv.orbit[i];
      const Permutation u = lv.transversal[i];
      for (const auto& g : lv.gens) {
        const int q = g(p);
        if (lv.slot[static_cast<std::size_t>(q)] < 0) {
          lv.slot[static_cast<std::size_t>(q)] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.transversal.push_back(u.then(g));
        }
      }
    }
  }

  void append_level(int base_point) {
    Level lv;
    lv.base_point = base_point;
    base_.push_back(base_point);
    levels_.push_back(std::move(lv));
  }

  void build_chain(const std::vector<int>& base_hint) {
    std::vector<Permutation> working;
    for (const auto& g : gens_)
      if (!g.is_identity() && std::find(working.begin(), working.end(), g) == working.end())
        working.push_back(g);

    base_.clear();
    levels_.clear();
    if (working.empty()) {
      order_ = 1;
      return;
    }

    // Hint points moved by the group come first; an element moves a point only
    // if some generator does, so no hint point can be demanded later.
    for (int p : base_hint) {
      bool m = false;
      for (const auto& g : working)
        if (g.moves(p)) { m = true; break; }
      if (m && std::find(base_.begin(), base_.end(), p) == base_.end()) append_level(p);
    }
    for (const auto& g : working) {
      bool covered = false;
      for (int b : base_)
        if (g.moves(b)) { covered = true; break; }
      if (!covered) append_level(g.smallest_moved_point());
    }

    for (std::size_t i = 0; i < levels_.size(); ++i)
      for (const auto& g : working) {
        bool fixes_prefix = true;
        for (std::size_t j = 0; j < i; ++j)
          if (g.moves(levels_[j].base_point)) { fixes_prefix = false; break; }
        if (fixes_prefix) levels_[i].gens.push_back(g);
      }

    // Bottom-up verification of Schreier generators (Schreier-Sims): a level
    // is settled once every Schreier generator sifts to the identity through
    // the levels below it.
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
      const std::size_t iu = static_cast<std::size_t>(i);
      rebuild_orbit(levels_[iu]);
      const std::size_t orbit_size = levels_[iu].orbit.size();
      const std::size_t gen_count = levels_[iu].gens.size();
      bool settled = true;
      for (std::size_t s = 0; settled && s < orbit_size; ++s)
        for (std::size_t gi = 0; gi < gen_count; ++gi) {
          const Level& lv = levels_[iu];
          const int q = lv.gens[gi](lv.orbit[s]);
          const Permutation schreier = lv.transversal[s].then(lv.gens[gi]).then(
              lv.transversal[static_cast<std::size_t>(lv.slot[static_cast<std::size_t>(q)])]
                  .inverse());
          if (schreier.is_identity()) continue;
          auto [residue, stuck] = sift(schreier, iu + 1);
          if (residue.is_identity()) continue;
          if (stuck == levels_.size()) append_level(residue.smallest_moved_point());
          for (std::size_t l = iu + 1; l <= stuck; ++l) levels_[l].gens.push_back(residue);
          i = static_cast<int>(stuck);
          settled = false;
          break;
        }
      if (settled) --i;
    }

    order_ = 1;
    for (const auto& level : levels_) order_ = detail::checked_mul(order_, level.orbit.size());
  }

  int degree_ = 1;
  std::vector<Permutation> gens_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Spec-level constructor: at least one generator required.
inline PermGroup group_from_generators(const std::vector<Permutation>& generators,
                                       int degree_cap = kDefaultDegreeCap) {
  if (generators.empty()) throw BadParameter("at least one generator required");
  return PermGroup(generators.front().degree(), generators, {}, degree_cap);
}

/// Smallest normal subgroup of g containing the seeds.
inline PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds) {
  std::vector<Permutation> closure_gens;
  std::deque<Permutation> queue;
  for (const auto& s : seeds) {
    if (!g.contains(s)) throw ElementNotInGroup("normal closure seed lies outside the group");
    if (s.is_identity()) continue;
    if (std::find(closure_gens.begin(), closure_gens.end(), s) == closure_gens.end()) {
      closure_gens.push_back(s);
      queue.push_back(s);
    }
  }
  PermGroup n(g.degree(), closure_gens);
  while (!queue.empty()) {
    const Permutation current = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators()) {
      Permutation c = conjugate(current, s);
      if (!n.contains(c)) {
        closure_gens.push_back(c);
        queue.push_back(std::move(c));
        n = PermGroup(g.degree(), closure_gens);
      }
    }
  }
  return n;
}

struct CosetAction {
  std::vector<Permutation> generator_images;  // one per generator of g, degree == index
  int index = 0;
};

/// Action of g on the right cosets of h, cosets numbered breadth-first from
/// the trivial coset with generators applied in order.
inline CosetAction coset_action(const PermGroup& g, const PermGroup& h,
                                int degree_cap = kDefaultDegreeCap) {
  if (g.degree() != h.degree()) throw DegreeMismatch("coset action across degrees");
  for (const auto& hg : h.generators())
    if (!g.contains(hg)) throw NotSubgroup("coset action requires a subgroup");

  const auto& gens = g.generators();
  std::vector<std::vector<int>> table;  // table[coset][gen] -> coset, 1-based cosets

  if (h.is_trivial()) {
    // Regular-style fast path: cosets are the elements themselves.
    std::unordered_map<std::vector<int>, int, detail::IntVectorHash> ids;
    std::vector<Permutation> reps{Permutation(g.degree())};
    ids.emplace(reps[0].images(), 1);
    for (std::size_t c = 0; c < reps.size(); ++c) {
      table.emplace_back(gens.size(), 0);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Permutation t = reps[c].then(gens[k]);
        auto [it, inserted] = ids.emplace(t.images(), static_cast<int>(reps.size()) + 1);
        if (inserted) {
          if (static_cast<int>(reps.size()) + 1 > degree_cap)
            throw TooLarge("coset space exceeds degree cap");
          reps.push_back(std::move(t));
        }
        table[c][k] = it->second;
      }
    }
  } else {
    // Cosets Hg are bucketed by an H-orbit signature: the sorted image of each
    // H-orbit is constant on a coset, so only bucket members need a sift test.
    std::vector<std::vector<int>> h_orbits;
    {
      std::vector<char> seen(static_cast<std::size_t>(h.degree()) + 1, 0);
      for (int p = 1; p <= h.degree(); ++p) {
        if (seen[static_cast<std::size_t>(p)]) continue;
        std::vector<int> orbit{p};
        seen[static_cast<std::size_t>(p)] = 1;
        for (std::size_t q = 0; q < orbit.size(); ++q)
          for (const auto& hg : h.generators()) {
            const int r = hg(orbit[q]);
            if (!seen[static_cast<std::size_t>(r)]) {
              seen[static_cast<std::size_t>(r)] = 1;
              orbit.push_back(r);
            }
          }
        h_orbits.push_back(std::move(orbit));
      }
    }
    auto signature = [&](const Permutation& p) {
      std::vector<int> sig;
      sig.reserve(static_cast<std::size_t>(p.degree()));
      for (const auto& orbit : h_orbits) {
        std::vector<int> img;
        img.reserve(orbit.size());
        for (int q : orbit) img.push_back(p(q));
        std::sort(img.begin(), img.end());
        sig.insert(sig.end(), img.begin(), img.end());
      }
      return sig;
    };

    std::vector<Permutation> reps{Permutation(g.degree())};
    std::unordered_map<std::vector<int>, std::vector<int>, detail::IntVectorHash> buckets;
    buckets[signature(reps[0])].push_back(1);
    for (std::size_t c = 0; c < reps.size(); ++c) {
      table.emplace_back(gens.size(), 0);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Permutation t = reps[c].then(gens[k]);
        auto& bucket = buckets[signature(t)];
        int target = 0;
        for (int candidate : bucket)
          if (h.contains(t.then(reps[static_cast<std::size_t>(candidate - 1)].inverse()))) {
            target = candidate;
            break;
          }
        if (target == 0) {
          if (static_cast<int>(reps.size()) + 1 > degree_cap)
            throw TooLarge("coset space exceeds degree cap");
          reps.push_back(std::move(t));
          target = static_cast<int>(reps.size());
          bucket.push_back(target);
        }
        table[c][k] = target;
      }
    }
  }

  CosetAction action;
  action.index = static_cast<int>(table.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::vector<int> images(table.size());
    for (std::size_t c = 0; c < table.size(); ++c) images[c] = table[c][k];
    action.generator_images.push_back(Permutation::from_images(std::move(images)));
  }
  return action;
}

}  // namespace hmdual

#pragma once

#include <deque>
#include <vector>

#include "hmdual/errors.hpp"
#include "hmdual/permutation.hpp"
#include "hmdual/presentation.hpp"
#include "hmdual/word.hpp"

namespace hmdual {

inline constexpr int kDefaultMaxCosets = 1000000;

/// Result of coset enumeration: the action of each presentation generator on
/// the cosets (1-based, coset 1 = the subgroup), and the subgroup index.
struct TcResult {
  std::vector<Permutation> generator_images;
  int index = 0;
};

namespace detail {

/// HLT coset enumeration over a 2r-column table (column 2g = generator g,
/// column 2g+1 = its inverse). Coset 1 is the subgroup itself; row 0 is
/// unused padding so coset numbers index rows directly.
class CosetEnumerator {
public:
  CosetEnumerator(int rank, int max_cosets) : rank_(rank), max_cosets_(max_cosets) {
    table_.assign(2, std::vector<int>(static_cast<std::size_t>(2 * rank_), 0));
    parent_ = {0, 1};
    live_ = 1;
  }

  static std::vector<int> columns_of(const Word& w) {
    std::vector<int> cols;
    cols.reserve(w.size());
    for (const auto& l : w.letters())
      cols.push_back(2 * l.generator + (l.inverted ? 1 : 0));
    return cols;
  }

  void run(const std::vector<std::vector<int>>& relators,
           const std::vector<std::vector<int>>& subgroup_words) {
    for (const auto& w : subgroup_words) scan_and_fill(1, w);
    for (int alpha = 1; alpha < static_cast<int>(table_.size()); ++alpha) {
      if (rep(alpha) != alpha) continue;
      bool alive = true;
      for (const auto& r : relators) {
        scan_and_fill(alpha, r);
        if (rep(alpha) != alpha) { alive = false; break; }
      }
      if (!alive) continue;
      for (int col = 0; col < 2 * rank_; ++col)
        if (entry(alpha, col) == 0) define(alpha, col);
    }
  }

  int live_count() const { return live_; }

  /// Renumbers live cosets breadth-first from coset 1 along positive
  /// generator columns (each column is a permutation of live cosets once the
  /// table closes, so positive edges already reach everything) and returns
  /// the generator actions in the new numbering.
  TcResult standardized() {
    std::vector<int> new_number(table_.size(), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(live_));
    std::deque<int> queue{1};
    new_number[1] = 1;
    while (!queue.empty()) {
      const int gamma = queue.front();
      queue.pop_front();
      order.push_back(gamma);
      for (int g = 0; g < rank_; ++g) {
        const int delta = rep(entry(gamma, 2 * g));
        if (delta == 0) throw InternalInconsistency("coset table closed with a hole");
        if (new_number[static_cast<std::size_t>(delta)] == 0) {
          new_number[static_cast<std::size_t>(delta)] = static_cast<int>(order.size()) +
                                                        static_cast<int>(queue.size()) + 1;
          queue.push_back(delta);
        }
      }
    }
    if (static_cast<int>(order.size()) != live_)
      throw InternalInconsistency("coset graph is not connected");
    TcResult result;
    result.index = live_;
    for (int g = 0; g < rank_; ++g) {
      std::vector<int> images(static_cast<std::size_t>(live_));
      for (const int gamma : order)
        images[static_cast<std::size_t>(new_number[static_cast<std::size_t>(gamma)]) - 1] =
            new_number[static_cast<std::size_t>(rep(entry(gamma, 2 * g)))];
      result.generator_images.push_back(Permutation::from_images(images));
    }
    return result;
  }

private:
  int& entry(int coset, int col) {
    return table_[static_cast<std::size_t>(coset)][static_cast<std::size_t>(col)];
  }

  int rep(int coset) {
    int r = coset;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(coset)] != r) {
      const int next = parent_[static_cast<std::size_t>(coset)];
      parent_[static_cast<std::size_t>(coset)] = r;
      coset = next;
    }
    return r;
  }

  int define(int alpha, int col) {
    if (live_ >= max_cosets_)
      throw CosetLimitExceeded("coset enumeration exceeded the live-coset cap of " +
                               std::to_string(max_cosets_));
    table_.emplace_back(static_cast<std::size_t>(2 * rank_), 0);
    const int beta = static_cast<int>(table_.size()) - 1;
    parent_.push_back(beta);
    ++live_;
    entry(alpha, col) = beta;
    entry(beta, col ^ 1) = alpha;
    return beta;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    const int ra = rep(a);
    const int rb = rep(b);
    if (ra == rb) return;
    const int keep = ra < rb ? ra : rb;
    const int drop = ra < rb ? rb : ra;
    parent_[static_cast<std::size_t>(drop)] = keep;
    queue.push_back(drop);
    --live_;
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int gamma = queue.front();
      queue.pop_front();
      for (int col = 0; col < 2 * rank_; ++col) {
        const int delta = entry(gamma, col);
        if (delta == 0) continue;
        entry(delta, col ^ 1) = 0;
        const int mu = rep(gamma);
        const int nu = rep(delta);
        if (const int existing = entry(mu, col); existing != 0)
          merge(nu, existing, queue);
        else if (const int back = entry(nu, col ^ 1); back != 0)
          merge(mu, back, queue);
        else {
          entry(mu, col) = nu;
          entry(nu, col ^ 1) = mu;
        }
      }
    }
  }

  void scan_and_fill(int alpha, const std::vector<int>& word) {
    if (word.empty()) return;
    int f = alpha;
    std::size_t i = 0;
    int b = alpha;
    std::size_t j = word.size() - 1;
    for (;;) {
      while (i <= j && entry(f, word[i]) != 0) {
        f = entry(f, word[i]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, word[j] ^ 1) != 0) {
        b = entry(b, word[j] ^ 1);
        if (j == i) {  // fully scanned from the back
          coincidence(f, b);
          return;
        }
        --j;
      }
      if (i == j) {  // one gap: close it as a deduction
        entry(f, word[i]) = b;
        entry(b, word[i] ^ 1) = f;
        return;
      }
      define(f, word[i]);
    }
  }

  int rank_;
  int max_cosets_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  int live_;
};

}  // namespace detail

/// Enumerates the cosets of the subgroup generated by subgroup_words in the
/// group presented by pres (HLT: scan relators at every coset in creation
/// order, fill rows, process coincidences eagerly). Deterministic: identical
/// inputs give identical numbering.
inline TcResult todd_coxeter(const Presentation& pres,
                             const std::vector<Word>& subgroup_words,
                             int max_cosets = kDefaultMaxCosets) {
  if (max_cosets < 1) throw BadParameter("max_cosets must be at least 1");
  std::vector<std::vector<int>> relator_cols;
  for (const auto& r : pres.relators())
    relator_cols.push_back(detail::CosetEnumerator::columns_of(r));
  std::vector<std::vector<int>> subgroup_cols;
  for (const auto& w : subgroup_words)
    if (!w.empty()) subgroup_cols.push_back(detail::CosetEnumerator::columns_of(w));
  if (relator_cols.empty() && subgroup_cols.empty())
    throw EmptyPresentationDegenerate(
        "no relators and a trivial subgroup present a free group of infinite index");
  detail::CosetEnumerator enumerator(pres.rank(), max_cosets);
  enumerator.run(relator_cols, subgroup_cols);
  return enumerator.standardized();
}

}  // namespace hmdual

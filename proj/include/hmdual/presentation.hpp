#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hmdual/errors.hpp"
#include "hmdual/word.hpp"

namespace hmdual {

/// A finite presentation: named generators and a list of relators
/// (words equal to the identity). Empty relators are dropped.
class Presentation {
public:
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
      : generator_names_(std::move(generator_names)) {
    if (generator_names_.empty()) throw BadParameter("a presentation needs generators");
    for (auto& r : relators)
      if (!r.empty()) relators_.push_back(std::move(r));
  }

  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::vector<Word>& relators() const { return relators_; }
  int rank() const { return static_cast<int>(generator_names_.size()); }

  Word parse(std::string_view text) const { return parse_word(text, generator_names_); }

  /// The presentation for the largest quotient shared with the marked group
  /// obtained by re-marking at images: keeps every relator r(x, y) and adds its
  /// rewrite r(u, v) through the assignment. Duplicates after free reduction
  /// are dropped. Note the generator-equals-image relators are deliberately
  /// absent: they would force the assignment to act trivially, a strictly
  /// smaller quotient in general.
  Presentation augment_with_assignment(const std::vector<Word>& images) const {
    if (images.size() != generator_names_.size())
      throw BadParameter("one image word per generator is required");
    std::vector<Word> relators = relators_;
    for (const auto& r : relators_) relators.push_back(r.substitute(images));
    std::vector<Word> deduped;
    for (auto& r : relators) {
      if (r.empty()) continue;
      if (std::find(deduped.begin(), deduped.end(), r) == deduped.end())
        deduped.push_back(std::move(r));
    }
    return Presentation(generator_names_, std::move(deduped));
  }

private:
  std::vector<std::string> generator_names_;
  std::vector<Word> relators_;
};

}  // namespace hmdual

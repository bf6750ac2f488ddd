#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hmdual/errors.hpp"
#include "hmdual/permutation.hpp"

namespace hmdual {

/// A freely reduced word over an indexed alphabet of group generators.
class Word {
public:
  struct Letter {
    int generator = 0;
    bool inverted = false;
    bool operator==(const Letter&) const = default;
  };

  Word() = default;

  /// Freely reduces the letter sequence.
  static Word from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (const auto& l : letters) w.push(l);
    return w;
  }

  static Word generator(int index, bool inverted = false) {
    return from_letters({Letter{index, inverted}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  bool operator==(const Word&) const = default;

  Word then(const Word& other) const {
    Word w = *this;
    for (const auto& l : other.letters_) w.push(l);
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) { return a.then(b); }

  Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.push(Letter{it->generator, !it->inverted});
    return w;
  }

  Word pow(long long exponent) const {
    const Word base = exponent < 0 ? inverse() : *this;
    long long reps = exponent < 0 ? -exponent : exponent;
    if (detail::checked_mul(static_cast<std::uint64_t>(reps), size() ? size() : 1) > 1000000)
      throw TooLarge("word power too long");
    Word w;
    for (long long i = 0; i < reps; ++i) w = w.then(base);
    return w;
  }

  /// Replaces generator i by images[i] (inverted letters by the inverse image).
  Word substitute(const std::vector<Word>& images) const {
    Word w;
    for (const auto& l : letters_) {
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= images.size())
        throw UnknownGenerator("letter index outside the image list");
      const Word& img = images[static_cast<std::size_t>(l.generator)];
      w = w.then(l.inverted ? img.inverse() : img);
    }
    return w;
  }

  /// Evaluates left to right at the given generator images.
  Permutation evaluate(const std::vector<Permutation>& images, int degree) const {
    Permutation result(degree);
    for (const auto& l : letters_) {
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= images.size())
        throw UnknownGenerator("letter index outside the image list");
      const Permutation& img = images[static_cast<std::size_t>(l.generator)];
      result = result.then(l.inverted ? img.inverse() : img);
    }
    return result;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters_.size()) {
      std::size_t run = i + 1;
      while (run < letters_.size() && letters_[run] == letters_[i]) ++run;
      if (i) out += '*';
      out += names.at(static_cast<std::size_t>(letters_[i].generator));
      const long long e = static_cast<long long>(run - i) * (letters_[i].inverted ? -1 : 1);
      if (e != 1) out += "^" + std::to_string(e);
      i = run;
    }
    return out;
  }

private:
  void push(const Letter& l) {
    if (!letters_.empty() && letters_.back().generator == l.generator &&
        letters_.back().inverted != l.inverted)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  std::vector<Letter> letters_;
};

/// Parses `word := term ('*' term)*`, `term := gen ('^' int)?`.
/// Whitespace is ignored; an exponent of 0 yields the empty word.
/// Positions in errors are 1-based character offsets.
inline Word parse_word(std::string_view text, const std::vector<std::string>& generator_names) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> WordSyntaxError {
    return WordSyntaxError(what, pos + 1);
  };

  Word result;
  bool expect_term = true;
  skip_space();
  if (pos == text.size()) throw fail("expected a generator");
  while (pos < text.size()) {
    if (expect_term) {
      if (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_')
        throw fail("expected a generator");
      const std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_'))
        ++pos;
      const std::string name(text.substr(start, pos - start));
      int index = -1;
      for (std::size_t i = 0; i < generator_names.size(); ++i)
        if (generator_names[i] == name) { index = static_cast<int>(i); break; }
      if (index < 0)
        throw UnknownGenerator("unknown generator '" + name + "' at position " +
                               std::to_string(start + 1));
      long long exponent = 1;
      skip_space();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_space();
        const std::size_t estart = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == estart || (pos == estart + 1 && !std::isdigit(static_cast<unsigned char>(
                                                       text[estart]))))
          throw fail("expected an integer exponent");
        try {
          exponent = std::stoll(std::string(text.substr(estart, pos - estart)));
        } catch (const std::exception&) {
          throw WordSyntaxError("exponent out of range", estart + 1);
        }
      }
      result = result.then(Word::generator(index).pow(exponent));
      expect_term = false;
    } else {
      if (text[pos] != '*') throw fail("expected '*' between terms");
      ++pos;
      skip_space();
      if (pos == text.size()) throw fail("expected a generator after '*'");
      expect_term = true;
      continue;
    }
    skip_space();
  }
  if (expect_term) throw fail("expected a generator");
  return result;
}

}  // namespace hmdual

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmdual {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : Error { using Error::Error; };
struct PointOutOfRange : Error { using Error::Error; };
struct RepeatedPoint : Error { using Error::Error; };
struct ElementNotInGroup : Error { using Error::Error; };
struct NotSubgroup : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct CosetLimitExceeded : Error { using Error::Error; };
struct EmptyPresentationDegenerate : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct ImagesDoNotGenerate : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };
struct NonUniqueMinimum : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };

/// Input text could not be parsed (input files, cycle notation).
struct ParseError : Error { using Error::Error; };

/// Word grammar violation; carries the 1-based character position.
class WordSyntaxError : public Error {
public:
  WordSyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace hmdual

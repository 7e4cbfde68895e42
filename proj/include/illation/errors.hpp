#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace illation {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error at a byte offset, with the set of tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Evaluation against an incomplete interpretation: missing variable, missing or mis-sized predicate.
class EvalError : public Error {
 public:
  using Error::Error;
};

// The formula uses a connective the requested semantics does not define.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed structure or report file (JSON schema violations).
class FormatError : public Error {
 public:
  using Error::Error;
};

// An enumeration limit was exceeded. `at_size` is the domain size where the limit tripped, if any.
class LimitError : public Error {
 public:
  explicit LimitError(const std::string& what, std::optional<int> at_size = std::nullopt)
      : Error(what), at_size_(at_size) {}

  std::optional<int> at_size() const noexcept { return at_size_; }

 private:
  std::optional<int> at_size_;
};

}  // namespace illation

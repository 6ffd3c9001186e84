#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clifford {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a binary operation live in different algebras.
class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("multivector signature mismatch") {}
};

/// The multivector has no inverse (the final characteristic coefficient is zero).
class SingularError : public Error {
 public:
  SingularError() : Error("inverse does not exist: c_N = 0") {}
};

/// Exact-mode recursion did not reach M_N = 0. Indicates an internal fault.
class NonTermination : public Error {
 public:
  explicit NonTermination(std::size_t steps)
      : Error("recursion did not terminate with M_N = 0 after " + std::to_string(steps) + " steps") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : Error("parse error at offset " + std::to_string(position) + ": expected " + expected +
              ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'")),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

}  // namespace clifford

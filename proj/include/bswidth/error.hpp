#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: malformed spec, non-prime characteristic, mismatched fields.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic failure: division by zero, singular matrix.
class MathError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or orbit outgrew its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// A constructed object failed one of its own postcondition checks.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// A quantity requested outside its domain of definition.
class UndefinedError : public Error {
 public:
  using Error::Error;
};

}  // namespace bsw

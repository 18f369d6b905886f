#pragma once

#include <stdexcept>
#include <string>

namespace obb {

/// Broad classification of failures; the command line tool maps these onto
/// exit codes.
enum class ErrorKind {
  kInvalidArgument,  // caller violated a documented precondition
  kDimension,        // mismatched ring / module dimensions
  kMathDomain,       // non-homogeneous input, non-positive grading, ...
  kParse,            // malformed problem text
  kResourceLimit,    // time budget or exponent/degree overflow
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::kInvalidArgument, what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorKind::kDimension, what) {}
};

class MathDomainError : public Error {
 public:
  explicit MathDomainError(const std::string& what)
      : Error(ErrorKind::kMathDomain, what) {}
};

/// Homogeneity violation that names the offending generator (0-based).
class NonHomogeneousError : public MathDomainError {
 public:
  NonHomogeneousError(std::size_t generator, const std::string& what)
      : MathDomainError(what), generator_(generator) {}

  std::size_t generator() const noexcept { return generator_; }

 private:
  std::size_t generator_;
};

class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : Error(ErrorKind::kResourceLimit, what) {}
};

}  // namespace obb

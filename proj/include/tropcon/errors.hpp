#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tropcon {

/// Shape or arity precondition violated (non-square matrix, wrong length, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation expansion was requested above the configured size bound.
class EnumerationBoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Valuation of the zero series requested.
class TropicalizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Classical linear system whose maximal minors all vanish.
class DegenerateSystemError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed construction program (unknown id, kind mismatch, self reference).
class ProgramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element whose construction graph is not a tree.
class AdmissibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Generic lift could not avoid a vanishing pseudo-determinant.
class LiftError : public std::runtime_error {
 public:
  LiftError(const std::string& what, std::string element, int component)
      : std::runtime_error(what), element_(std::move(element)), component_(component) {}

  const std::string& element() const noexcept { return element_; }
  /// Zero-based Cramer component that vanished, or -1 when not applicable.
  int component() const noexcept { return component_; }

 private:
  std::string element_;
  int component_;
};

}  // namespace tropcon

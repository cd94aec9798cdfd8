#pragma once

#include <stdexcept>
#include <string>

namespace fpg {

/// Mismatched tensor/support shapes between arguments.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A divergence (or signal) that is mathematically undefined for the inputs,
/// e.g. a generator without f'(inf) applied to a target with zero-mass states.
class UndefinedDivergenceError : public std::domain_error {
 public:
  explicit UndefinedDivergenceError(const std::string& what) : std::domain_error(what) {}
};

/// Importance ratios have drifted too far from the behavior policy.
class StalePolicyError : public std::runtime_error {
 public:
  explicit StalePolicyError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation not available for this policy/model kind.
class UnsupportedError : public std::logic_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::logic_error(what) {}
};

/// Non-finite value produced where a finite one is required.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fpg

#pragma once

#include <stdexcept>
#include <string>

namespace phl {

/// Operand shapes do not fit together.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator expected to be nilpotent has a non-vanishing power.
class NotNilpotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A model specification or a constructed model violates its invariants.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sl2 completion is impossible: the raising operator is not Lefschetz for the grading.
class LefschetzError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phl

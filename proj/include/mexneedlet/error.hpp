#pragma once

#include <stdexcept>
#include <string>

namespace mexneedlet {

/// Invalid input to a library routine (violated precondition).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An integral or series that does not converge for the given input.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The eigen-series would need more than the allowed number of terms.
class SeriesOverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A routine that only supports a subset of the filter families.
class UnsupportedFilterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Field band limit exceeds the band limit of the frame.
class BandLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scale index outside the configured window.
class ScaleRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Rayleigh quotient of the zero field.
class ZeroFieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Partition or cubature too fine for desk-scale computation.
class SizeOverflowError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace mexneedlet

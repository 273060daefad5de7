#pragma once

#include <stdexcept>

namespace szego {

/// Failure of a numerical procedure at runtime: non-finite state during
/// integration, SVD non-convergence. Validation problems use
/// std::invalid_argument / std::domain_error instead, overflow of a weighted
/// norm uses std::range_error.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace szego

#pragma once

#include <string>
#include <utility>

#include "cxlab/resolution.hpp"

namespace cxlab {

struct ComplexityEstimate {
  int value = 0;
  /// finite-pd, periodicity or polynomial-fit.
  std::string method;
  std::pair<int, int> window{0, 0};
  /// exact (finite projective dimension) or fitted.
  std::string confidence;
};

/// Growth rate of the Betti totals.  A zero tail (or `complete`) gives 0;
/// otherwise even and odd indices of the upper half window are fitted
/// separately by the lowest-degree polynomial whose next finite difference
/// vanishes.  Throws InvalidInput when fewer than 8 indices are usable.
ComplexityEstimate complexity_estimate(const BettiTable& bt, bool complete = false);
ComplexityEstimate complexity_estimate(const FreeResolution& res);

}  // namespace cxlab

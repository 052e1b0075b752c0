#include "cxlab/complexity.hpp"

#include <cmath>

#include "cxlab/error.hpp"

namespace cxlab {

namespace {

/// Lowest e such that the (e+1)-st differences of `v` vanish with at least one
/// value checked; -1 if none does.
int polynomial_degree(std::vector<long long> v) {
  for (int e = 0; static_cast<std::size_t>(e) + 2 <= v.size(); ++e) {
    std::vector<long long> diff(v.size() - 1);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) diff[i] = v[i + 1] - v[i];
    bool zero = true;
    for (auto x : diff) zero = zero && x == 0;
    if (zero) return e;
    v = std::move(diff);
  }
  return -1;
}

}  // namespace

ComplexityEstimate complexity_estimate(const BettiTable& bt, bool complete) {
  ComplexityEstimate out;
  const auto& b = bt.totals;
  const int top = static_cast<int>(b.size()) - 1;
  if (complete || b.empty() || b.back() == 0) {
    out.value = 0;
    out.method = "finite-pd";
    out.confidence = "exact";
    out.window = {0, top};
    return out;
  }
  const int lo = (top + 1) / 2;
  if (top - lo + 1 < 8)
    throw InvalidInput("Betti window [" + std::to_string(lo) + ", " + std::to_string(top) +
                       "] has fewer than 8 indices; resolve further");
  out.window = {lo, top};
  out.confidence = "fitted";
  std::vector<long long> even, odd;
  for (int n = lo; n <= top; ++n) (n % 2 ? odd : even).push_back(b[static_cast<std::size_t>(n)]);
  const int de = polynomial_degree(even), d_o = polynomial_degree(odd);
  if (de >= 0 && d_o >= 0) {
    const int e = std::max(de, d_o);
    out.value = 1 + e;
    out.method = e == 0 ? "periodicity" : "polynomial-fit";
    return out;
  }
  // No polynomial fits the window: fall back on the slope of log b_n against log n.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int n = std::max(lo, 1); n <= top; ++n) {
    const double x = std::log(static_cast<double>(n)), y = std::log(static_cast<double>(b[static_cast<std::size_t>(n)]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  out.value = 1 + static_cast<int>(std::lround(std::max(0.0, slope)));
  out.method = "polynomial-fit";
  return out;
}

ComplexityEstimate complexity_estimate(const FreeResolution& res) { return complexity_estimate(betti_table(res), res.complete); }

}  // namespace cxlab

#pragma once

// Minimal graded free resolutions, Betti tables, syzygies, depth.

#include <map>
#include <string>
#include <vector>

#include "cxlab/module.hpp"

namespace cxlab {

struct FreeResolution {
  GradedModule module;
  int length_bound = 0;
  /// twists[n] are the generator degrees of F_n, ascending.
  std::vector<std::vector<int>> twists;
  /// differentials[n] is d_n: F_n -> F_{n-1}; differentials[0] is the empty map.
  std::vector<Matrix> differentials;
  /// True when a zero kernel was reached, so the resolution is complete.
  bool complete = false;

  /// Number of computed steps (index of the last computed F_n).
  int top() const { return static_cast<int>(twists.size()) - 1; }
  std::size_t rank(int n) const;
  const Matrix& d(int n) const;
  /// Projective dimension, when complete.
  int length() const;
};

struct BettiTable {
  /// (n, d) -> count.
  std::map<std::pair<int, int>, long long> entries;
  std::vector<long long> totals;

  long long at(int n, int d) const;
  /// Macaulay-style grid: rows d - n, columns n.
  std::string render() const;
};

/// Minimal resolution up to F_bound (d_1..d_bound).  Over a ring of positive
/// codimension each kernel is found by graded linear algebra up to the
/// degree bound given by the Eisenbud-Shamash construction from the ambient
/// resolution; over a polynomial ring kernels come from Groebner syzygies.
FreeResolution minimal_resolution(const GradedModule& m, int bound);

/// Minimal resolution over the ambient polynomial ring (always complete).
FreeResolution ambient_resolution(const GradedModule& m);

BettiTable betti_table(const FreeResolution& res);

/// Omega^n M, presented by d_{n+1} on the twists of F_n; zero past the projective dimension.
GradedModule syzygy(const FreeResolution& res, int n);
GradedModule syzygy(const GradedModule& m, int n);

int pd_ambient(const GradedModule& m);
/// nvars - pd over the ambient ring.  Throws InvalidInput for the zero module.
int depth(const GradedModule& m);
/// depth of the ring itself (its Krull dimension, complete intersections being Cohen-Macaulay).
int ring_depth(const QuotientRing& ring);

/// Minimal generators among `candidates` for the submodule they generate in
/// the free module with the given twists, in ascending degree order.
std::vector<FreeModuleElement> minimal_generators(const RingPtr& ring, const std::vector<int>& twists,
                                                  std::vector<FreeModuleElement> candidates);

/// Certificate checks; each returns an empty string on success or a description of the failure.
std::string check_d_squared(const FreeResolution& res);
std::string check_minimality(const FreeResolution& res);
/// Over the polynomial ring: sum (-1)^n HS(F_n) = HS(M) up to `truncation`.
std::string check_hilbert_euler(const FreeResolution& ambient, int truncation);
/// dim ker d_n = dim im d_{n+1} in every degree up to `max_degree` (or where pieces are finite).
std::string check_exactness(const FreeResolution& res, int max_degree);

}  // namespace cxlab

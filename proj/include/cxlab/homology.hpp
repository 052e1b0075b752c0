#pragma once

// Tor and Ext as graded dimension tables with exact zero-tests.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cxlab/resolution.hpp"

namespace cxlab {

enum class HomologyKind { Tor, Ext };

/// How an index's verdict was obtained.
enum class ZeroCertificate {
  /// Some graded piece is nonzero.
  Witness,
  /// Every piece of the complex term was enumerated.
  FiniteSupport,
  /// Kernel generators reduce to zero modulo the image (Groebner bases over the ring).
  Syzygy,
  /// Positive Tor against a free module, zero by exactness of the resolution.
  Flat,
};

const char* certificate_name(ZeroCertificate c);

struct HomologyOptions {
  /// Overrides the top of the reporting window for terms of infinite support.
  std::optional<int> degree_cap;
  /// Run the module-level zero certificate where dimension counts are not conclusive.
  bool certify = true;
  GroebnerOptions groebner{};
};

struct HomologyReport {
  HomologyKind kind = HomologyKind::Tor;
  std::string m_name;
  std::string n_name;
  int lo = 0;
  int hi = -1;
  /// i -> (d -> dim), nonzero entries only.
  std::map<int, std::map<int, long long>> dims;
  std::map<int, bool> is_zero;
  std::map<int, ZeroCertificate> certificate;
  /// Degree window examined at each i; exact when `finite_support` holds.
  std::map<int, std::pair<int, int>> window;
  std::map<int, bool> finite_support;
  /// Largest index the vanishing claims cover, when a checker set one.
  std::optional<int> horizon;

  long long total(int i) const;
  long long dim(int i, int d) const;
  /// `i:   0 1 2` over `Tor: * 0 *`.
  std::string strip() const;
};

/// Tor_i(M, N) for lo <= i <= hi, from a resolution of M reaching F_{hi+1}.
HomologyReport tor(const FreeResolution& res, const GradedModule& n, int lo, int hi, const HomologyOptions& opts = {});
HomologyReport tor(const GradedModule& m, const GradedModule& n, int lo, int hi, const HomologyOptions& opts = {});
/// Ext^i(M, N) with Hom(A(-a), N) = N(a).
HomologyReport ext(const FreeResolution& res, const GradedModule& n, int lo, int hi, const HomologyOptions& opts = {});
HomologyReport ext(const GradedModule& m, const GradedModule& n, int lo, int hi, const HomologyOptions& opts = {});

struct SymmetryCheck {
  bool agrees = true;
  std::optional<std::pair<int, int>> first_difference;  // (i, d)
};

/// Graded dims of H(F^M (x) N) and H(F^N (x) M) over lo..hi.
SymmetryCheck tor_symmetry_check(const FreeResolution& res_m, const FreeResolution& res_n, int lo, int hi);
SymmetryCheck tor_symmetry_check(const GradedModule& m, const GradedModule& n, int lo, int hi);

FiniteLength finite_length_test(const GradedModule& n);

}  // namespace cxlab

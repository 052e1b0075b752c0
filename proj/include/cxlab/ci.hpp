#pragma once

// Eisenbud operators on a resolution over a complete intersection, the
// cohomology elements they span, and the pushout modules K_eta that reduce
// complexity.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cxlab/complexity.hpp"
#include "cxlab/error.hpp"
#include "cxlab/homology.hpp"
#include "cxlab/resolution.hpp"

namespace cxlab {

using ResolutionPtr = std::shared_ptr<const FreeResolution>;

/// Degree-preserving chain map F_n -> F_{n-shift}(-degree) on one resolution.
struct ChainMap {
  ResolutionPtr resolution;
  int shift = 2;
  /// Internal degree of the map.
  int degree = 0;
  /// n -> block F_n -> F_{n-shift}; target twists are those of F_{n-shift} plus `degree`.
  std::map<int, Matrix> blocks;
  /// d o block = block o d verified at every stored n.
  bool certified = false;
  std::string failure;

  bool is_zero() const;
};

struct EisenbudOperators {
  /// One shift-2 operator per complete-intersection generator.
  std::vector<ChainMap> operators;
  /// d~ o d~ = sum f_j T~_j verified over the ambient ring.
  bool decomposition_certified = false;
};

/// Empty for a ring of codimension 0.  Throws InternalError when an entry of
/// d~ o d~ is not in the defining ideal.
EisenbudOperators eisenbud_operators(const ResolutionPtr& res);

/// Verifies d o T = T o d at every n where both sides are stored.
std::string check_chain_map(const ChainMap& map);

/// sum_j c_j T_j.  Nonzero coefficients must sit on generators of a single
/// degree, so that the result is homogeneous.  Throws InvalidInput otherwise
/// or on a wrong coefficient count.
ChainMap eta(const EisenbudOperators& ops, const std::vector<Coeff>& coefficients);

/// The t-fold composite, of shift 2t.
ChainMap eta_power(const ChainMap& eta, int t);

/// 0 -> M(-delta) -> K -> Omega^q M -> 0 for q = shift - 1 and delta = degree.
struct PushoutModule {
  GradedModule source;
  ChainMap element;
  int q = 1;
  int delta = 0;
  /// Minimal presentation.
  GradedModule k;
  /// Presentation on the generators of F_q followed by those of F_0(-delta),
  /// stably sorted by twist, on which the sequence maps are defined.
  GradedModule k_raw;
  GradedModule shifted_source;
  GradedModule omega;
  /// Generator j of shifted_source maps to generator iota[j] of k_raw.
  std::vector<std::uint32_t> iota;
  /// Generator i of k_raw maps to generator pi[i] of omega, or -1 for zero.
  std::vector<long> pi;

  bool hilbert_additive = false;
  bool composite_zero = false;
  bool injective = false;
  bool exact_middle = false;
  bool surjective = false;
  /// Degrees where the three maps were checked piece by piece.
  std::pair<int, int> checked_window{0, -1};
  /// True when every nonzero piece lies in checked_window.
  bool window_exhaustive = false;
  /// Hilbert numerators (K, M(-delta), Omega), each as (lowest degree, coefficients).
  std::pair<int, std::vector<long long>> hs_k, hs_source, hs_omega;

  bool exact() const { return hilbert_additive && composite_zero && injective && exact_middle && surjective; }
};

/// Throws InvalidInput when the shift is not even and positive or the
/// resolution does not reach F_shift.
PushoutModule k_eta(const ChainMap& power);

struct LesCheck {
  bool consistent = true;
  /// First (index in the sequence, degree) where a bound or telescoping sum fails.
  std::string failure;
  int degree_lo = 0;
  int degree_hi = -1;
  int length = 0;
};

struct ReductionVerdict {
  ComplexityEstimate cx_source;
  ComplexityEstimate cx_k;
  std::vector<long long> betti_source;
  std::vector<long long> betti_k;
  bool complexity_drops = false;
  int depth_source = 0;
  int depth_k = 0;
  bool depth_preserved = false;
  bool sequence_exact = false;
  LesCheck ext_les;
  LesCheck tor_les;
  std::string n_name;

  bool passed() const {
    return complexity_drops && depth_preserved && sequence_exact && ext_les.consistent && tor_les.consistent;
  }
};

struct ReductionOptions {
  /// Resolution bound used for the complexity estimate of K.
  int bound = 20;
  /// Homological length of the long exact sequences checked.
  int les_length = 6;
};

ReductionVerdict verify_reduction(const PushoutModule& p, const GradedModule& n, const ReductionOptions& opts = {});

struct ReductionStep {
  PushoutModule pushout;
  ReductionVerdict verdict;
  std::vector<Coeff> coefficients;
  /// Coefficient vectors rejected before this one.
  std::vector<std::vector<Coeff>> rejected;
};

class RetriesExhausted : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

/// Replaces M by K_eta for random eta until the complexity is 0.  Each step is
/// accepted only when verify_reduction against the residue field passes.
/// Throws RetriesExhausted listing every rejected coefficient vector.
std::vector<ReductionStep> reduction_chain(const GradedModule& m, int max_retries = 8, std::uint64_t seed = 0,
                                           const ReductionOptions& opts = {});

struct PeriodicityVerdict {
  /// False when the complexity estimate is not 1; the check then passes vacuously.
  bool applicable = false;
  bool passed = false;
  ComplexityEstimate cx;
  int window_start = 0;
  int window_end = -1;
  std::string failure;
};

/// For n from window_start on: F_n and F_{n+2} have the same twists up to the
/// shift of a generic eta, whose blocks F_{n+2} -> F_n are invertible.
PeriodicityVerdict periodicity_isomorphism_check(const ResolutionPtr& res, int window_start, std::uint64_t seed = 0);

/// Resolution with every twist raised by s (the resolution of M(-s)).
FreeResolution shifted_resolution(const FreeResolution& res, int s);

}  // namespace cxlab

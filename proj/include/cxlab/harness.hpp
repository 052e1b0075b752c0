#pragma once

// Vanishing-pattern checkers, random modules and corpus sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cxlab/ci.hpp"
#include "cxlab/homology.hpp"

namespace cxlab {

/// Hypothesis patterns for "finitely many vanishing groups imply all higher vanish".
enum class VanishingCheck {
  /// Ext at n, n+q, ..., n+cq with q odd, above depth A - depth M.
  UniformGapExt,
  UniformGapTor,
  /// Ext (Tor) at n..n+c-1 against a finite-length N, above dim A - depth M.
  ConsecutiveExt,
  ConsecutiveTor,
  /// Ext (Tor) at n, n+q, ..., n+(c-1)q against a finite-length N, above dim A - depth M.
  FiniteLengthGapExt,
  FiniteLengthGapTor,
  /// Complexity 2: Ext (Tor) at n, n+p, n+p+q with p, q odd.
  TwoGapExt,
  TwoGapTor,
  /// Ext (Tor) at n, n+q_1, n+q_1+q_2, ... with arbitrary odd gaps; exploratory.
  MixedGapsExt,
  MixedGapsTor,
};

const char* check_name(VanishingCheck c);
HomologyKind check_kind(VanishingCheck c);

struct CheckReport {
  VanishingCheck check = VanishingCheck::UniformGapExt;
  std::string m_name;
  std::string n_name;
  int n = 0;
  std::vector<int> gaps;
  int complexity = 0;
  /// Indices above this bound are covered by the conclusion.
  int lower_bound = 0;
  std::vector<int> pattern;
  bool hypothesis_met = false;
  /// Meaningful only when hypothesis_met.
  bool conclusion_verified = false;
  int horizon = 0;
  /// First index in (lower_bound, horizon] with a nonzero group, if any.
  std::optional<int> first_nonzero;
  /// Strip 0..horizon with certified zero tests.
  HomologyReport witness;
  /// Hypersurface rings with finite-length N: lengths of Ext^m for
  /// lower_bound < m <= horizon agree with those of Ext^{m+1}.
  std::optional<bool> length_identity;
  std::vector<long long> lengths;

  bool counterexample() const { return hypothesis_met && !conclusion_verified; }
};

/// Resolution, complexity, depth data and homology strips shared by all checks on one pair.
struct VanishingContext {
  GradedModule m;
  GradedModule n;
  ResolutionPtr resolution;
  ComplexityEstimate cx;
  int depth_ring = 0;
  int dim_ring = 0;
  int depth_m = 0;
  bool n_finite_length = false;
  /// Strips 0..strip_top.
  int strip_top = 0;
  HomologyReport ext;
  HomologyReport tor;
};

/// Resolves M to max(strip_top + 1, bound) and computes both strips.
VanishingContext make_context(const GradedModule& m, const GradedModule& n, int strip_top, int bound = 20);
/// Reuses a resolution reaching F_{strip_top + 1}.
VanishingContext make_context(const ResolutionPtr& res, const GradedModule& n, int strip_top);

/// Horizon of a pattern: twice its largest index plus 6.
int pattern_horizon(const std::vector<int>& pattern);

/// Validates the preconditions and evaluates `check` on a context whose strips
/// reach the horizon.  `gaps` holds q (uniform and finite-length checks), p and
/// q (two-gap checks), or q_1..q_c (mixed gaps); it is empty for the
/// consecutive check.  Throws InvalidInput on an even gap, an index at or
/// below the bound, a non-finite-length N where one is required, a
/// complexity mismatch, or a context too short for the horizon.
CheckReport evaluate_check(const VanishingContext& ctx, VanishingCheck check, int n, const std::vector<int>& gaps);

/// Stand-alone entry points; each builds its own context.
CheckReport check_uniform_gap(const GradedModule& m, const GradedModule& n, int index, int q, HomologyKind kind);
CheckReport check_finite_length(const GradedModule& m, const GradedModule& n, int index, VanishingCheck check,
                                std::optional<int> q = std::nullopt);
CheckReport check_two_gap(const GradedModule& m, const GradedModule& n, int index, int p, int q, HomologyKind kind);
CheckReport explore_mixed_gaps(const GradedModule& m, const GradedModule& n, int index, const std::vector<int>& gaps,
                               HomologyKind kind = HomologyKind::Ext);

struct RandomModuleCaps {
  int max_generators = 3;
  int max_relations = 3;
  int max_entry_degree = 2;
};

/// Cokernel of a random homogeneous matrix; deterministic per (ring, seed).
GradedModule random_module(const RingPtr& ring, std::uint64_t seed, const RandomModuleCaps& caps = {});

/// The rings swept by default: xy; x^2, y^2; x^2, y^2 in three variables; x^2, y^2, z^2.
std::vector<std::string> default_corpus_rings();

struct CorpusOptions {
  std::vector<std::string> rings = default_corpus_rings();
  std::uint64_t seed = 0;
  int count = 100;
  RandomModuleCaps caps{};
  int bound = 20;
  int strip_top = 18;
  /// Largest index used in any hypothesis pattern, so that horizons stay within strip_top.
  int max_pattern_index = 6;
  /// Findings log (JSON lines) for mixed-gap counterexamples; empty for none.
  std::string findings_path;
};

struct Finding {
  std::string ring;
  std::uint64_t seed = 0;
  std::string module;
  std::string against;
  CheckReport report;
};

struct CorpusSummary {
  int modules = 0;
  int pairs = 0;
  long checks = 0;
  long hypotheses_met = 0;
  /// Counterexamples to proved patterns (every check except the mixed-gap ones).
  std::vector<Finding> counterexamples;
  /// Mixed-gap hypothesis met but conclusion false.
  std::vector<Finding> open_findings;
  std::vector<std::string> complexity_violations;
  std::vector<std::string> symmetry_failures;
  std::vector<std::string> property_failures;
  /// Mixed-gap reports that disagree with the uniform or two-gap check on the same index set.
  std::vector<std::string> agreement_failures;
  double seconds = 0;

  bool clean() const {
    return counterexamples.empty() && complexity_violations.empty() && symmetry_failures.empty() &&
           property_failures.empty() && agreement_failures.empty();
  }
};

/// Resolution certificates, cx <= codim, Tor symmetry, Betti = dim Tor(M,k) =
/// dim Ext(M,k), and every applicable check against N in {k, ring}.
CorpusSummary run_corpus(const CorpusOptions& opts);

/// d o d = 0, minimality, exactness, the Hilbert-Euler identity over the
/// ambient ring, Eisenbud operator certificates, and
/// beta_n = dim Tor_n(M,k) = dim Ext^n(M,k).  Returns the failures.
std::vector<std::string> resolution_properties(const ResolutionPtr& res);

/// A = k[x,y]/(xy), M = A/(x), N = A/(y), indices 0..20.
struct HypersurfaceExample {
  std::vector<long long> betti;
  HomologyReport tor;
  HomologyReport ext;
  /// Ext at 2 and 4 vanish while Ext^3 does not.
  bool even_gap_pattern_vanishes = false;
  bool even_gap_middle_nonzero = false;
  /// Message from the checker rejecting q = 2.
  std::string even_gap_rejection;

  bool betti_ok() const;
  bool tor_ok() const;
  bool ext_ok() const;
};

HypersurfaceExample run_hypersurface_example();

/// For a chain step (M, K, q) and N: where Ext^i(K, N) vanishes for every i in
/// (lower, horizon], dim Ext^i(M,N)_{d+delta} = dim Ext^{i+q+1}(M,N)_d for
/// i in (lower, horizon - q - 1].  Returns failures; `applied` is set when the
/// vanishing premise held.
std::vector<std::string> ext_jump_check(const PushoutModule& p, const GradedModule& n, int horizon, bool* applied);

}  // namespace cxlab

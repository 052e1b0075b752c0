#pragma once

// Graded quotient rings P/(f_1..f_c) by homogeneous regular sequences.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cxlab/buchberger.hpp"
#include "cxlab/poly.hpp"

namespace cxlab {

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// Result of testing whether homogeneous generators form a regular sequence.
struct CompleteIntersectionCheck {
  bool is_complete_intersection = false;
  int codim = 0;
  /// Degree of the first Hilbert-series coefficient that deviates from the
  /// product formula; nullopt when the series agree.
  std::optional<int> first_deviation;
  int compared_up_to = 0;
  int quotient_dimension = 0;
};

/// Hilbert numerator for P/(monomials): HS = numerator / prod(1 - t^{w_i}).
/// Returned as coefficients of t^0, t^1, ...
std::vector<long long> hilbert_numerator(const PolyRing& ring, std::vector<Monomial> gens);
/// Coefficients 0..truncation of numerator / prod(1 - t^{w_i}).
std::vector<long long> expand_hilbert_series(const PolyRing& ring, const std::vector<long long>& numerator,
                                             int truncation);
/// Krull dimension of P/(monomials).
int monomial_quotient_dimension(const PolyRing& ring, const std::vector<Monomial>& gens);

CompleteIntersectionCheck check_complete_intersection(const PolyRing& ambient,
                                                      const std::vector<Polynomial>& gens);

class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  /// Validates homogeneity and the regular-sequence property.  Throws InvalidInput.
  static RingPtr create(PolyRing ambient, std::vector<Polynomial> ci_generators);

  QuotientRing(const QuotientRing&) = delete;
  QuotientRing& operator=(const QuotientRing&) = delete;

  const PolyRing& ambient() const { return ambient_; }
  const PrimeField& field() const { return ambient_.field(); }
  int nvars() const { return ambient_.nvars(); }
  const std::vector<Polynomial>& ci_generators() const { return ci_; }
  int codim() const { return static_cast<int>(ci_.size()); }
  int krull_dim() const { return nvars() - codim(); }
  std::vector<int> ci_degrees() const;

  /// Reduced Groebner basis of the defining ideal.
  const std::vector<Polynomial>& ideal_basis() const { return ideal_basis_; }
  const std::vector<Monomial>& ideal_leads() const { return ideal_leads_; }

  /// Normal form modulo the defining ideal.
  Polynomial reduce(const Polynomial& p) const;
  /// Normal form of a single monomial, cached.
  const Polynomial& reduce_monomial(const Monomial& m) const;

  bool is_artinian() const { return krull_dim() == 0; }
  /// Largest degree with a nonzero graded piece (Artinian rings only).
  int top_degree() const;

  /// Standard monomials of the given degree, decreasing order; cached.
  const std::vector<Monomial>& standard_monomials(int degree) const;
  /// Position of m within standard_monomials(m.degree), or -1.
  long standard_index(const Monomial& m) const;

  std::vector<long long> hilbert_series(int truncation) const;

  /// Writes g (in the ideal) as sum h_j f_j over the ambient ring; nullopt if g
  /// is not in the ideal.
  std::optional<std::vector<Polynomial>> ideal_coordinates(const Polynomial& g) const;

  /// The ambient polynomial ring as a quotient ring with no relations.
  RingPtr ambient_ring() const;

  std::string render() const;
  std::string describe() const;

  bool same_ring(const QuotientRing& o) const;

 private:
  QuotientRing(PolyRing ambient, std::vector<Polynomial> ci);

  PolyRing ambient_;
  std::vector<Polynomial> ci_;
  std::vector<Polynomial> ideal_basis_;
  std::vector<Monomial> ideal_leads_;
  int top_degree_ = -1;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<int, std::vector<Monomial>> std_cache_;
  mutable std::unordered_map<Monomial, long, MonomialHash> std_index_;
  mutable std::unordered_map<Monomial, Polynomial, MonomialHash> nf_cache_;
  mutable std::optional<GroebnerCore> cofactor_basis_;
  mutable std::shared_ptr<const QuotientRing> ambient_ring_;
};

/// `p=<prime>; vars <name[:weight]>,...; ci: <poly>,...`, or a JSON object with
/// fields char, vars, weights, ci.  Throws InvalidInput.
RingPtr parse_ring(std::string_view text);
/// Inverse of parse_ring on the textual format.
std::string render_ring(const QuotientRing& ring);

}  // namespace cxlab

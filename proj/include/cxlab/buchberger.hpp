#pragma once

// Buchberger's algorithm for homogeneous submodules of graded free modules
// over the ambient polynomial ring, with an optional ideal appended to every
// component.  Pairs are processed degree by degree (the normal strategy; for
// homogeneous input the sugar degree is the degree) with Gebauer-Moeller
// pair pruning.

#include <cstddef>
#include <span>
#include <vector>

#include "cxlab/free_module.hpp"
#include "cxlab/poly.hpp"

namespace cxlab {

struct GroebnerOptions {
  int degree_cap = 40;
  std::size_t pair_cap = 1'000'000;
};

/// A reduced Groebner basis under position-over-term degrevlex.
class GroebnerCore {
 public:
  GroebnerCore() = default;

  std::size_t rank() const { return twists_.size(); }
  const std::vector<int>& twists() const { return twists_; }
  /// Monic, auto-reduced, sorted by increasing leading term.
  const std::vector<FreeModuleElement>& elements() const { return basis_; }
  std::size_t pairs_considered() const { return pairs_considered_; }

  /// Fully reduced remainder.
  FreeModuleElement reduce(const FreeModuleElement& f) const;
  bool contains(const FreeModuleElement& f) const;
  /// Leading monomials living in component `comp`.
  std::vector<Monomial> leads_in(std::uint32_t comp) const;

 private:
  friend GroebnerCore buchberger(const PolyRing&, const std::vector<int>&,
                                 std::vector<FreeModuleElement>, std::span<const Polynomial>,
                                 const GroebnerOptions&);
  void rebuild_index();
  long find_divisor(const ModuleTerm& t) const;

  PrimeField field_{};
  std::vector<int> twists_;
  std::vector<FreeModuleElement> basis_;
  std::vector<std::vector<std::pair<Monomial, std::size_t>>> by_comp_;
  std::size_t pairs_considered_ = 0;
};

/// `ideal_basis` must already be a Groebner basis of an ideal of the ring;
/// its elements are multiplied into every component before completion.
/// Throws InvalidInput on inhomogeneous generators and ResourceLimit on caps.
GroebnerCore buchberger(const PolyRing& ring, const std::vector<int>& twists,
                        std::vector<FreeModuleElement> gens, std::span<const Polynomial> ideal_basis,
                        const GroebnerOptions& options = {});

}  // namespace cxlab

#pragma once

// Groebner bases, normal forms and syzygies for submodules of graded free
// modules over a quotient ring.  Everything runs over the ambient polynomial
// ring with the defining ideal appended to every component.

#include <optional>
#include <vector>

#include "cxlab/buchberger.hpp"
#include "cxlab/ring.hpp"

namespace cxlab {

struct ModuleGroebnerBasis {
  RingPtr ring;
  std::vector<int> twists;
  GroebnerCore core;

  std::size_t rank() const { return twists.size(); }
  const std::vector<FreeModuleElement>& basis() const { return core.elements(); }
};

ModuleGroebnerBasis groebner(const RingPtr& ring, const std::vector<int>& twists,
                             const std::vector<FreeModuleElement>& gens, const GroebnerOptions& options = {});

/// Throws InvalidInput when `f` does not live in the basis' free module.
FreeModuleElement normal_form(const FreeModuleElement& f, const ModuleGroebnerBasis& gb);

/// Generators of the kernel of the map R^m -> R^n given by `map`, reduced
/// modulo the ring's ideal, nonzero, and without duplicates.
std::vector<FreeModuleElement> kernel_of_map(const RingPtr& ring, const Matrix& map,
                                             const GroebnerOptions& options = {});

/// Solves map * x = target over the ring; nullopt if target is outside the image.
class MapLifter {
 public:
  MapLifter(RingPtr ring, const Matrix& map, const GroebnerOptions& options = {});
  std::optional<FreeModuleElement> lift(const FreeModuleElement& target) const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::vector<int> twists_;
  GroebnerCore core_;
};

/// Checks that `map` is homogeneous of degree 0 for its declared twists.
void validate_matrix(const QuotientRing& ring, const Matrix& map);

/// Reduces every term of `f` modulo the ring's ideal.
FreeModuleElement reduce_mod_ideal(const QuotientRing& ring, const FreeModuleElement& f);

/// The matrix product a * b over the ring, reduced.
Matrix compose(const QuotientRing& ring, const Matrix& a, const Matrix& b);

}  // namespace cxlab

#pragma once

// Elements of graded free modules and homogeneous matrices between them.
// Terms are kept in position-over-term order: a lower generator index is
// larger, ties broken by degrevlex on the monomial.

#include <cstdint>
#include <optional>
#include <vector>

#include "cxlab/poly.hpp"

namespace cxlab {

struct ModuleTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Coeff coeff = 0;
};

/// -1, 0, 1 under position-over-term.
inline int pot_compare(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) {
  if (ac != bc) return ac < bc ? 1 : -1;
  return mono::compare(am, bm);
}

struct FreeModuleElement {
  std::vector<ModuleTerm> terms;  // strictly decreasing, nonzero coefficients

  bool is_zero() const { return terms.empty(); }
  const ModuleTerm& lead() const { return terms.front(); }

  /// Component polynomial at generator `comp`.
  Polynomial component(std::uint32_t comp) const;
  /// Largest component index present plus one (0 for the zero element).
  std::uint32_t span() const;

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b);
};

namespace elem {

/// a - c*m*b.
FreeModuleElement sub_mul(const PrimeField& f, const FreeModuleElement& a, Coeff c,
                          const Monomial& m, const FreeModuleElement& b);
FreeModuleElement add(const PrimeField& f, const FreeModuleElement& a, const FreeModuleElement& b);
FreeModuleElement scale(const PrimeField& f, const FreeModuleElement& a, Coeff c);
FreeModuleElement monic(const PrimeField& f, const FreeModuleElement& a);
/// p * a over the ambient polynomial ring (no reduction).
FreeModuleElement mul_poly(const PolyRing& ring, const Polynomial& p, const FreeModuleElement& a);
/// Places p in component comp.
FreeModuleElement from_poly(const Polynomial& p, std::uint32_t comp);
/// Builds an element from unsorted terms, combining duplicates.
FreeModuleElement from_terms(const PrimeField& f, std::vector<ModuleTerm> terms);
/// Renumbers components through `map` (entries < 0 drop the component).
FreeModuleElement remap(const FreeModuleElement& a, const std::vector<long>& map);
/// Adds `offset` to every component index.
FreeModuleElement shift(const FreeModuleElement& a, std::int64_t offset);

/// Common degree given generator twists, or nullopt if inhomogeneous or zero.
std::optional<int> degree(const FreeModuleElement& a, const std::vector<int>& twists);

}  // namespace elem

/// Homogeneous degree-0 map between graded free modules; column j is the
/// image of source generator j (degree source_twists[j]) in the target.
struct Matrix {
  std::vector<int> target_twists;
  std::vector<int> source_twists;
  std::vector<FreeModuleElement> columns;

  std::size_t rows() const { return target_twists.size(); }
  std::size_t cols() const { return source_twists.size(); }
  Polynomial entry(std::size_t row, std::size_t col) const {
    return columns[col].component(static_cast<std::uint32_t>(row));
  }
};

}  // namespace cxlab

#include "cxlab/gb.hpp"

#include <algorithm>

#include "cxlab/error.hpp"

namespace cxlab {

namespace {

void check_element(const FreeModuleElement& f, const std::vector<int>& twists, const char* what) {
  for (const auto& t : f.terms)
    if (t.comp >= twists.size())
      throw InvalidInput(std::string(what) + ": component " + std::to_string(t.comp) +
                         " exceeds free-module rank " + std::to_string(twists.size()));
  if (!f.is_zero() && !elem::degree(f, twists))
    throw InvalidInput(std::string(what) + ": element is not homogeneous for the declared twists");
}

}  // namespace

FreeModuleElement reduce_mod_ideal(const QuotientRing& ring, const FreeModuleElement& f) {
  if (ring.codim() == 0) return f;
  const auto& fld = ring.field();
  std::vector<ModuleTerm> terms;
  for (const auto& t : f.terms) {
    const Polynomial& nf = ring.reduce_monomial(t.mono);
    for (const auto& u : nf.terms) terms.push_back({u.mono, t.comp, fld.mul(u.coeff, t.coeff)});
  }
  return elem::from_terms(fld, std::move(terms));
}

void validate_matrix(const QuotientRing& ring, const Matrix& map) {
  (void)ring;
  if (map.columns.size() != map.cols()) throw InvalidInput("matrix column count disagrees with source twists");
  for (std::size_t j = 0; j < map.cols(); ++j) {
    const auto& c = map.columns[j];
    for (const auto& t : c.terms) {
      if (t.comp >= map.rows()) throw InvalidInput("matrix entry row exceeds target rank");
      if (t.mono.degree + map.target_twists[t.comp] != map.source_twists[j])
        throw InvalidInput("matrix column " + std::to_string(j) + " is inconsistent with the declared twists");
    }
  }
}

Matrix compose(const QuotientRing& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix dimensions do not compose");
  Matrix out{a.target_twists, b.source_twists, {}};
  const auto& amb = ring.ambient();
  for (const auto& col : b.columns) {
    FreeModuleElement acc;
    for (std::uint32_t k = 0; k < b.rows(); ++k) {
      Polynomial e = col.component(k);
      if (e.is_zero()) continue;
      acc = elem::add(ring.field(), acc, elem::mul_poly(amb, e, a.columns[k]));
    }
    out.columns.push_back(reduce_mod_ideal(ring, acc));
  }
  return out;
}

ModuleGroebnerBasis groebner(const RingPtr& ring, const std::vector<int>& twists,
                             const std::vector<FreeModuleElement>& gens, const GroebnerOptions& options) {
  if (!ring) throw InvalidInput("groebner: null ring");
  for (const auto& g : gens) check_element(g, twists, "groebner");
  ModuleGroebnerBasis out{ring, twists, {}};
  out.core = buchberger(ring->ambient(), twists, gens, ring->ideal_basis(), options);
  return out;
}

FreeModuleElement normal_form(const FreeModuleElement& f, const ModuleGroebnerBasis& gb) {
  check_element(f, gb.twists, "normal_form");
  return gb.core.reduce(f);
}

std::vector<FreeModuleElement> kernel_of_map(const RingPtr& ring, const Matrix& map,
                                             const GroebnerOptions& options) {
  validate_matrix(*ring, map);
  const std::size_t n = map.rows(), m = map.cols();
  std::vector<int> twists = map.target_twists;
  twists.insert(twists.end(), map.source_twists.begin(), map.source_twists.end());
  std::vector<FreeModuleElement> gens;
  gens.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    FreeModuleElement g = reduce_mod_ideal(*ring, map.columns[j]);
    g.terms.push_back({Monomial{}, static_cast<std::uint32_t>(n + j), 1});
    gens.push_back(std::move(g));
  }
  GroebnerCore core = buchberger(ring->ambient(), twists, gens, ring->ideal_basis(), options);
  std::vector<FreeModuleElement> out;
  for (const auto& g : core.elements()) {
    if (g.lead().comp < n) continue;
    FreeModuleElement k = reduce_mod_ideal(*ring, elem::shift(g, -static_cast<std::int64_t>(n)));
    if (k.is_zero()) continue;
    k = elem::monic(ring->field(), k);
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(std::move(k));
  }
  return out;
}

MapLifter::MapLifter(RingPtr ring, const Matrix& map, const GroebnerOptions& options)
    : ring_(std::move(ring)), rows_(map.rows()) {
  validate_matrix(*ring_, map);
  twists_ = map.target_twists;
  twists_.insert(twists_.end(), map.source_twists.begin(), map.source_twists.end());
  std::vector<FreeModuleElement> gens;
  for (std::size_t j = 0; j < map.cols(); ++j) {
    FreeModuleElement g = reduce_mod_ideal(*ring_, map.columns[j]);
    g.terms.push_back({Monomial{}, static_cast<std::uint32_t>(rows_ + j), 1});
    gens.push_back(std::move(g));
  }
  core_ = buchberger(ring_->ambient(), twists_, gens, ring_->ideal_basis(), options);
}

std::optional<FreeModuleElement> MapLifter::lift(const FreeModuleElement& target) const {
  std::vector<int> target_twists(twists_.begin(), twists_.begin() + static_cast<long>(rows_));
  check_element(target, target_twists, "lift");
  FreeModuleElement r = core_.reduce(target);
  if (!r.is_zero() && r.lead().comp < rows_) return std::nullopt;
  FreeModuleElement x = elem::scale(ring_->field(), elem::shift(r, -static_cast<std::int64_t>(rows_)),
                                    ring_->field().neg(1));
  return reduce_mod_ideal(*ring_, x);
}

}  // namespace cxlab

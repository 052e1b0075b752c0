#include "cxlab/free_module.hpp"

#include <algorithm>

#include "cxlab/error.hpp"

namespace cxlab {

Polynomial FreeModuleElement::component(std::uint32_t comp) const {
  Polynomial p;
  for (const auto& t : terms)
    if (t.comp == comp) p.terms.push_back({t.mono, t.coeff});
  return p;
}

std::uint32_t FreeModuleElement::span() const {
  std::uint32_t s = 0;
  for (const auto& t : terms) s = std::max(s, t.comp + 1);
  return s;
}

bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& x = a.terms[i];
    const auto& y = b.terms[i];
    if (x.comp != y.comp || x.mono != y.mono || x.coeff != y.coeff) return false;
  }
  return true;
}

namespace elem {

FreeModuleElement sub_mul(const PrimeField& f, const FreeModuleElement& a, Coeff c,
                          const Monomial& m, const FreeModuleElement& b) {
  if (c == 0 || b.is_zero()) return a;
  FreeModuleElement r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  const Coeff nc = f.neg(c);
  std::size_t i = 0, j = 0;
  const auto& at = a.terms;
  const auto& bt = b.terms;
  while (i < at.size() || j < bt.size()) {
    if (j == bt.size()) {
      r.terms.insert(r.terms.end(), at.begin() + static_cast<long>(i), at.end());
      break;
    }
    Monomial bm = mono::product(bt[j].mono, m);
    int cmp = i == at.size() ? -1 : pot_compare(at[i].mono, at[i].comp, bm, bt[j].comp);
    if (cmp > 0) {
      r.terms.push_back(at[i++]);
    } else if (cmp < 0) {
      r.terms.push_back({bm, bt[j].comp, f.mul(nc, bt[j].coeff)});
      ++j;
    } else {
      Coeff v = f.add(at[i].coeff, f.mul(nc, bt[j].coeff));
      if (v != 0) r.terms.push_back({bm, bt[j].comp, v});
      ++i;
      ++j;
    }
  }
  return r;
}

FreeModuleElement add(const PrimeField& f, const FreeModuleElement& a, const FreeModuleElement& b) {
  return sub_mul(f, a, f.neg(1), Monomial{}, b);
}

FreeModuleElement scale(const PrimeField& f, const FreeModuleElement& a, Coeff c) {
  FreeModuleElement r;
  if (c == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({t.mono, t.comp, f.mul(t.coeff, c)});
  return r;
}

FreeModuleElement monic(const PrimeField& f, const FreeModuleElement& a) {
  if (a.is_zero() || a.lead().coeff == 1) return a;
  return scale(f, a, f.inv(a.lead().coeff));
}

FreeModuleElement mul_poly(const PolyRing& ring, const Polynomial& p, const FreeModuleElement& a) {
  FreeModuleElement r;
  const auto& f = ring.field();
  for (const auto& t : p.terms) r = sub_mul(f, r, f.neg(t.coeff), t.mono, a);
  return r;
}

FreeModuleElement from_poly(const Polynomial& p, std::uint32_t comp) {
  FreeModuleElement r;
  r.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) r.terms.push_back({t.mono, comp, t.coeff});
  return r;
}

FreeModuleElement from_terms(const PrimeField& f, std::vector<ModuleTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const ModuleTerm& a, const ModuleTerm& b) {
    return pot_compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  FreeModuleElement r;
  for (const auto& t : terms) {
    if (!r.terms.empty() && r.terms.back().comp == t.comp && r.terms.back().mono == t.mono) {
      r.terms.back().coeff = f.add(r.terms.back().coeff, t.coeff);
      if (r.terms.back().coeff == 0) r.terms.pop_back();
    } else if (t.coeff != 0) {
      r.terms.push_back(t);
    }
  }
  return r;
}

FreeModuleElement remap(const FreeModuleElement& a, const std::vector<long>& map) {
  std::vector<ModuleTerm> terms;
  terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    if (t.comp >= map.size()) throw InternalError("component out of range in remap");
    long c = map[t.comp];
    if (c >= 0) terms.push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
  }
  std::sort(terms.begin(), terms.end(), [](const ModuleTerm& x, const ModuleTerm& y) {
    return pot_compare(x.mono, x.comp, y.mono, y.comp) > 0;
  });
  return FreeModuleElement{std::move(terms)};
}

FreeModuleElement shift(const FreeModuleElement& a, std::int64_t offset) {
  FreeModuleElement r = a;
  for (auto& t : r.terms) t.comp = static_cast<std::uint32_t>(t.comp + offset);
  return r;
}

std::optional<int> degree(const FreeModuleElement& a, const std::vector<int>& twists) {
  if (a.is_zero()) return std::nullopt;
  std::optional<int> d;
  for (const auto& t : a.terms) {
    if (t.comp >= twists.size()) throw InvalidInput("element component exceeds free-module rank");
    int td = t.mono.degree + twists[t.comp];
    if (!d) d = td;
    else if (*d != td) return std::nullopt;
  }
  return d;
}

}  // namespace elem
}  // namespace cxlab

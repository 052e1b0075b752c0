#include "cxlab/buchberger.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "cxlab/error.hpp"

namespace cxlab {

namespace {

FreeModuleElement mul_mono(const FreeModuleElement& a, const Monomial& m) {
  FreeModuleElement r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({mono::product(t.mono, m), t.comp, t.coeff});
  return r;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t comp;
  int degree;
};

bool pair_less(const Pair& a, const Pair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  int c = pot_compare(a.lcm, a.comp, b.lcm, b.comp);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

/// Growing basis with per-component lead index, used during completion.
class WorkingBasis {
 public:
  WorkingBasis(const PrimeField& f, std::size_t rank) : field_(f), by_comp_(rank) {}

  std::size_t size() const { return elems_.size(); }
  const FreeModuleElement& operator[](std::size_t i) const { return elems_[i]; }
  bool is_ideal(std::size_t i) const { return ideal_[i]; }

  std::size_t push(FreeModuleElement e, bool ideal) {
    std::size_t idx = elems_.size();
    by_comp_[e.lead().comp].push_back({e.lead().mono, idx});
    elems_.push_back(std::move(e));
    ideal_.push_back(ideal);
    return idx;
  }

  long find_divisor(const ModuleTerm& t) const {
    for (const auto& [m, idx] : by_comp_[t.comp])
      if (mono::divides(m, t.mono)) return static_cast<long>(idx);
    return -1;
  }

  FreeModuleElement reduce(FreeModuleElement f) const {
    std::vector<ModuleTerm> done;
    while (!f.is_zero()) {
      const ModuleTerm lt = f.lead();
      long g = find_divisor(lt);
      if (g < 0) {
        done.push_back(lt);
        f.terms.erase(f.terms.begin());
        continue;
      }
      const auto& ge = elems_[static_cast<std::size_t>(g)];
      f = elem::sub_mul(field_, f, lt.coeff, mono::quotient(lt.mono, ge.lead().mono), ge);
    }
    return FreeModuleElement{std::move(done)};
  }

  std::vector<FreeModuleElement>& elems() { return elems_; }

 private:
  PrimeField field_;
  std::vector<FreeModuleElement> elems_;
  std::vector<bool> ideal_;
  std::vector<std::vector<std::pair<Monomial, std::size_t>>> by_comp_;
};

}  // namespace

void GroebnerCore::rebuild_index() {
  by_comp_.assign(twists_.size(), {});
  for (std::size_t i = 0; i < basis_.size(); ++i)
    by_comp_[basis_[i].lead().comp].push_back({basis_[i].lead().mono, i});
}

long GroebnerCore::find_divisor(const ModuleTerm& t) const {
  if (t.comp >= by_comp_.size()) throw InvalidInput("element component exceeds free-module rank");
  for (const auto& [m, idx] : by_comp_[t.comp])
    if (mono::divides(m, t.mono)) return static_cast<long>(idx);
  return -1;
}

FreeModuleElement GroebnerCore::reduce(const FreeModuleElement& input) const {
  FreeModuleElement f = input;
  std::vector<ModuleTerm> done;
  while (!f.is_zero()) {
    const ModuleTerm lt = f.lead();
    long g = find_divisor(lt);
    if (g < 0) {
      done.push_back(lt);
      f.terms.erase(f.terms.begin());
      continue;
    }
    const auto& ge = basis_[static_cast<std::size_t>(g)];
    f = elem::sub_mul(field_, f, lt.coeff, mono::quotient(lt.mono, ge.lead().mono), ge);
  }
  return FreeModuleElement{std::move(done)};
}

bool GroebnerCore::contains(const FreeModuleElement& f) const {
  FreeModuleElement cur = f;
  while (!cur.is_zero()) {
    long g = find_divisor(cur.lead());
    if (g < 0) return false;
    const auto& ge = basis_[static_cast<std::size_t>(g)];
    cur = elem::sub_mul(field_, cur, cur.lead().coeff,
                        mono::quotient(cur.lead().mono, ge.lead().mono), ge);
  }
  return true;
}

std::vector<Monomial> GroebnerCore::leads_in(std::uint32_t comp) const {
  std::vector<Monomial> out;
  if (comp >= by_comp_.size()) return out;
  for (const auto& [m, idx] : by_comp_[comp]) out.push_back(m);
  return out;
}

GroebnerCore buchberger(const PolyRing& ring, const std::vector<int>& twists,
                        std::vector<FreeModuleElement> gens, std::span<const Polynomial> ideal_basis,
                        const GroebnerOptions& options) {
  const PrimeField& f = ring.field();
  const std::size_t rank = twists.size();
  WorkingBasis work(f, rank);
  std::vector<Pair> pairs;
  std::size_t pairs_created = 0;

  auto add_pairs = [&](std::size_t t) {
    const FreeModuleElement& h = work[t];
    const std::uint32_t comp = h.lead().comp;
    const Monomial lt = h.lead().mono;
    // Old pairs made redundant by the new leading term.
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.comp != comp || !mono::divides(lt, p.lcm)) return false;
      Monomial li = ring.lcm(work[p.i].lead().mono, lt);
      Monomial lj = ring.lcm(work[p.j].lead().mono, lt);
      return li != p.lcm && lj != p.lcm;
    });
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < t; ++g) {
      if (work[g].lead().comp != comp) continue;
      if (work.is_ideal(g) && work.is_ideal(t)) continue;
      Monomial l = ring.lcm(work[g].lead().mono, lt);
      cand.push_back({g, t, l, comp, l.degree + twists[comp]});
    }
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (!mono::divides(cand[b].lcm, cand[a].lcm)) continue;
        // Proper divisor, or equal lcm with the earlier index kept.
        if (cand[b].lcm != cand[a].lcm || b < a) keep[a] = false;
      }
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      pairs.push_back(cand[a]);
      if (++pairs_created > options.pair_cap)
        throw ResourceLimit("Groebner pair cap " + std::to_string(options.pair_cap) + " exceeded");
    }
  };

  // The appended ideal is already a Groebner basis in every component.
  for (std::uint32_t c = 0; c < rank; ++c) {
    for (const auto& p : ideal_basis) {
      if (p.is_zero()) continue;
      FreeModuleElement e = elem::monic(f, elem::from_poly(p, c));
      std::size_t idx = work.push(std::move(e), true);
      add_pairs(idx);
    }
  }

  std::map<int, std::vector<FreeModuleElement>> pending;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    auto d = elem::degree(g, twists);
    if (!d) throw InvalidInput("inhomogeneous generator passed to Groebner basis computation");
    pending[*d].push_back(std::move(g));
  }

  while (!pending.empty() || !pairs.empty()) {
    int d = std::numeric_limits<int>::max();
    if (!pending.empty()) d = pending.begin()->first;
    for (const auto& p : pairs) d = std::min(d, p.degree);
    if (d > options.degree_cap)
      throw ResourceLimit("Groebner degree cap " + std::to_string(options.degree_cap) + " exceeded");

    std::vector<FreeModuleElement> todo;
    if (auto it = pending.find(d); it != pending.end()) {
      todo = std::move(it->second);
      pending.erase(it);
    }
    std::vector<Pair> batch;
    for (const auto& p : pairs)
      if (p.degree == d) batch.push_back(p);
    std::erase_if(pairs, [d](const Pair& p) { return p.degree == d; });
    std::sort(batch.begin(), batch.end(), pair_less);

    auto process = [&](FreeModuleElement s) {
      FreeModuleElement r = work.reduce(std::move(s));
      if (r.is_zero()) return;
      std::size_t idx = work.push(elem::monic(f, r), false);
      add_pairs(idx);
    };
    for (auto& g : todo) process(std::move(g));
    for (const auto& p : batch) {
      const auto& gi = work[p.i];
      const auto& gj = work[p.j];
      FreeModuleElement s = mul_mono(gi, mono::quotient(p.lcm, gi.lead().mono));
      s = elem::sub_mul(f, s, 1, mono::quotient(p.lcm, gj.lead().mono), gj);
      process(std::move(s));
    }
  }

  // Auto-reduction: keep minimal leading terms, then reduce tails.
  std::vector<std::size_t> order(work.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& la = work[a].lead();
    const auto& lb = work[b].lead();
    int c = pot_compare(la.mono, la.comp, lb.mono, lb.comp);
    return c != 0 ? c < 0 : a < b;
  });
  GroebnerCore core;
  core.field_ = f;
  core.twists_ = twists;
  core.pairs_considered_ = pairs_created;
  core.by_comp_.assign(rank, {});
  for (std::size_t idx : order) {
    const ModuleTerm& lt = work[idx].lead();
    if (core.find_divisor(lt) >= 0) continue;
    core.by_comp_[lt.comp].push_back({lt.mono, core.basis_.size()});
    core.basis_.push_back(work[idx]);
  }
  for (auto& g : core.basis_) {
    FreeModuleElement tail;
    tail.terms.assign(g.terms.begin() + 1, g.terms.end());
    FreeModuleElement red = core.reduce(tail);
    red.terms.insert(red.terms.begin(), g.lead());
    g = std::move(red);
  }
  core.rebuild_index();
  return core;
}

}  // namespace cxlab

#include "cxlab/module.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "cxlab/error.hpp"
#include "json.hpp"
#include "text_util.hpp"

namespace cxlab {

namespace {

struct TermKey {
  std::uint64_t packed;
  std::uint32_t comp;
  bool operator==(const TermKey& o) const { return packed == o.packed && comp == o.comp; }
};

struct TermKeyHash {
  std::size_t operator()(const TermKey& k) const noexcept {
    std::uint64_t x = (k.packed ^ (static_cast<std::uint64_t>(k.comp) * 0xC2B2AE3D27D4EB4Full)) * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

struct PieceData {
  std::vector<PieceEntry> basis;
  std::vector<std::uint32_t> offsets;  // per component
};

bool same_leads(std::vector<Monomial> a, std::vector<Monomial> b) {
  auto key = [](const Monomial& x, const Monomial& y) { return x.packed < y.packed; };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  return a == b;
}

bool has_all_pure_powers(const PolyRing& ring, const std::vector<Monomial>& leads) {
  for (int v = 0; v < ring.nvars(); ++v) {
    bool found = false;
    for (const auto& m : leads)
      if (m.exponent(v) > 0 && m.degree == m.exponent(v) * ring.weights()[static_cast<std::size_t>(v)]) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

/// Eliminates unit entries: pivot at the lowest row holding a unit, then the lowest column.
void prune_units(const QuotientRing& ring, std::vector<int>& twists, std::vector<FreeModuleElement>& rels) {
  const auto& f = ring.field();
  const auto& amb = ring.ambient();
  for (;;) {
    long prow = -1, pcol = -1;
    Coeff pc = 0;
    for (std::size_t i = 0; i < twists.size() && prow < 0; ++i)
      for (std::size_t j = 0; j < rels.size(); ++j) {
        bool unit = false;
        for (const auto& t : rels[j].terms)
          if (t.comp == i && t.mono.is_one()) {
            unit = true;
            pc = t.coeff;
          }
        if (unit) {
          prow = static_cast<long>(i);
          pcol = static_cast<long>(j);
          break;
        }
      }
    if (prow < 0) break;
    const auto row = static_cast<std::uint32_t>(prow);
    const FreeModuleElement pivot = rels[static_cast<std::size_t>(pcol)];
    const Coeff inv = f.inv(pc);
    std::vector<FreeModuleElement> next;
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (static_cast<long>(j) == pcol) continue;
      Polynomial e = rels[j].component(row);
      FreeModuleElement c = rels[j];
      if (!e.is_zero()) c = elem::sub_mul(f, c, 1, Monomial{}, elem::mul_poly(amb, amb.scale(e, inv), pivot));
      next.push_back(c);
    }
    std::vector<long> map(twists.size());
    for (std::size_t i = 0; i < twists.size(); ++i)
      map[i] = i == row ? -1 : static_cast<long>(i < row ? i : i - 1);
    for (auto& c : next) c = reduce_mod_ideal(ring, elem::remap(c, map));
    std::erase_if(next, [](const FreeModuleElement& c) { return c.is_zero(); });
    twists.erase(twists.begin() + prow);
    rels = std::move(next);
  }
}

}  // namespace

struct GradedModule::Data {
  RingPtr ring;
  std::vector<int> twists;
  Matrix rel;
  std::string name;
  ModuleGroebnerBasis gb;
  std::vector<char> comp_free;
  std::vector<std::vector<Monomial>> comp_leads;

  mutable std::mutex mutex;
  mutable std::unordered_map<int, PieceData> pieces;
  mutable std::vector<std::unordered_map<std::uint64_t, long>> local_index;
  mutable std::unordered_map<TermKey, FreeModuleElement, TermKeyHash> nf;
  mutable std::optional<std::vector<long long>> ring_numerator;

  const PieceData& piece(int d) const {
    {
      std::lock_guard lock(mutex);
      auto it = pieces.find(d);
      if (it != pieces.end()) return it->second;
    }
    PieceData p;
    std::vector<std::pair<std::uint32_t, std::vector<Monomial>>> custom;
    for (std::uint32_t k = 0; k < twists.size(); ++k) {
      p.offsets.push_back(static_cast<std::uint32_t>(p.basis.size()));
      const int e = d - twists[k];
      if (e < 0) continue;
      if (comp_free[k]) {
        for (const auto& m : ring->standard_monomials(e)) p.basis.push_back({k, m});
      } else {
        auto ms = ring->ambient().standard_monomials(e, comp_leads[k]);
        for (const auto& m : ms) p.basis.push_back({k, m});
        custom.emplace_back(k, std::move(ms));
      }
    }
    std::lock_guard lock(mutex);
    for (auto& [k, ms] : custom)
      for (std::size_t i = 0; i < ms.size(); ++i) local_index[k][ms[i].packed] = static_cast<long>(i);
    return pieces.emplace(d, std::move(p)).first->second;
  }
};

const RingPtr& GradedModule::ring() const { return d_->ring; }
const std::vector<int>& GradedModule::twists() const { return d_->twists; }
const Matrix& GradedModule::relations() const { return d_->rel; }
const std::string& GradedModule::name() const { return d_->name; }
const ModuleGroebnerBasis& GradedModule::groebner_basis() const { return d_->gb; }

GradedModule GradedModule::create(RingPtr ring, std::vector<int> twists, std::vector<FreeModuleElement> relations,
                                  std::string name, bool prune) {
  if (!ring) throw InvalidInput("module over a null ring");
  for (auto& r : relations) {
    for (const auto& t : r.terms)
      if (t.comp >= twists.size()) throw InvalidInput("relation refers to a generator that does not exist");
    if (!r.is_zero() && !elem::degree(r, twists))
      throw InvalidInput("relation is not homogeneous for the generator twists");
    r = reduce_mod_ideal(*ring, r);
  }
  std::erase_if(relations, [](const FreeModuleElement& c) { return c.is_zero(); });
  if (prune) prune_units(*ring, twists, relations);

  std::vector<std::size_t> order(twists.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return twists[a] < twists[b]; });
  std::vector<long> map(twists.size());
  std::vector<int> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    map[order[i]] = static_cast<long>(i);
    sorted.push_back(twists[order[i]]);
  }
  for (auto& r : relations) r = elem::monic(ring->field(), elem::remap(r, map));

  auto d = std::make_shared<Data>();
  d->ring = ring;
  d->twists = sorted;
  d->name = std::move(name);
  d->rel.target_twists = sorted;
  for (const auto& r : relations) d->rel.source_twists.push_back(*elem::degree(r, sorted));
  d->rel.columns = relations;
  d->gb = groebner(ring, sorted, relations);
  d->local_index.resize(sorted.size());
  for (std::uint32_t k = 0; k < sorted.size(); ++k) {
    auto leads = d->gb.core.leads_in(k);
    d->comp_free.push_back(same_leads(leads, ring->ideal_leads()) ? 1 : 0);
    d->comp_leads.push_back(std::move(leads));
  }
  GradedModule m;
  m.d_ = std::move(d);
  return m;
}

GradedModule GradedModule::free(RingPtr ring, std::vector<int> twists, std::string name) {
  return create(std::move(ring), std::move(twists), {}, std::move(name));
}

GradedModule GradedModule::residue_field(RingPtr ring) {
  std::vector<FreeModuleElement> rels;
  for (int v = 0; v < ring->nvars(); ++v) {
    FreeModuleElement e;
    e.terms.push_back({ring->ambient().variable(v), 0, 1});
    rels.push_back(std::move(e));
  }
  return create(std::move(ring), {0}, std::move(rels), "k");
}

GradedModule GradedModule::cyclic(RingPtr ring, const std::vector<Polynomial>& gens, std::string name) {
  std::vector<FreeModuleElement> rels;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!ring->ambient().is_homogeneous(g)) throw InvalidInput("inhomogeneous ideal generator");
    rels.push_back(elem::from_poly(g, 0));
  }
  return create(std::move(ring), {0}, std::move(rels), std::move(name));
}

GradedModule GradedModule::with_name(std::string name) const {
  GradedModule m = create(ring(), twists(), relations().columns, std::move(name));
  return m;
}

GradedModule GradedModule::twisted(int s) const {
  std::vector<int> t = twists();
  for (auto& x : t) x -= s;
  return create(ring(), std::move(t), relations().columns, name());
}

int GradedModule::min_twist() const { return twists().empty() ? 0 : twists().front(); }
int GradedModule::max_twist() const { return twists().empty() ? 0 : twists().back(); }

std::pair<int, std::vector<long long>> GradedModule::hilbert_numerator() const {
  const auto& amb = ring()->ambient();
  if (twists().empty()) return {0, {0}};
  const int low = min_twist();
  std::vector<long long> acc{0};
  for (std::size_t k = 0; k < twists().size(); ++k) {
    std::vector<long long> num;
    if (d_->comp_free[k]) {
      std::lock_guard lock(d_->mutex);
      if (!d_->ring_numerator) d_->ring_numerator = cxlab::hilbert_numerator(amb, ring()->ideal_leads());
      num = *d_->ring_numerator;
    } else {
      num = cxlab::hilbert_numerator(amb, d_->comp_leads[k]);
    }
    const std::size_t s = static_cast<std::size_t>(twists()[k] - low);
    if (acc.size() < num.size() + s) acc.resize(num.size() + s, 0);
    for (std::size_t i = 0; i < num.size(); ++i) acc[i + s] += num[i];
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return {low, acc};
}

std::vector<long long> GradedModule::hilbert_function(int lo, int hi) const {
  std::vector<long long> out(static_cast<std::size_t>(std::max(0, hi - lo + 1)), 0);
  if (hi < lo || twists().empty()) return out;
  auto [low, num] = hilbert_numerator();
  if (hi < low) return out;
  auto series = expand_hilbert_series(ring()->ambient(), num, hi - low);
  for (int d = std::max(lo, low); d <= hi; ++d) out[static_cast<std::size_t>(d - lo)] = series[static_cast<std::size_t>(d - low)];
  return out;
}

FiniteLength GradedModule::finite_length() const {
  FiniteLength out;
  const auto& amb = ring()->ambient();
  int top = min_twist();
  for (std::size_t k = 0; k < twists().size(); ++k) {
    if (!has_all_pure_powers(amb, d_->comp_leads[k])) return out;
    int span = 0;
    for (int v = 0; v < amb.nvars(); ++v) {
      int e = kMaxExponent;
      for (const auto& m : d_->comp_leads[k])
        if (m.exponent(v) > 0 && m.degree == m.exponent(v) * amb.weights()[static_cast<std::size_t>(v)])
          e = std::min(e, m.exponent(v));
      span += (e - 1) * amb.weights()[static_cast<std::size_t>(v)];
    }
    top = std::max(top, twists()[k] + span);
  }
  out.finite = true;
  if (twists().empty()) return out;
  auto hf = hilbert_function(min_twist(), top);
  for (std::size_t i = 0; i < hf.size(); ++i) {
    out.length += hf[i];
    if (hf[i] != 0) out.top_degree = min_twist() + static_cast<int>(i);
  }
  return out;
}

const std::vector<PieceEntry>& GradedModule::piece(int d) const { return d_->piece(d).basis; }

long GradedModule::index_of(std::uint32_t comp, const Monomial& m) const {
  if (comp >= twists().size()) return -1;
  const PieceData& p = d_->piece(m.degree + twists()[comp]);
  long local;
  if (d_->comp_free[comp]) {
    local = ring()->standard_index(m);
  } else {
    std::lock_guard lock(d_->mutex);
    auto it = d_->local_index[comp].find(m.packed);
    local = it == d_->local_index[comp].end() ? -1 : it->second;
  }
  return local < 0 ? -1 : static_cast<long>(p.offsets[comp]) + local;
}

const FreeModuleElement& GradedModule::normal_form_term(std::uint32_t comp, const Monomial& m) const {
  TermKey key{m.packed, comp};
  {
    std::lock_guard lock(d_->mutex);
    auto it = d_->nf.find(key);
    if (it != d_->nf.end()) return it->second;
  }
  FreeModuleElement r;
  if (d_->comp_free[comp]) {
    // Only the ring's relations act on this component.
    r = elem::from_poly(ring()->reduce_monomial(m), comp);
  } else {
    FreeModuleElement single;
    single.terms.push_back({m, comp, 1});
    r = d_->gb.core.reduce(single);
  }
  std::lock_guard lock(d_->mutex);
  return d_->nf.emplace(key, std::move(r)).first->second;
}

void GradedModule::add_product(Accumulator& acc, std::uint32_t offset, const Polynomial& p, const Monomial& m,
                               std::uint32_t comp, Coeff scale) const {
  const auto& f = ring()->field();
  for (const auto& t : p.terms) {
    const Coeff c = f.mul(t.coeff, scale);
    const FreeModuleElement& nf = normal_form_term(comp, mono::product(t.mono, m));
    for (const auto& u : nf.terms) {
      long idx = index_of(u.comp, u.mono);
      if (idx < 0) throw InternalError("normal form produced a non-standard term");
      acc.add(offset + static_cast<std::uint32_t>(idx), f.mul(c, u.coeff));
    }
  }
}

SparseVec GradedModule::coordinates(const FreeModuleElement& f) const {
  Accumulator acc(ring()->field());
  for (const auto& t : f.terms) {
    Polynomial one;
    one.terms.push_back({Monomial{}, t.coeff});
    add_product(acc, 0, one, t.mono, t.comp, 1);
  }
  return acc.take();
}

FreeModuleElement GradedModule::element_of(int d, const SparseVec& v) const {
  const auto& basis = piece(d);
  std::vector<ModuleTerm> terms;
  for (const auto& [i, c] : v) terms.push_back({basis[i].mono, basis[i].comp, c});
  return elem::from_terms(ring()->field(), std::move(terms));
}

std::string GradedModule::render() const {
  const auto& amb = ring()->ambient();
  std::string s = "twists ";
  for (std::size_t i = 0; i < twists().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(twists()[i]);
  }
  if (relations().cols() == 0) return s;
  s += "; rels ";
  for (std::size_t j = 0; j < relations().cols(); ++j) {
    if (j) s += ", ";
    s += "[";
    for (std::size_t i = 0; i < relations().rows(); ++i) {
      if (i) s += ", ";
      Polynomial e = relations().entry(i, j);
      s += e.is_zero() ? "0" : amb.format(e);
    }
    s += "]";
  }
  return s;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  if (!a.ring()->same_ring(*b.ring())) throw InvalidInput("direct sum of modules over different rings");
  std::vector<int> tw = a.twists();
  tw.insert(tw.end(), b.twists().begin(), b.twists().end());
  std::vector<FreeModuleElement> rels = a.relations().columns;
  for (const auto& c : b.relations().columns) rels.push_back(elem::shift(c, static_cast<std::int64_t>(a.num_generators())));
  return GradedModule::create(a.ring(), std::move(tw), std::move(rels));
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : text::split_top_level(s, ',')) {
    if (item.empty()) continue;
    int v;
    if (!text::parse_int(item, v)) throw InvalidInput("bad integer '" + item + "' in module description");
    out.push_back(v);
  }
  return out;
}

GradedModule from_columns(const RingPtr& ring, std::vector<int> twists, const std::vector<std::vector<std::string>>& cols,
                          std::string name) {
  std::vector<FreeModuleElement> rels;
  for (const auto& col : cols) {
    if (col.size() != twists.size())
      throw InvalidInput("relation column has " + std::to_string(col.size()) + " entries, expected " +
                         std::to_string(twists.size()));
    std::vector<ModuleTerm> terms;
    for (std::size_t i = 0; i < col.size(); ++i) {
      Polynomial p = ring->ambient().parse(col[i]);
      for (const auto& t : p.terms) terms.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
    }
    rels.push_back(elem::from_terms(ring->field(), std::move(terms)));
  }
  return GradedModule::create(ring, std::move(twists), std::move(rels), std::move(name));
}

}  // namespace

GradedModule parse_module(const RingPtr& ring, std::string_view input) {
  const std::string t = text::trim(input);
  if (t.empty()) throw InvalidInput("empty module description");
  if (t == "k" || t == "residue") return GradedModule::residue_field(ring);
  if (t == "ring" || t == "A" || t == "R") return GradedModule::free(ring, {0}, "A");
  if (t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
      auto twists = j.at("twists").get<std::vector<int>>();
      auto cols = j.value("relations", std::vector<std::vector<std::string>>{});
      return from_columns(ring, std::move(twists), cols, j.value("name", std::string{}));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("module JSON: ") + e.what());
    }
  }
  if (t.rfind("free", 0) == 0) {
    auto tw = parse_int_list(t.substr(4));
    if (tw.empty()) tw = {0};
    return GradedModule::free(ring, tw);
  }
  if (t.rfind("quotient", 0) == 0) {
    std::vector<Polynomial> gens;
    for (const auto& g : text::split_top_level(t.substr(8), ','))
      if (!g.empty()) gens.push_back(ring->ambient().parse(g));
    return GradedModule::cyclic(ring, gens);
  }
  if (t.rfind("twists", 0) == 0) {
    std::vector<int> twists;
    std::vector<std::vector<std::string>> cols;
    for (const auto& part : text::split_top_level(t, ';')) {
      if (part.rfind("twists", 0) == 0) {
        twists = parse_int_list(part.substr(6));
      } else if (part.rfind("rels", 0) == 0) {
        for (const auto& c : text::split_top_level(part.substr(4), ',')) {
          if (c.empty()) continue;
          if (c.front() != '[' || c.back() != ']') throw InvalidInput("relation column '" + c + "' must be bracketed");
          std::vector<std::string> entries;
          for (const auto& e : text::split_top_level(std::string_view(c).substr(1, c.size() - 2), ','))
            entries.push_back(e);
          cols.push_back(std::move(entries));
        }
      } else if (!part.empty()) {
        throw InvalidInput("unrecognised module clause '" + part + "'");
      }
    }
    return from_columns(ring, std::move(twists), cols, {});
  }
  throw InvalidInput("unrecognised module description '" + t + "'");
}

}  // namespace cxlab

#include "cxlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

#include "cxlab/error.hpp"
#include "text_util.hpp"

namespace cxlab {

using text::split_top_level;
using text::trim;

namespace {

using IntPoly = std::vector<long long>;

void trim_poly(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim_poly(r);
  return r;
}

IntPoly poly_shift(const IntPoly& a, int s) {
  IntPoly r(a.size() + static_cast<std::size_t>(s), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(s)] = a[i];
  return r;
}

IntPoly poly_mul_one_minus(const IntPoly& a, int d) {
  IntPoly r(a.size() + static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + static_cast<std::size_t>(d)] -= a[i];
  }
  trim_poly(r);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.packed < b.packed;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (mono::divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

IntPoly numerator_rec(const PolyRing& ring, std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return IntPoly{1};
  for (const auto& g : gens)
    if (g.is_one()) return IntPoly{0};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      coprime = mono::coprime(gens[i], gens[j]);
  if (coprime) {
    IntPoly r{1};
    for (const auto& g : gens) r = poly_mul_one_minus(r, g.degree);
    return r;
  }
  // Pivot on the variable shared by the most generators, at its smallest
  // positive exponent.
  int best_var = -1, best_count = 0;
  for (int v = 0; v < ring.nvars(); ++v) {
    int count = 0;
    for (const auto& g : gens) count += g.exponent(v) > 0;
    if (count > best_count) {
      best_count = count;
      best_var = v;
    }
  }
  int e = kMaxExponent;
  for (const auto& g : gens)
    if (g.exponent(best_var) > 0) e = std::min(e, g.exponent(best_var));
  std::vector<int> ex(static_cast<std::size_t>(ring.nvars()), 0);
  ex[static_cast<std::size_t>(best_var)] = e;
  Monomial pivot = ring.make_monomial(ex);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial l = ring.lcm(g, pivot);
    colon.push_back(mono::quotient(l, pivot));
  }
  IntPoly a = numerator_rec(ring, std::move(with_pivot));
  IntPoly b = numerator_rec(ring, std::move(colon));
  return poly_add(a, poly_shift(b, pivot.degree));
}

}  // namespace

std::vector<long long> hilbert_numerator(const PolyRing& ring, std::vector<Monomial> gens) {
  return numerator_rec(ring, std::move(gens));
}

std::vector<long long> expand_hilbert_series(const PolyRing& ring, const std::vector<long long>& numerator,
                                             int truncation) {
  std::vector<long long> s(static_cast<std::size_t>(truncation) + 1, 0);
  for (std::size_t i = 0; i < numerator.size() && i < s.size(); ++i) s[i] = numerator[i];
  for (int w : ring.weights())
    for (std::size_t i = static_cast<std::size_t>(w); i < s.size(); ++i) s[i] += s[i - static_cast<std::size_t>(w)];
  return s;
}

int monomial_quotient_dimension(const PolyRing& ring, const std::vector<Monomial>& gens) {
  const int n = ring.nvars();
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (int v = 0; v < n && inside; ++v)
        if (g.exponent(v) > 0 && !(mask & (1u << v))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  // -1 means the ideal is the unit ideal.
  return best;
}

CompleteIntersectionCheck check_complete_intersection(const PolyRing& ambient,
                                                      const std::vector<Polynomial>& gens) {
  CompleteIntersectionCheck out;
  std::vector<FreeModuleElement> elems;
  std::vector<int> degs;
  for (const auto& g : gens) {
    auto d = ambient.homogeneous_degree(g);
    if (!d) throw InvalidInput("generator '" + ambient.format(g) + "' is zero or inhomogeneous");
    if (*d <= 0) throw InvalidInput("generator '" + ambient.format(g) + "' has degree 0");
    degs.push_back(*d);
    elems.push_back(elem::from_poly(g, 0));
  }
  GroebnerCore gb = buchberger(ambient, {0}, elems, {});
  std::vector<Monomial> leads = gb.leads_in(0);
  out.quotient_dimension = monomial_quotient_dimension(ambient, leads);
  const int c = static_cast<int>(gens.size());
  const bool dims_ok = out.quotient_dimension == ambient.nvars() - c;

  IntPoly predicted{1};
  int total = 0;
  for (int d : degs) {
    predicted = poly_mul_one_minus(predicted, d);
    total += d;
  }
  IntPoly actual = hilbert_numerator(ambient, leads);
  int maxw = 1;
  for (int w : ambient.weights()) maxw = std::max(maxw, w);
  int bound = total + maxw + 1;
  // The series agree everywhere iff the dimension count holds; when it does
  // not, search until the deviation shows up.
  for (int limit = bound; limit <= 4 * bound + 64; limit *= 2) {
    auto sa = expand_hilbert_series(ambient, actual, limit);
    auto sp = expand_hilbert_series(ambient, predicted, limit);
    out.compared_up_to = limit;
    for (int i = 0; i <= limit; ++i)
      if (sa[static_cast<std::size_t>(i)] != sp[static_cast<std::size_t>(i)]) {
        out.first_deviation = i;
        break;
      }
    if (out.first_deviation || dims_ok) break;
  }
  out.is_complete_intersection = dims_ok && !out.first_deviation;
  out.codim = out.is_complete_intersection ? c : 0;
  return out;
}

QuotientRing::QuotientRing(PolyRing ambient, std::vector<Polynomial> ci)
    : ambient_(std::move(ambient)), ci_(std::move(ci)) {}

RingPtr QuotientRing::create(PolyRing ambient, std::vector<Polynomial> ci_generators) {
  for (auto& g : ci_generators) g = ambient.monic(g);
  if (!ci_generators.empty()) {
    auto check = check_complete_intersection(ambient, ci_generators);
    if (!check.is_complete_intersection) {
      std::string msg = "generators do not form a regular sequence";
      if (check.first_deviation)
        msg += " (Hilbert series deviates from the complete-intersection formula in degree " +
               std::to_string(*check.first_deviation) + ")";
      throw InvalidInput(msg);
    }
  }
  std::shared_ptr<QuotientRing> r(new QuotientRing(std::move(ambient), std::move(ci_generators)));
  std::vector<FreeModuleElement> elems;
  for (const auto& g : r->ci_) elems.push_back(elem::from_poly(g, 0));
  GroebnerCore gb = buchberger(r->ambient_, {0}, elems, {});
  for (const auto& e : gb.elements()) r->ideal_basis_.push_back(e.component(0));
  r->ideal_leads_ = gb.leads_in(0);
  if (r->krull_dim() == 0) {
    int total = 0;
    for (const auto& g : r->ci_) total += g.lead_degree();
    auto hs = r->hilbert_series(total + 1);
    for (int d = 0; d < static_cast<int>(hs.size()); ++d)
      if (hs[static_cast<std::size_t>(d)] != 0) r->top_degree_ = d;
  }
  return r;
}

std::vector<int> QuotientRing::ci_degrees() const {
  std::vector<int> d;
  for (const auto& g : ci_) d.push_back(g.lead_degree());
  return d;
}

const Polynomial& QuotientRing::reduce_monomial(const Monomial& m) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = nf_cache_.find(m);
    if (it != nf_cache_.end()) return it->second;
  }
  // Reduce by the ideal basis: repeatedly eliminate the leading reducible term.
  Polynomial cur;
  cur.terms.push_back({m, 1});
  Polynomial done;
  const auto& f = field();
  while (!cur.is_zero()) {
    const Term lt = cur.lead();
    const Polynomial* div = nullptr;
    for (const auto& g : ideal_basis_)
      if (mono::divides(g.lead().mono, lt.mono)) {
        div = &g;
        break;
      }
    if (!div) {
      done.terms.push_back(lt);
      cur.terms.erase(cur.terms.begin());
      continue;
    }
    cur = ambient_.sub_mul(cur, lt.coeff, mono::quotient(lt.mono, div->lead().mono), *div);
  }
  (void)f;
  std::lock_guard lock(cache_mutex_);
  return nf_cache_.emplace(m, std::move(done)).first->second;
}

Polynomial QuotientRing::reduce(const Polynomial& p) const {
  Polynomial r;
  const auto& f = field();
  for (const auto& t : p.terms) {
    const Polynomial& nf = reduce_monomial(t.mono);
    r = ambient_.sub_mul(r, f.neg(t.coeff), Monomial{}, nf);
  }
  return r;
}

int QuotientRing::top_degree() const {
  if (!is_artinian()) throw InvalidInput("top degree requested for a ring of positive dimension");
  return top_degree_;
}

const std::vector<Monomial>& QuotientRing::standard_monomials(int degree) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = std_cache_.find(degree);
    if (it != std_cache_.end()) return it->second;
  }
  std::vector<Monomial> ms = ambient_.standard_monomials(degree, ideal_leads_);
  std::lock_guard lock(cache_mutex_);
  for (std::size_t i = 0; i < ms.size(); ++i) std_index_[ms[i]] = static_cast<long>(i);
  return std_cache_.emplace(degree, std::move(ms)).first->second;
}

long QuotientRing::standard_index(const Monomial& m) const {
  standard_monomials(m.degree);
  std::lock_guard lock(cache_mutex_);
  auto it = std_index_.find(m);
  return it == std_index_.end() ? -1 : it->second;
}

std::vector<long long> QuotientRing::hilbert_series(int truncation) const {
  if (truncation < 0) throw InvalidInput("negative truncation");
  return expand_hilbert_series(ambient_, hilbert_numerator(ambient_, ideal_leads_), truncation);
}

std::optional<std::vector<Polynomial>> QuotientRing::ideal_coordinates(const Polynomial& g) const {
  const std::size_t c = ci_.size();
  {
    std::lock_guard lock(cache_mutex_);
    if (!cofactor_basis_) {
      std::vector<int> twists{0};
      std::vector<FreeModuleElement> gens;
      for (std::size_t j = 0; j < c; ++j) {
        twists.push_back(ci_[j].lead_degree());
        FreeModuleElement e = elem::from_poly(ci_[j], 0);
        e.terms.push_back({Monomial{}, static_cast<std::uint32_t>(j + 1), 1});
        gens.push_back(std::move(e));
      }
      cofactor_basis_ = buchberger(ambient_, twists, gens, {});
    }
  }
  FreeModuleElement r = cofactor_basis_->reduce(elem::from_poly(g, 0));
  std::vector<Polynomial> out(c);
  for (const auto& t : r.terms) {
    if (t.comp == 0) return std::nullopt;
    out[t.comp - 1].terms.push_back({t.mono, field().neg(t.coeff)});
  }
  return out;
}

RingPtr QuotientRing::ambient_ring() const {
  if (ci_.empty()) return shared_from_this();
  std::lock_guard lock(cache_mutex_);
  if (!ambient_ring_) ambient_ring_ = QuotientRing::create(ambient_, {});
  return ambient_ring_;
}

std::string QuotientRing::render() const { return render_ring(*this); }

std::string QuotientRing::describe() const {
  std::string s = "F_" + std::to_string(field().characteristic()) + "[";
  for (int i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += ambient_.names()[static_cast<std::size_t>(i)];
  }
  s += "]";
  if (!ci_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < ci_.size(); ++i) {
      if (i) s += ", ";
      s += ambient_.format(ci_[i]);
    }
    s += ")";
  }
  return s;
}

bool QuotientRing::same_ring(const QuotientRing& o) const {
  return this == &o || (ambient_ == o.ambient_ && ci_ == o.ci_);
}

std::string render_ring(const QuotientRing& ring) {
  const auto& a = ring.ambient();
  std::string s = "p=" + std::to_string(ring.field().characteristic()) + "; vars ";
  for (int i = 0; i < a.nvars(); ++i) {
    if (i) s += ",";
    s += a.names()[static_cast<std::size_t>(i)];
    int w = a.weights()[static_cast<std::size_t>(i)];
    if (w != 1) s += ":" + std::to_string(w);
  }
  s += "; ci:";
  for (std::size_t i = 0; i < ring.ci_generators().size(); ++i) {
    s += i ? ", " : " ";
    s += a.format(ring.ci_generators()[i]);
  }
  return s;
}

RingPtr parse_ring(std::string_view text) {
  std::string t = trim(text);
  if (t.empty()) throw InvalidInput("empty ring description");
  if (t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("ring JSON: ") + e.what());
    }
    try {
      std::uint32_t p = j.value("char", PrimeField::kDefaultCharacteristic);
      auto names = j.at("vars").get<std::vector<std::string>>();
      std::vector<int> weights = j.value("weights", std::vector<int>{});
      PolyRing ambient(PrimeField(p), names, weights);
      std::vector<Polynomial> ci;
      for (const auto& s : j.value("ci", std::vector<std::string>{})) ci.push_back(ambient.parse(s));
      return QuotientRing::create(std::move(ambient), std::move(ci));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("ring JSON: ") + e.what());
    }
  }

  std::optional<std::uint32_t> prime;
  std::optional<std::vector<std::string>> names;
  std::vector<int> weights;
  std::vector<std::string> ci_text;
  bool saw_ci = false;
  for (const auto& part : split_top_level(t, ';')) {
    if (part.empty()) continue;
    if (part.rfind("p=", 0) == 0 || part.rfind("p =", 0) == 0) {
      std::string v = trim(part.substr(part.find('=') + 1));
      if (!text::all_digits(v) || v.size() > 10)
        throw InvalidInput("bad characteristic '" + v + "'");
      unsigned long long pv = std::stoull(v);
      if (pv >= (1ull << 31)) throw InvalidInput("characteristic " + v + " exceeds 2^31");
      prime = static_cast<std::uint32_t>(pv);
    } else if (part.rfind("vars", 0) == 0) {
      names.emplace();
      for (const auto& item : split_top_level(part.substr(4), ',')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) {
          names->push_back(item);
          weights.push_back(1);
        } else {
          names->push_back(trim(item.substr(0, colon)));
          std::string w = trim(item.substr(colon + 1));
          if (!text::all_digits(w) || w.size() > 6)
            throw InvalidInput("bad weight '" + w + "'");
          weights.push_back(std::stoi(w));
        }
      }
    } else if (part.rfind("ci", 0) == 0) {
      std::string rest = trim(part.substr(2));
      if (!rest.empty() && rest.front() == ':') rest = trim(rest.substr(1));
      saw_ci = true;
      if (!rest.empty())
        for (const auto& g : split_top_level(rest, ',')) ci_text.push_back(g);
    } else {
      throw InvalidInput("unrecognised ring clause '" + part + "'");
    }
  }
  if (!names || names->empty()) throw InvalidInput("ring description lists no variables");
  (void)saw_ci;
  PolyRing ambient(PrimeField(prime.value_or(PrimeField::kDefaultCharacteristic)), *names, weights);
  std::vector<Polynomial> ci;
  for (const auto& g : ci_text) {
    if (g.empty()) throw InvalidInput("empty relation in ci list");
    ci.push_back(ambient.parse(g));
  }
  return QuotientRing::create(std::move(ambient), std::move(ci));
}

}  // namespace cxlab

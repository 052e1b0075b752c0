#include "cxlab/ci.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "cxlab/error.hpp"
#include "pieces.hpp"
#include "random_util.hpp"

namespace cxlab {

namespace {

using Laurent = std::pair<int, std::vector<long long>>;

Laurent normalize(Laurent a) {
  auto& [low, c] = a;
  std::size_t lead = 0;
  while (lead < c.size() && c[lead] == 0) ++lead;
  if (lead == c.size()) return {0, {}};
  c.erase(c.begin(), c.begin() + static_cast<long>(lead));
  low += static_cast<int>(lead);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return a;
}

Laurent laurent_add(const Laurent& a, const Laurent& b) {
  const Laurent x = normalize(a), y = normalize(b);
  if (x.second.empty()) return y;
  if (y.second.empty()) return x;
  const int low = std::min(x.first, y.first);
  const int high = std::max(x.first + static_cast<int>(x.second.size()), y.first + static_cast<int>(y.second.size()));
  std::vector<long long> c(static_cast<std::size_t>(high - low), 0);
  for (std::size_t i = 0; i < x.second.size(); ++i) c[static_cast<std::size_t>(x.first - low) + i] += x.second[i];
  for (std::size_t i = 0; i < y.second.size(); ++i) c[static_cast<std::size_t>(y.first - low) + i] += y.second[i];
  return normalize({low, c});
}

std::vector<int> plus(std::vector<int> v, int s) {
  for (auto& x : v) x += s;
  return v;
}

Matrix zero_block(const FreeResolution& res, int n, int shift, int degree) {
  Matrix m{plus(res.twists[static_cast<std::size_t>(n - shift)], degree), res.twists[static_cast<std::size_t>(n)], {}};
  m.columns.resize(m.cols());
  return m;
}

/// Distinct operator degrees with the operators of each, ascending.
std::vector<std::vector<std::size_t>> degree_groups(const QuotientRing& ring) {
  const auto deg = ring.ci_degrees();
  std::map<int, std::vector<std::size_t>> by;
  for (std::size_t j = 0; j < deg.size(); ++j) by[deg[j]].push_back(j);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [d, g] : by) out.push_back(std::move(g));
  return out;
}

std::vector<Coeff> random_coefficients(const QuotientRing& ring, const std::vector<std::size_t>& group,
                                       std::mt19937_64& rng) {
  std::vector<Coeff> c(static_cast<std::size_t>(ring.codim()), 0);
  const std::uint64_t p = ring.field().characteristic();
  for (auto j : group) c[j] = static_cast<Coeff>(1 + rnd::below(rng, p - 1));
  return c;
}

std::string format_vector(const std::vector<Coeff>& c) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < c.size(); ++i) s << (i ? "," : "") << c[i];
  s << ')';
  return s.str();
}

}  // namespace

bool ChainMap::is_zero() const {
  for (const auto& [n, b] : blocks)
    for (const auto& c : b.columns)
      if (!c.is_zero()) return false;
  return true;
}

EisenbudOperators eisenbud_operators(const ResolutionPtr& res) {
  if (!res) throw InvalidInput("eisenbud_operators: null resolution");
  const RingPtr& ring = res->module.ring();
  EisenbudOperators out;
  const int c = ring->codim();
  if (c == 0) {
    out.decomposition_certified = true;
    return out;
  }
  const auto degrees = ring->ci_degrees();
  const auto& amb = ring->ambient();
  const auto& f = ring->field();
  const RingPtr p = ring->ambient_ring();
  for (int j = 0; j < c; ++j) {
    ChainMap t;
    t.resolution = res;
    t.shift = 2;
    t.degree = degrees[static_cast<std::size_t>(j)];
    out.operators.push_back(std::move(t));
  }
  for (int n = 2; n <= res->top(); ++n) {
    // A lift of d to the ambient ring is the matrix of reduced representatives itself.
    const Matrix sq = compose(*p, res->d(n - 1), res->d(n));
    std::vector<Matrix> lifted;
    for (int j = 0; j < c; ++j) lifted.push_back(zero_block(*res, n, 2, degrees[static_cast<std::size_t>(j)]));
    for (std::size_t col = 0; col < sq.cols(); ++col) {
      for (std::uint32_t r = 0; r < sq.rows(); ++r) {
        const Polynomial g = sq.entry(r, col);
        if (g.is_zero()) continue;
        auto h = ring->ideal_coordinates(g);
        if (!h)
          throw InternalError("entry of d~ o d~ at F_" + std::to_string(n) + " is not in the defining ideal");
        for (int j = 0; j < c; ++j) {
          auto& dst = lifted[static_cast<std::size_t>(j)].columns[col];
          dst = elem::add(f, dst, elem::from_poly((*h)[static_cast<std::size_t>(j)], r));
        }
      }
      FreeModuleElement back;
      for (int j = 0; j < c; ++j)
        back = elem::add(f, back,
                         elem::mul_poly(amb, ring->ci_generators()[static_cast<std::size_t>(j)],
                                        lifted[static_cast<std::size_t>(j)].columns[col]));
      if (!(back == sq.columns[col]))
        throw InternalError("re-expansion of d~ o d~ failed at F_" + std::to_string(n));
    }
    for (int j = 0; j < c; ++j) {
      auto& b = lifted[static_cast<std::size_t>(j)];
      for (auto& col : b.columns) col = reduce_mod_ideal(*ring, col);
      out.operators[static_cast<std::size_t>(j)].blocks.emplace(n, std::move(b));
    }
  }
  out.decomposition_certified = true;
  for (auto& t : out.operators) {
    t.failure = check_chain_map(t);
    t.certified = t.failure.empty();
    if (!t.certified) throw InternalError("Eisenbud operator is not a chain map: " + t.failure);
  }
  return out;
}

std::string check_chain_map(const ChainMap& map) {
  if (!map.resolution) return "no resolution";
  const FreeResolution& res = *map.resolution;
  const QuotientRing& ring = *res.module.ring();
  for (const auto& [n, b] : map.blocks) {
    try {
      validate_matrix(ring, b);
    } catch (const InvalidInput& e) {
      return "block at F_" + std::to_string(n) + ": " + e.what();
    }
    if (n - map.shift < 1) continue;
    auto prev = map.blocks.find(n - 1);
    if (prev == map.blocks.end()) continue;
    const Matrix lhs = compose(ring, res.d(n - map.shift), b);
    const Matrix rhs = compose(ring, prev->second, res.d(n));
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (!(lhs.columns[c] == rhs.columns[c]))
        return "d o T != T o d at F_" + std::to_string(n) + ", column " + std::to_string(c);
  }
  return {};
}

ChainMap eta(const EisenbudOperators& ops, const std::vector<Coeff>& coefficients) {
  if (ops.operators.empty()) throw InvalidInput("a ring of codimension 0 has no cohomology operators");
  if (coefficients.size() != ops.operators.size())
    throw InvalidInput("eta needs " + std::to_string(ops.operators.size()) + " coefficients, got " +
                       std::to_string(coefficients.size()));
  const ResolutionPtr& res = ops.operators.front().resolution;
  const auto& f = res->module.ring()->field();
  std::optional<int> degree;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (coefficients[j] % f.characteristic() == 0) continue;
    if (degree && *degree != ops.operators[j].degree)
      throw InvalidInput("eta mixes operators of degrees " + std::to_string(*degree) + " and " +
                         std::to_string(ops.operators[j].degree) + "; it would not be homogeneous");
    degree = ops.operators[j].degree;
  }
  ChainMap out;
  out.resolution = res;
  out.shift = 2;
  out.degree = degree.value_or(ops.operators.front().degree);
  for (const auto& [n, b0] : ops.operators.front().blocks) {
    Matrix b = zero_block(*res, n, 2, out.degree);
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      const Coeff cj = coefficients[j] % f.characteristic();
      if (cj == 0) continue;
      const Matrix& tj = ops.operators[j].blocks.at(n);
      for (std::size_t c = 0; c < b.cols(); ++c)
        b.columns[c] = elem::add(f, b.columns[c], elem::scale(f, tj.columns[c], cj));
    }
    out.blocks.emplace(n, std::move(b));
  }
  out.failure = check_chain_map(out);
  out.certified = out.failure.empty();
  return out;
}

ChainMap eta_power(const ChainMap& eta, int t) {
  if (t < 1) throw InvalidInput("eta power must be positive");
  if (t == 1) return eta;
  const FreeResolution& res = *eta.resolution;
  const QuotientRing& ring = *res.module.ring();
  ChainMap out;
  out.resolution = eta.resolution;
  out.shift = eta.shift * t;
  out.degree = eta.degree * t;
  for (const auto& [n, b] : eta.blocks) {
    if (n < out.shift) continue;
    Matrix acc = b;
    bool ok = true;
    for (int s = 1; s < t && ok; ++s) {
      auto next = eta.blocks.find(n - s * eta.shift);
      if (next == eta.blocks.end()) {
        ok = false;
        break;
      }
      acc = compose(ring, next->second, acc);
    }
    if (!ok) continue;
    acc.target_twists = plus(res.twists[static_cast<std::size_t>(n - out.shift)], out.degree);
    out.blocks.emplace(n, std::move(acc));
  }
  if (out.blocks.empty())
    throw InvalidInput("resolution to F_" + std::to_string(res.top()) + " is too short for eta^" + std::to_string(t));
  out.failure = check_chain_map(out);
  out.certified = out.failure.empty();
  return out;
}

PushoutModule k_eta(const ChainMap& power) {
  if (power.shift <= 0 || power.shift % 2 != 0) throw InvalidInput("K_eta needs a chain map of even positive shift");
  if (!power.resolution) throw InvalidInput("K_eta: chain map without a resolution");
  const FreeResolution& res = *power.resolution;
  const int h = power.shift;
  auto blk = power.blocks.find(h);
  if (res.top() < h || blk == power.blocks.end())
    throw InvalidInput("K_eta needs the resolution and the chain map at F_" + std::to_string(h));
  const RingPtr& ring = res.module.ring();
  const auto& f = ring->field();

  PushoutModule out;
  out.source = res.module;
  out.element = power;
  out.q = h - 1;
  out.delta = power.degree;
  const auto& tq = res.twists[static_cast<std::size_t>(out.q)];
  const auto& t0 = res.twists[0];

  // Generators of F_q, then F_0(-delta), stably sorted by twist.
  std::vector<std::pair<int, long>> gens;
  for (std::size_t i = 0; i < tq.size(); ++i) gens.emplace_back(tq[i], static_cast<long>(i));
  for (std::size_t j = 0; j < t0.size(); ++j) gens.emplace_back(t0[j] + out.delta, -1 - static_cast<long>(j));
  std::stable_sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> twists;
  std::vector<long> pos_q(tq.size()), pos_0(t0.size());
  out.iota.resize(t0.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    twists.push_back(gens[k].first);
    const long tag = gens[k].second;
    if (tag >= 0) {
      pos_q[static_cast<std::size_t>(tag)] = static_cast<long>(k);
      out.pi.push_back(tag);
    } else {
      pos_0[static_cast<std::size_t>(-1 - tag)] = static_cast<long>(k);
      out.iota[static_cast<std::size_t>(-1 - tag)] = static_cast<std::uint32_t>(k);
      out.pi.push_back(-1);
    }
  }
  std::vector<FreeModuleElement> rels;
  const Matrix& dh = res.d(h);
  for (std::size_t c = 0; c < dh.cols(); ++c) {
    auto top = elem::remap(dh.columns[c], pos_q);
    auto bottom = elem::remap(blk->second.columns[c], pos_0);
    rels.push_back(elem::add(f, top, elem::scale(f, bottom, f.neg(1))));
  }
  for (const auto& col : res.d(1).columns) rels.push_back(elem::remap(col, pos_0));

  const std::string name = "K(" + (res.module.name().empty() ? std::string("M") : res.module.name()) + ")";
  out.k_raw = GradedModule::create(ring, twists, rels, name, false);
  out.k = GradedModule::create(ring, twists, rels, name);
  out.shifted_source = GradedModule::create(ring, plus(t0, out.delta), res.d(1).columns, {}, false);
  out.omega = GradedModule::create(ring, tq, dh.columns, {}, false);

  out.hs_k = normalize(out.k_raw.hilbert_numerator());
  out.hs_source = normalize(out.shifted_source.hilbert_numerator());
  out.hs_omega = normalize(out.omega.hilbert_numerator());
  out.hilbert_additive = laurent_add(out.hs_source, out.hs_omega) == out.hs_k &&
                         normalize(out.k.hilbert_numerator()) == out.hs_k;

  // Piece-by-piece check of the three maps.
  pieces::Columns iota_cols(t0.size()), pi_cols(twists.size());
  Polynomial one;
  one.terms.push_back({Monomial{}, 1});
  for (std::size_t j = 0; j < t0.size(); ++j) iota_cols[j].emplace_back(out.iota[j], one);
  for (std::size_t k = 0; k < twists.size(); ++k)
    if (out.pi[k] >= 0) pi_cols[k].emplace_back(static_cast<std::uint32_t>(out.pi[k]), one);

  const auto fk = out.k_raw.finite_length(), fs = out.shifted_source.finite_length(), fo = out.omega.finite_length();
  const int lo = std::min({out.k_raw.min_twist(), out.shifted_source.min_twist(), out.omega.min_twist()});
  int hi;
  out.window_exhaustive = fk.finite && fs.finite && fo.finite;
  if (out.window_exhaustive) {
    hi = std::max({fk.top_degree.value_or(lo), fs.top_degree.value_or(lo), fo.top_degree.value_or(lo)});
  } else {
    hi = out.k_raw.max_twist();
    for (int s : out.k_raw.relations().source_twists) hi = std::max(hi, s);
    hi += 4;
  }
  out.checked_window = {lo, hi};
  out.composite_zero = out.injective = out.exact_middle = out.surjective = true;
  for (int d = lo; d <= hi; ++d) {
    const auto& kb = out.k_raw.piece(d);
    const auto iv = pieces::map_piece(out.shifted_source, out.k_raw, iota_cols, d);
    const auto pv = pieces::map_piece(out.k_raw, out.omega, pi_cols, d);
    const std::size_t dim_o = out.omega.piece(d).size();
    const std::size_t ri = rank_of_columns(f, kb.size(), iv);
    const std::size_t rp = rank_of_columns(f, dim_o, pv);
    if (ri != out.shifted_source.piece(d).size()) out.injective = false;
    if (rp != dim_o) out.surjective = false;
    if (ri + rp != kb.size()) out.exact_middle = false;
    Accumulator acc(f);
    for (const auto& v : iv) {
      acc.reset(dim_o);
      for (const auto& [i, c] : v)
        for (const auto& [r, x] : pv[i]) acc.add(r, f.mul(c, x));
      if (!acc.take().empty()) out.composite_zero = false;
    }
  }
  return out;
}

namespace {

/// s_{-1} = 0 and the terms s_0, s_1, ... form an exact sequence: every term is
/// bounded by its neighbours, and between two zeros the alternating sum vanishes.
std::string exact_sequence_failure(const std::vector<long long>& s) {
  long long alt = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const long long prev = j == 0 ? 0 : s[j - 1];
    if (j + 1 < s.size() && s[j] > prev + s[j + 1]) return "term " + std::to_string(j) + " exceeds its neighbours";
    if (s[j] == 0) {
      if (alt != 0) return "alternating sum before term " + std::to_string(j) + " is " + std::to_string(alt);
      alt = 0;
    } else {
      alt += (j % 2 ? -1 : 1) * s[j];
    }
  }
  return {};
}

LesCheck les_check(HomologyKind kind, const FreeResolution& omega, const FreeResolution& k,
                   const FreeResolution& shifted, const GradedModule& n, int length) {
  LesCheck out;
  out.length = length;
  HomologyOptions opts;
  opts.certify = false;
  int cap;
  if (kind == HomologyKind::Ext) {
    cap = n.max_twist() + 4;
  } else {
    int top = 0;
    for (const FreeResolution* r : {&omega, &k, &shifted})
      for (int i = 0; i <= std::min(length, r->top()); ++i)
        for (int t : r->twists[static_cast<std::size_t>(i)]) top = std::max(top, t);
    cap = top + n.max_twist() + 4;
  }
  opts.degree_cap = cap;
  auto run = [&](const FreeResolution& r) {
    return kind == HomologyKind::Ext ? ext(r, n, 0, length, opts) : tor(r, n, 0, length, opts);
  };
  const HomologyReport ro = run(omega), rk = run(k), rs = run(shifted);
  int lo = cap;
  for (const HomologyReport* r : {&ro, &rk, &rs})
    for (const auto& [i, w] : r->window)
      if (w.first <= w.second) lo = std::min(lo, w.first);
  out.degree_lo = lo;
  out.degree_hi = cap;
  for (int d = lo; d <= cap; ++d) {
    std::vector<long long> s;
    for (int i = 0; i <= length; ++i) {
      s.push_back(ro.dim(i, d));
      s.push_back(rk.dim(i, d));
      s.push_back(rs.dim(i, d));
    }
    const std::string why = exact_sequence_failure(s);
    if (!why.empty()) {
      out.consistent = false;
      out.failure = "degree " + std::to_string(d) + ": " + why;
      return out;
    }
  }
  return out;
}

}  // namespace

FreeResolution shifted_resolution(const FreeResolution& res, int s) {
  FreeResolution out = res;
  out.module = res.module.twisted(-s);
  for (auto& t : out.twists) t = plus(t, s);
  for (auto& d : out.differentials) {
    d.target_twists = plus(d.target_twists, s);
    d.source_twists = plus(d.source_twists, s);
  }
  return out;
}

ReductionVerdict verify_reduction(const PushoutModule& p, const GradedModule& n, const ReductionOptions& opts) {
  ReductionVerdict v;
  v.n_name = n.name();
  const FreeResolution& res_m = *p.element.resolution;
  v.cx_source = complexity_estimate(res_m);
  const FreeResolution res_k = minimal_resolution(p.k, std::max(opts.bound, opts.les_length + 1));
  v.cx_k = complexity_estimate(res_k);
  v.betti_source = betti_table(res_m).totals;
  v.betti_k = betti_table(res_k).totals;
  v.complexity_drops = v.cx_k.value == v.cx_source.value - 1;
  v.depth_source = p.source.is_zero() ? -1 : depth(p.source);
  v.depth_k = p.k.is_zero() ? -1 : depth(p.k);
  v.depth_preserved = v.depth_source >= 0 && v.depth_source == v.depth_k;
  v.sequence_exact = p.exact();

  const int len = opts.les_length;
  const FreeResolution res_o = minimal_resolution(p.omega, len + 1);
  const FreeResolution res_s = minimal_resolution(p.shifted_source, len + 1);
  v.ext_les = les_check(HomologyKind::Ext, res_o, res_k, res_s, n, len);
  v.tor_les = les_check(HomologyKind::Tor, res_o, res_k, res_s, n, len);
  return v;
}

std::vector<ReductionStep> reduction_chain(const GradedModule& m, int max_retries, std::uint64_t seed,
                                           const ReductionOptions& opts) {
  if (max_retries < 1) throw InvalidInput("reduction_chain needs at least one attempt per step");
  const RingPtr& ring = m.ring();
  const GradedModule k = GradedModule::residue_field(ring);
  const auto groups = degree_groups(*ring);
  std::mt19937_64 rng(seed);
  std::vector<ReductionStep> chain;
  GradedModule cur = m;
  for (int level = 0;; ++level) {
    auto res = std::make_shared<const FreeResolution>(minimal_resolution(cur, opts.bound));
    if (complexity_estimate(*res).value == 0) break;
    if (level > ring->codim()) throw InternalError("reduction chain longer than the codimension");
    const EisenbudOperators ops = eisenbud_operators(res);
    ReductionStep step;
    bool accepted = false;
    for (int attempt = 0; attempt < max_retries && !accepted; ++attempt) {
      const auto& group = groups[static_cast<std::size_t>(attempt) % groups.size()];
      auto coeffs = random_coefficients(*ring, group, rng);
      PushoutModule p = k_eta(eta(ops, coeffs));
      ReductionVerdict v = verify_reduction(p, k, opts);
      if (v.passed()) {
        step.pushout = std::move(p);
        step.verdict = std::move(v);
        step.coefficients = std::move(coeffs);
        accepted = true;
      } else {
        step.rejected.push_back(std::move(coeffs));
      }
    }
    if (!accepted) {
      std::string msg = "no eta reduced the complexity of step " + std::to_string(level) + " after " +
                        std::to_string(max_retries) + " attempts; tried";
      for (const auto& c : step.rejected) msg += " " + format_vector(c);
      throw RetriesExhausted(msg);
    }
    cur = step.pushout.k;
    chain.push_back(std::move(step));
  }
  return chain;
}

PeriodicityVerdict periodicity_isomorphism_check(const ResolutionPtr& res, int window_start, std::uint64_t seed) {
  PeriodicityVerdict v;
  v.cx = complexity_estimate(*res);
  v.window_start = window_start;
  v.window_end = res->top() - 2;
  if (v.cx.value != 1) {
    v.passed = true;
    v.failure = "complexity estimate is " + std::to_string(v.cx.value) + ", not 1";
    return v;
  }
  v.applicable = true;
  if (window_start < 0 || v.window_end < window_start) {
    v.failure = "window [" + std::to_string(window_start) + ", " + std::to_string(v.window_end) + "] is empty";
    return v;
  }
  const QuotientRing& ring = *res->module.ring();
  const auto& f = ring.field();
  const EisenbudOperators ops = eisenbud_operators(res);
  // A stream distinct from reduction_chain's, so a K_eta is not probed with its own eta.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::vector<std::size_t>> draws;
  for (const auto& group : degree_groups(ring))
    for (int k = 0; k < 3; ++k) draws.push_back(group);
  for (const auto& group : draws) {
    const ChainMap e = eta(ops, random_coefficients(ring, group, rng));
    std::string why;
    for (int n = window_start; n <= v.window_end && why.empty(); ++n) {
      const auto& lower = res->twists[static_cast<std::size_t>(n)];
      const auto& upper = res->twists[static_cast<std::size_t>(n + 2)];
      if (upper != plus(lower, e.degree)) {
        why = "F_" + std::to_string(n + 2) + " is not F_" + std::to_string(n) + " shifted by " + std::to_string(e.degree);
        break;
      }
      const Matrix& b = e.blocks.at(n + 2);
      std::vector<std::vector<Coeff>> dense(b.rows(), std::vector<Coeff>(b.cols(), 0));
      for (std::size_t c = 0; c < b.cols(); ++c)
        for (const auto& t : b.columns[c].terms)
          if (t.mono.degree == 0) dense[t.comp][c] = t.coeff;
      if (determinant(f, dense) == 0) why = "eta block at F_" + std::to_string(n + 2) + " is singular";
    }
    if (why.empty()) {
      v.passed = true;
      v.failure.clear();
      return v;
    }
    v.failure = why;
  }
  return v;
}

}  // namespace cxlab

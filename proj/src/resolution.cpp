#include "cxlab/resolution.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cxlab/error.hpp"
#include "pieces.hpp"

namespace cxlab {

namespace {

const Matrix kEmptyMatrix{};

using DegreeSpaces = std::map<int, std::vector<SparseVec>>;

/// Span of x_v * K_{d - w_v} inside piece d, the part reached from lower degrees.
void insert_lower_multiples(const GradedModule& f, int d, const DegreeSpaces& spaces, Echelon& e) {
  const auto& weights = f.ring()->ambient().weights();
  for (int v = 0; v < static_cast<int>(weights.size()); ++v) {
    auto it = spaces.find(d - weights[static_cast<std::size_t>(v)]);
    if (it == spaces.end()) continue;
    for (const auto& b : it->second) e.insert(pieces::multiply_by_variable(f, it->first, b, v));
  }
}

/// Minimal generators of ker(map) in degrees lo..hi, by linear algebra per piece.
std::vector<FreeModuleElement> kernel_generators(const GradedModule& src, const GradedModule& tgt, const Matrix& map,
                                                 int lo, int hi) {
  const auto cols = pieces::split_columns(map);
  const auto& f = src.ring()->field();
  DegreeSpaces spaces;
  std::vector<FreeModuleElement> gens;
  for (int d = lo; d <= hi; ++d) {
    const auto& basis = src.piece(d);
    if (basis.empty()) continue;
    auto images = pieces::map_piece(src, tgt, cols, d);
    auto kernel = kernel_of_columns(f, tgt.piece(d).size(), images);
    if (kernel.empty()) continue;
    Echelon e(f, basis.size());
    insert_lower_multiples(src, d, spaces, e);
    for (const auto& k : kernel)
      if (e.insert(k)) gens.push_back(elem::monic(f, src.element_of(d, k)));
    spaces[d] = std::move(kernel);
  }
  return gens;
}

Matrix make_matrix(std::vector<int> target, const std::vector<FreeModuleElement>& cols) {
  Matrix m;
  m.source_twists.reserve(cols.size());
  for (const auto& c : cols) m.source_twists.push_back(*elem::degree(c, target));
  m.target_twists = std::move(target);
  m.columns = cols;
  return m;
}

int max_or(const std::vector<int>& v, int fallback) { return v.empty() ? fallback : *std::max_element(v.begin(), v.end()); }

}  // namespace

std::size_t FreeResolution::rank(int n) const {
  if (n < 0 || n > top()) return 0;
  return twists[static_cast<std::size_t>(n)].size();
}

const Matrix& FreeResolution::d(int n) const {
  if (n <= 0 || n >= static_cast<int>(differentials.size())) return kEmptyMatrix;
  return differentials[static_cast<std::size_t>(n)];
}

int FreeResolution::length() const {
  if (!complete) throw InvalidInput("projective dimension requested from an incomplete resolution");
  int l = 0;
  for (int n = 0; n <= top(); ++n)
    if (rank(n) > 0) l = n;
  return l;
}

std::vector<FreeModuleElement> minimal_generators(const RingPtr& ring, const std::vector<int>& twists,
                                                  std::vector<FreeModuleElement> candidates) {
  GradedModule f = GradedModule::free(ring, twists);
  // free() sorts twists; callers pass sorted twists so components agree.
  if (f.twists() != twists) throw InternalError("minimal_generators expects ascending twists");
  std::map<int, std::vector<FreeModuleElement>> by_degree;
  for (auto& c : candidates) {
    c = reduce_mod_ideal(*ring, c);
    if (c.is_zero()) continue;
    auto d = elem::degree(c, twists);
    if (!d) throw InvalidInput("inhomogeneous candidate generator");
    by_degree[*d].push_back(std::move(c));
  }
  if (by_degree.empty()) return {};
  const auto& fld = ring->field();
  DegreeSpaces spaces;
  std::vector<FreeModuleElement> out;
  const int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
  for (int d = lo; d <= hi; ++d) {
    const auto& basis = f.piece(d);
    if (basis.empty()) continue;
    Echelon e(fld, basis.size());
    insert_lower_multiples(f, d, spaces, e);
    if (auto it = by_degree.find(d); it != by_degree.end())
      for (const auto& c : it->second)
        if (e.insert(f.coordinates(c))) out.push_back(elem::monic(fld, c));
    spaces[d] = e.rows();
  }
  return out;
}

FreeResolution ambient_resolution(const GradedModule& m) {
  RingPtr p = m.ring()->ambient_ring();
  FreeResolution res;
  res.module = m;
  res.twists.push_back(m.twists());
  res.differentials.emplace_back();
  if (m.is_zero()) {
    res.complete = true;
    return res;
  }
  std::vector<FreeModuleElement> cands = m.relations().columns;
  for (const auto& f : m.ring()->ci_generators())
    for (std::uint32_t i = 0; i < m.num_generators(); ++i) cands.push_back(elem::from_poly(f, i));
  std::vector<FreeModuleElement> gens = minimal_generators(p, m.twists(), cands);
  const int limit = m.ring()->nvars() + 1;
  for (int n = 1; !gens.empty(); ++n) {
    if (n > limit) throw InternalError("ambient resolution longer than the number of variables");
    Matrix d = make_matrix(res.twists.back(), gens);
    res.twists.push_back(d.source_twists);
    res.differentials.push_back(d);
    gens = minimal_generators(p, d.source_twists, kernel_of_map(p, d));
  }
  res.complete = true;
  res.length_bound = res.top();
  return res;
}

FreeResolution minimal_resolution(const GradedModule& m, int bound) {
  if (bound < 0) throw InvalidInput("resolution bound must be non-negative");
  const QuotientRing& ring = *m.ring();
  if (ring.codim() == 0) {
    FreeResolution g = ambient_resolution(m);
    g.module = m;
    if (g.top() > bound) {
      g.twists.resize(static_cast<std::size_t>(bound) + 1);
      g.differentials.resize(static_cast<std::size_t>(bound) + 1);
      g.complete = false;
    }
    g.length_bound = bound;
    return g;
  }

  FreeResolution res;
  res.module = m;
  res.length_bound = bound;
  res.twists.push_back(m.twists());
  res.differentials.emplace_back();
  if (m.is_zero()) {
    res.complete = true;
    return res;
  }

  // Twists of the minimal resolution are among those of the Eisenbud-Shamash
  // resolution built from the ambient one, which bounds generator degrees.
  const FreeResolution g = ambient_resolution(m);
  int emax = 0;
  for (int e : ring.ci_degrees()) emax = std::max(emax, e);
  auto shamash_bound = [&](int n) {
    int best = std::numeric_limits<int>::min();
    for (int j = 0; 2 * j <= n; ++j) {
      const int k = n - 2 * j;
      if (k > g.top() || g.rank(k) == 0) continue;
      best = std::max(best, max_or(g.twists[static_cast<std::size_t>(k)], 0) + j * emax);
    }
    return best;
  };

  if (bound == 0) return res;
  std::vector<FreeModuleElement> gens = minimal_generators(m.ring(), m.twists(), m.relations().columns);
  for (int n = 1; n <= bound; ++n) {
    if (gens.empty()) {
      res.complete = true;
      break;
    }
    Matrix d = make_matrix(res.twists.back(), gens);
    res.twists.push_back(d.source_twists);
    res.differentials.push_back(d);
    if (n == bound) break;
    const int hi_bound = shamash_bound(n + 1);
    if (hi_bound == std::numeric_limits<int>::min()) {
      gens.clear();
      continue;
    }
    int hi = hi_bound;
    if (ring.is_artinian()) hi = std::min(hi, max_or(d.source_twists, 0) + ring.top_degree());
    GradedModule src = GradedModule::free(m.ring(), d.source_twists);
    GradedModule tgt = GradedModule::free(m.ring(), d.target_twists);
    gens = kernel_generators(src, tgt, d, d.source_twists.front() + 1, hi);
  }
  if (!res.complete && res.top() < bound && gens.empty()) res.complete = true;
  return res;
}

long long BettiTable::at(int n, int d) const {
  auto it = entries.find({n, d});
  return it == entries.end() ? 0 : it->second;
}

BettiTable betti_table(const FreeResolution& res) {
  BettiTable bt;
  for (int n = 0; n <= res.top(); ++n) {
    const auto& tw = res.twists[static_cast<std::size_t>(n)];
    bt.totals.push_back(static_cast<long long>(tw.size()));
    for (int d : tw) ++bt.entries[{n, d}];
  }
  return bt;
}

std::string BettiTable::render() const {
  if (totals.empty() || entries.empty()) return "(zero module)\n";
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& [key, c] : entries) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  const int cols = static_cast<int>(totals.size());
  std::vector<std::string> heads;
  std::size_t w = 1;
  for (int n = 0; n < cols; ++n) w = std::max(w, std::to_string(totals[static_cast<std::size_t>(n)]).size());
  for (int n = 0; n < cols; ++n) w = std::max(w, std::to_string(n).size());
  auto pad = [&](const std::string& s) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  std::size_t lw = std::max<std::size_t>(6, std::to_string(lo).size() + 1);
  lw = std::max(lw, std::to_string(hi).size() + 1);
  auto lpad = [&](const std::string& s) { return std::string(lw - std::min(lw, s.size()), ' ') + s; };
  std::ostringstream os;
  os << lpad("") << " ";
  for (int n = 0; n < cols; ++n) os << (n ? " " : "") << pad(std::to_string(n));
  os << "\n" << lpad("total:") << " ";
  for (int n = 0; n < cols; ++n) os << (n ? " " : "") << pad(std::to_string(totals[static_cast<std::size_t>(n)]));
  os << "\n";
  for (int r = lo; r <= hi; ++r) {
    os << lpad(std::to_string(r) + ":") << " ";
    for (int n = 0; n < cols; ++n) {
      long long c = at(n, n + r);
      os << (n ? " " : "") << pad(c ? std::to_string(c) : ".");
    }
    os << "\n";
  }
  return os.str();
}

GradedModule syzygy(const FreeResolution& res, int n) {
  if (n < 0) throw InvalidInput("syzygy index must be non-negative");
  if (n == 0) return res.module;
  if (n + 1 > res.top() && !res.complete)
    throw InvalidInput("resolution bound " + std::to_string(res.top()) + " too small for syzygy " + std::to_string(n));
  if (n > res.top()) return GradedModule::free(res.module.ring(), {});
  if (n == res.top()) return GradedModule::free(res.module.ring(), res.twists[static_cast<std::size_t>(n)]);
  return GradedModule::create(res.module.ring(), res.twists[static_cast<std::size_t>(n)], res.d(n + 1).columns);
}

GradedModule syzygy(const GradedModule& m, int n) { return syzygy(minimal_resolution(m, n + 1), n); }

int pd_ambient(const GradedModule& m) {
  if (m.is_zero()) throw InvalidInput("projective dimension of the zero module");
  return ambient_resolution(m).length();
}

int depth(const GradedModule& m) {
  if (m.is_zero()) throw InvalidInput("depth of the zero module");
  return m.ring()->nvars() - pd_ambient(m);
}

int ring_depth(const QuotientRing& ring) { return ring.krull_dim(); }

std::string check_d_squared(const FreeResolution& res) {
  const QuotientRing& ring = *res.module.ring();
  for (int n = 1; n + 1 <= res.top(); ++n) {
    Matrix c = compose(ring, res.d(n), res.d(n + 1));
    for (const auto& col : c.columns)
      if (!col.is_zero()) return "d_" + std::to_string(n) + " * d_" + std::to_string(n + 1) + " is nonzero";
  }
  return {};
}

std::string check_minimality(const FreeResolution& res) {
  for (int n = 1; n <= res.top(); ++n)
    for (const auto& col : res.d(n).columns)
      for (const auto& t : col.terms)
        if (t.mono.is_one()) return "d_" + std::to_string(n) + " has a unit entry";
  return {};
}

std::string check_hilbert_euler(const FreeResolution& ambient, int truncation) {
  const GradedModule& m = ambient.module;
  if (m.is_zero()) return {};
  RingPtr p = m.ring()->ambient_ring();
  const int lo = m.min_twist();
  auto hm = m.hilbert_function(lo, truncation);
  auto hp = p->hilbert_series(std::max(0, truncation - lo));
  for (int d = lo; d <= truncation; ++d) {
    long long sum = 0;
    for (int n = 0; n <= ambient.top(); ++n)
      for (int a : ambient.twists[static_cast<std::size_t>(n)])
        if (d - a >= 0) sum += (n % 2 ? -1 : 1) * hp[static_cast<std::size_t>(d - a)];
    if (sum != hm[static_cast<std::size_t>(d - lo)])
      return "Euler characteristic differs from the Hilbert function in degree " + std::to_string(d);
  }
  return {};
}

std::string check_exactness(const FreeResolution& res, int max_degree) {
  const auto& ring = res.module.ring();
  const auto& f = ring->field();
  if (res.top() < 0) return {};
  std::vector<GradedModule> frees;
  for (int n = 0; n <= res.top(); ++n) frees.push_back(GradedModule::free(ring, res.twists[static_cast<std::size_t>(n)]));
  std::vector<pieces::Columns> cols(static_cast<std::size_t>(res.top()) + 1);
  for (int n = 1; n <= res.top(); ++n) cols[static_cast<std::size_t>(n)] = pieces::split_columns(res.d(n));
  auto rank_at = [&](int n, int d) -> std::size_t {
    if (n < 1 || n > res.top()) return 0;
    auto imgs = pieces::map_piece(frees[static_cast<std::size_t>(n)], frees[static_cast<std::size_t>(n - 1)],
                                  cols[static_cast<std::size_t>(n)], d);
    return rank_of_columns(f, frees[static_cast<std::size_t>(n - 1)].piece(d).size(), imgs);
  };
  const int lo = res.module.min_twist();
  auto hm = res.module.hilbert_function(lo, max_degree);
  for (int d = lo; d <= max_degree; ++d) {
    const long long coker = static_cast<long long>(frees[0].piece(d).size()) - static_cast<long long>(rank_at(1, d));
    if (coker != hm[static_cast<std::size_t>(d - lo)]) return "coker d_1 differs from M in degree " + std::to_string(d);
  }
  // The last computed differential's kernel is only known if the resolution is complete.
  const int last = res.complete ? res.top() : res.top() - 1;
  for (int n = 1; n <= last; ++n)
    for (int d = lo; d <= max_degree; ++d) {
      const long long dim = static_cast<long long>(frees[static_cast<std::size_t>(n)].piece(d).size());
      const long long ker = dim - static_cast<long long>(rank_at(n, d));
      if (ker != static_cast<long long>(rank_at(n + 1, d)))
        return "homology at F_" + std::to_string(n) + " in degree " + std::to_string(d);
    }
  return {};
}

}  // namespace cxlab

#include "cxlab/homology.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cxlab/error.hpp"
#include "pieces.hpp"

namespace cxlab {

namespace {

/// Target block and entry for each source block of a block-structured map.
using BlockLists = std::vector<std::vector<std::pair<std::uint32_t, Polynomial>>>;

std::string label(const GradedModule& m) { return m.name().empty() ? m.render() : m.name(); }

/// The complex F (x) N (Tor) or Hom(F, N) (Ext); each term is a sum of
/// copies of N with shifted grading.
class BlockComplex {
 public:
  BlockComplex(HomologyKind kind, const FreeResolution& res, const GradedModule& n)
      : kind_(kind), res_(res), n_(n) {}

  bool available(int i) const { return i >= 0 && (i + 1 <= res_.top() || res_.complete); }

  std::vector<int> shifts(int i) const {
    std::vector<int> s;
    if (i < 0 || i > res_.top()) return s;
    for (int a : res_.twists[static_cast<std::size_t>(i)]) s.push_back(kind_ == HomologyKind::Tor ? a : -a);
    return s;
  }

  /// Index of the codomain of the outgoing differential at i, or nullopt.
  std::optional<int> out_target(int i) const {
    if (kind_ == HomologyKind::Tor) return i >= 1 ? std::optional<int>(i - 1) : std::nullopt;
    return i + 1;
  }
  std::optional<int> in_source(int i) const {
    if (kind_ == HomologyKind::Tor) return i + 1;
    return i >= 1 ? std::optional<int>(i - 1) : std::nullopt;
  }

  /// Differential leaving index i.
  BlockLists out_lists(int i) const {
    BlockLists lists(res_.rank(i));
    if (kind_ == HomologyKind::Tor) {
      if (i < 1) return lists;
      auto cols = pieces::split_columns(res_.d(i));
      for (std::size_t k = 0; k < cols.size(); ++k) lists[k] = cols[k];
    } else {
      if (i + 1 > res_.top()) return lists;
      auto cols = pieces::split_columns(res_.d(i + 1));
      for (std::size_t l = 0; l < cols.size(); ++l)
        for (const auto& [row, p] : cols[l]) lists[row].emplace_back(static_cast<std::uint32_t>(l), p);
    }
    return lists;
  }

  std::vector<std::uint32_t> offsets(int i, int d) const {
    std::vector<std::uint32_t> off;
    std::uint32_t acc = 0;
    for (int s : shifts(i)) {
      off.push_back(acc);
      acc += static_cast<std::uint32_t>(n_.piece(d - s).size());
    }
    off.push_back(acc);
    return off;
  }

  std::size_t dim(int i, int d) const { return offsets(i, d).back(); }

  /// Rank of the differential from index `src` (lists) into index `tgt`, at degree d.
  std::size_t rank(int src, int tgt, const BlockLists& lists, int d) const {
    const auto s_shift = shifts(src);
    const auto t_off = offsets(tgt, d);
    if (t_off.back() == 0) return 0;
    Accumulator acc(n_.ring()->field());
    std::vector<SparseVec> cols;
    for (std::size_t k = 0; k < s_shift.size(); ++k) {
      if (lists[k].empty()) continue;
      for (const auto& b : n_.piece(d - s_shift[k])) {
        acc.reset(0);
        for (const auto& [t, p] : lists[k]) n_.add_product(acc, t_off[t], p, b.mono, b.comp, 1);
        cols.push_back(acc.take());
      }
    }
    return rank_of_columns(n_.ring()->field(), t_off.back(), cols);
  }

  /// Presentation data of term i as a quotient of a free module.
  std::vector<int> gen_twists(int i) const {
    std::vector<int> tw;
    for (int s : shifts(i))
      for (int t : n_.twists()) tw.push_back(t + s);
    return tw;
  }
  std::vector<FreeModuleElement> term_relations(int i) const {
    std::vector<FreeModuleElement> out;
    const std::size_t g = n_.num_generators();
    for (std::size_t k = 0; k < res_.rank(i); ++k)
      for (const auto& r : n_.relations().columns) out.push_back(elem::shift(r, static_cast<std::int64_t>(k * g)));
    return out;
  }
  std::vector<FreeModuleElement> lifted_columns(const BlockLists& lists) const {
    const std::size_t g = n_.num_generators();
    std::vector<FreeModuleElement> cols;
    const auto& amb = n_.ring()->ambient();
    for (std::size_t k = 0; k < lists.size(); ++k)
      for (std::size_t j = 0; j < g; ++j) {
        FreeModuleElement c;
        for (const auto& [t, p] : lists[k])
          c = elem::add(amb.field(), c, elem::from_poly(p, static_cast<std::uint32_t>(t * g + j)));
        cols.push_back(std::move(c));
      }
    return cols;
  }

  const GradedModule& coefficients() const { return n_; }
  HomologyKind kind() const { return kind_; }

 private:
  HomologyKind kind_;
  const FreeResolution& res_;
  const GradedModule& n_;
};

/// H_i = 0 iff generators of the preimage of the kernel lie in image + relations.
bool syzygy_certificate(const BlockComplex& cx, int i, const GroebnerOptions& opts) {
  const RingPtr& ring = cx.coefficients().ring();
  const auto src_tw = cx.gen_twists(i);
  if (src_tw.empty()) return true;
  std::vector<FreeModuleElement> kernel;
  auto tgt = cx.out_target(i);
  const auto out_cols = cx.lifted_columns(cx.out_lists(i));
  bool out_zero = true;
  for (const auto& c : out_cols) out_zero = out_zero && c.is_zero();
  if (!tgt || cx.gen_twists(*tgt).empty() || out_zero) {
    for (std::uint32_t j = 0; j < src_tw.size(); ++j) {
      FreeModuleElement e;
      e.terms.push_back({Monomial{}, j, 1});
      kernel.push_back(std::move(e));
    }
  } else {
    Matrix m;
    m.target_twists = cx.gen_twists(*tgt);
    m.source_twists = src_tw;
    m.columns = out_cols;
    for (auto& r : cx.term_relations(*tgt)) {
      m.source_twists.push_back(*elem::degree(r, m.target_twists));
      m.columns.push_back(std::move(r));
    }
    std::vector<long> keep(m.cols());
    for (std::size_t j = 0; j < keep.size(); ++j) keep[j] = j < src_tw.size() ? static_cast<long>(j) : -1;
    for (const auto& z : kernel_of_map(ring, m, opts)) {
      FreeModuleElement p = elem::remap(z, keep);
      if (!p.is_zero()) kernel.push_back(std::move(p));
    }
  }
  std::vector<FreeModuleElement> image = cx.term_relations(i);
  if (auto src = cx.in_source(i); src && !cx.gen_twists(*src).empty()) {
    BlockLists in = cx.out_lists(*src);
    for (auto& c : cx.lifted_columns(in))
      if (!c.is_zero()) image.push_back(std::move(c));
  }
  ModuleGroebnerBasis gb = groebner(ring, src_tw, image, opts);
  for (const auto& z : kernel)
    if (!normal_form(z, gb).is_zero()) return false;
  return true;
}

HomologyReport compute(HomologyKind kind, const FreeResolution& res, const GradedModule& n, int lo, int hi,
                       const HomologyOptions& opts) {
  if (lo < 0 || hi < lo) throw InvalidInput("homology range must satisfy 0 <= lo <= hi");
  if (!res.module.ring()->same_ring(*n.ring())) throw InvalidInput("modules live over different rings");
  BlockComplex cx(kind, res, n);
  if (!cx.available(hi))
    throw InvalidInput("resolution computed to F_" + std::to_string(res.top()) + " is too short for index " +
                       std::to_string(hi));
  HomologyReport rep;
  rep.kind = kind;
  rep.m_name = label(res.module);
  rep.n_name = label(n);
  rep.lo = lo;
  rep.hi = hi;
  const FiniteLength fl = n.finite_length();
  for (int i = lo; i <= hi; ++i) {
    const auto sh = cx.shifts(i);
    auto& row = rep.dims[i];
    if (sh.empty() || n.is_zero()) {
      rep.is_zero[i] = true;
      rep.certificate[i] = ZeroCertificate::FiniteSupport;
      rep.window[i] = {0, -1};
      rep.finite_support[i] = true;
      continue;
    }
    const int smin = *std::min_element(sh.begin(), sh.end());
    const int smax = *std::max_element(sh.begin(), sh.end());
    int wlo, whi;
    if (fl.finite) {
      wlo = smin + n.min_twist();
      whi = smax + fl.top_degree.value_or(n.min_twist());
    } else {
      wlo = smin + n.min_twist();
      const int base = (kind == HomologyKind::Tor ? res.module.max_twist() : 0) + n.max_twist() + 2 * hi + 5;
      whi = opts.degree_cap.value_or(std::max(base, smax + n.max_twist() + 5));
    }
    rep.window[i] = {wlo, whi};
    rep.finite_support[i] = fl.finite;
    const BlockLists out = cx.out_lists(i);
    const auto tgt = cx.out_target(i);
    const auto src = cx.in_source(i);
    BlockLists in;
    if (src) in = cx.out_lists(*src);
    for (int d = wlo; d <= whi; ++d) {
      long long dim = static_cast<long long>(cx.dim(i, d));
      if (dim == 0) continue;
      if (tgt) dim -= static_cast<long long>(cx.rank(i, *tgt, out, d));
      if (src && !cx.shifts(*src).empty()) dim -= static_cast<long long>(cx.rank(*src, i, in, d));
      if (dim < 0) throw InternalError("negative homology dimension");
      if (dim > 0) row[d] = dim;
    }
    const bool flat = kind == HomologyKind::Tor && n.is_free() && i >= 1;
    if (!row.empty()) {
      if (flat) throw InternalError("nonzero Tor against a free module");
      rep.is_zero[i] = false;
      rep.certificate[i] = ZeroCertificate::Witness;
    } else if (fl.finite) {
      rep.is_zero[i] = true;
      rep.certificate[i] = ZeroCertificate::FiniteSupport;
    } else if (flat) {
      rep.is_zero[i] = true;
      rep.certificate[i] = ZeroCertificate::Flat;
    } else if (opts.certify) {
      rep.is_zero[i] = syzygy_certificate(cx, i, opts.groebner);
      rep.certificate[i] = rep.is_zero[i] ? ZeroCertificate::Syzygy : ZeroCertificate::Witness;
    }
    // Without certification an all-zero window on an infinite term stays undecided.
  }
  return rep;
}

}  // namespace

const char* certificate_name(ZeroCertificate c) {
  switch (c) {
    case ZeroCertificate::Witness: return "witness";
    case ZeroCertificate::FiniteSupport: return "finite-support";
    case ZeroCertificate::Syzygy: return "syzygy";
    case ZeroCertificate::Flat: return "flat";
  }
  return "?";
}

long long HomologyReport::total(int i) const {
  auto it = dims.find(i);
  if (it == dims.end()) return 0;
  long long s = 0;
  for (const auto& [d, v] : it->second) s += v;
  return s;
}

long long HomologyReport::dim(int i, int d) const {
  auto it = dims.find(i);
  if (it == dims.end()) return 0;
  auto jt = it->second.find(d);
  return jt == it->second.end() ? 0 : jt->second;
}

std::string HomologyReport::strip() const {
  std::ostringstream a, b;
  const std::string head = kind == HomologyKind::Tor ? "Tor:" : "Ext:";
  a << "i:" << std::string(head.size() - 2, ' ');
  b << head;
  for (int i = lo; i <= hi; ++i) {
    const std::string idx = std::to_string(i);
    auto it = is_zero.find(i);
    const std::string mark = it == is_zero.end() ? "?" : (it->second ? "0" : "*");
    a << " " << idx;
    b << " " << std::string(idx.size() - 1, ' ') << mark;
  }
  return a.str() + "\n" + b.str();
}

HomologyReport tor(const FreeResolution& res, const GradedModule& n, int lo, int hi, const HomologyOptions& opts) {
  return compute(HomologyKind::Tor, res, n, lo, hi, opts);
}

HomologyReport tor(const GradedModule& m, const GradedModule& n, int lo, int hi, const HomologyOptions& opts) {
  return tor(minimal_resolution(m, hi + 1), n, lo, hi, opts);
}

HomologyReport ext(const FreeResolution& res, const GradedModule& n, int lo, int hi, const HomologyOptions& opts) {
  return compute(HomologyKind::Ext, res, n, lo, hi, opts);
}

HomologyReport ext(const GradedModule& m, const GradedModule& n, int lo, int hi, const HomologyOptions& opts) {
  return ext(minimal_resolution(m, hi + 1), n, lo, hi, opts);
}

SymmetryCheck tor_symmetry_check(const FreeResolution& res_m, const FreeResolution& res_n, int lo, int hi) {
  HomologyOptions opts;
  // Dimension tables only; the zero verdicts are not compared.
  opts.certify = false;
  auto dims_only = [&](const FreeResolution& r, const GradedModule& coeff) {
    return compute(HomologyKind::Tor, r, coeff, lo, hi, opts);
  };
  HomologyReport a = dims_only(res_m, res_n.module);
  HomologyReport b = dims_only(res_n, res_m.module);
  SymmetryCheck out;
  for (int i = lo; i <= hi; ++i) {
    const auto [alo, ahi] = a.window[i];
    const auto [blo, bhi] = b.window[i];
    const bool afin = a.finite_support[i], bfin = b.finite_support[i];
    const int from = std::min(alo, blo), to = std::max(ahi, bhi);
    for (int d = from; d <= to; ++d) {
      const bool in_a = afin || (d >= alo && d <= ahi);
      const bool in_b = bfin || (d >= blo && d <= bhi);
      if (!in_a || !in_b) continue;
      if (a.dim(i, d) != b.dim(i, d)) {
        out.agrees = false;
        out.first_difference = {{i, d}};
        return out;
      }
    }
  }
  return out;
}

SymmetryCheck tor_symmetry_check(const GradedModule& m, const GradedModule& n, int lo, int hi) {
  return tor_symmetry_check(minimal_resolution(m, hi + 1), minimal_resolution(n, hi + 1), lo, hi);
}

FiniteLength finite_length_test(const GradedModule& n) { return n.finite_length(); }

}  // namespace cxlab

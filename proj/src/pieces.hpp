#pragma once

// Matrices of degree-0 maps restricted to graded pieces.

#include <utility>
#include <vector>

#include "cxlab/module.hpp"

namespace cxlab::pieces {

/// Column j as (row, entry) pairs.
using Columns = std::vector<std::vector<std::pair<std::uint32_t, Polynomial>>>;

inline Columns split_columns(const Matrix& m) {
  Columns out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto& c = m.columns[j];
    std::size_t a = 0;
    while (a < c.terms.size()) {
      std::size_t b = a;
      Polynomial p;
      while (b < c.terms.size() && c.terms[b].comp == c.terms[a].comp) {
        p.terms.push_back({c.terms[b].mono, c.terms[b].coeff});
        ++b;
      }
      out[j].emplace_back(c.terms[a].comp, std::move(p));
      a = b;
    }
  }
  return out;
}

/// Images of the degree-d basis of `src` (generator k maps to column k) in the
/// coordinates of `tgt`'s degree-d piece.
inline std::vector<SparseVec> map_piece(const GradedModule& src, const GradedModule& tgt, const Columns& cols, int d) {
  std::vector<SparseVec> out;
  const auto& basis = src.piece(d);
  tgt.piece(d);
  Accumulator acc(src.ring()->field());
  out.reserve(basis.size());
  for (const auto& b : basis) {
    acc.reset(0);
    for (const auto& [row, p] : cols[b.comp]) tgt.add_product(acc, 0, p, b.mono, row, 1);
    out.push_back(acc.take());
  }
  return out;
}

/// x_var times the element with coordinates v in piece d of `m`, in piece d + w.
inline SparseVec multiply_by_variable(const GradedModule& m, int d, const SparseVec& v, int var) {
  const auto& basis = m.piece(d);
  const auto& ring = *m.ring();
  Polynomial x;
  x.terms.push_back({ring.ambient().variable(var), 1});
  Accumulator acc(ring.field());
  for (const auto& [i, c] : v) m.add_product(acc, 0, x, basis[i].mono, basis[i].comp, c);
  return acc.take();
}

}  // namespace cxlab::pieces

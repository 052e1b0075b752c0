#include "cxlab/linalg.hpp"

#include <algorithm>

#include "cxlab/error.hpp"

namespace cxlab {

Echelon::Echelon(const PrimeField& f, std::size_t dim)
    : field_(f), dim_(dim), pivot_row_(dim, -1), scratch_(dim, 0) {}

SparseVec Echelon::reduce_dense(std::vector<Coeff>& dense, std::uint32_t first) const {
  SparseVec out;
  for (std::uint32_t i = first; i < dim_; ++i) {
    Coeff c = dense[i];
    if (c == 0) continue;
    long r = pivot_row_[i];
    if (r < 0) {
      out.push_back({i, c});
      dense[i] = 0;
      continue;
    }
    const Coeff nc = field_.neg(c);
    for (const auto& [j, v] : rows_[static_cast<std::size_t>(r)]) dense[j] = field_.add(dense[j], field_.mul(nc, v));
  }
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  if (v.empty()) return {};
  if (v.back().first >= dim_) throw InternalError("sparse vector index exceeds echelon dimension");
  for (const auto& [i, c] : v) scratch_[i] = c;
  return reduce_dense(scratch_, v.front().first);
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Coeff inv = field_.inv(r.front().second);
  for (auto& e : r) e.second = field_.mul(e.second, inv);
  pivot_row_[r.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::size_t rank_of_columns(const PrimeField& f, std::size_t rows, const std::vector<SparseVec>& columns) {
  Echelon e(f, rows);
  for (const auto& c : columns) {
    e.insert(c);
    if (e.rank() == rows) break;
  }
  return e.rank();
}

std::vector<SparseVec> kernel_of_columns(const PrimeField& f, std::size_t rows, const std::vector<SparseVec>& columns) {
  const std::size_t n = columns.size();
  Echelon e(f, rows + n);
  std::vector<SparseVec> out;
  for (std::size_t j = 0; j < n; ++j) {
    SparseVec v = columns[j];
    v.push_back({static_cast<std::uint32_t>(rows + j), 1});
    SparseVec r = e.reduce(v);
    if (r.empty()) continue;  // cannot happen: the tracking entry is fresh
    if (r.front().first >= rows) {
      SparseVec k;
      for (const auto& [i, c] : r) k.push_back({static_cast<std::uint32_t>(i - rows), c});
      out.push_back(std::move(k));
    }
    e.insert(v);
  }
  return out;
}

void Accumulator::reset(std::size_t dim) {
  for (auto i : touched_) dense_[i] = 0;
  touched_.clear();
  if (dense_.size() < dim) dense_.resize(dim, 0);
}

void Accumulator::add(std::uint32_t index, Coeff c) {
  if (c == 0) return;
  if (index >= dense_.size()) dense_.resize(index + 1, 0);
  Coeff& slot = dense_[index];
  if (slot == 0) touched_.push_back(index);
  slot = field_.add(slot, c);
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
  SparseVec out;
  for (auto i : touched_) {
    if (dense_[i] != 0) out.push_back({i, dense_[i]});
    dense_[i] = 0;
  }
  touched_.clear();
  return out;
}

Coeff determinant(const PrimeField& f, std::vector<std::vector<Coeff>> m) {
  const std::size_t n = m.size();
  Coeff det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    Coeff inv = f.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Coeff factor = f.neg(f.mul(m[r][c], inv));
      for (std::size_t k = c; k < n; ++k) m[r][k] = f.add(m[r][k], f.mul(factor, m[c][k]));
    }
  }
  return det;
}

}  // namespace cxlab

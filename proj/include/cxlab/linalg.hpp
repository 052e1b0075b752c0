#pragma once

// Sparse exact linear algebra over F_p for graded pieces.

#include <cstdint>
#include <utility>
#include <vector>

#include "cxlab/poly.hpp"

namespace cxlab {

/// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<std::uint32_t, Coeff>>;

/// Row echelon basis built incrementally; pivot = smallest index, pivot coefficient 1.
class Echelon {
 public:
  Echelon(const PrimeField& f, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Reduces v by the stored rows; returns the remainder.
  SparseVec reduce(const SparseVec& v) const;
  /// Inserts v; returns true if it was independent of the stored rows.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  SparseVec reduce_dense(std::vector<Coeff>& dense, std::uint32_t first) const;

  PrimeField field_;
  std::size_t dim_;
  std::vector<long> pivot_row_;
  std::vector<SparseVec> rows_;
  mutable std::vector<Coeff> scratch_;
};

/// Rank of the matrix whose columns are given.
std::size_t rank_of_columns(const PrimeField& f, std::size_t rows, const std::vector<SparseVec>& columns);

/// Basis of {u : sum_j u_j columns[j] = 0}, as sparse vectors of length columns.size().
std::vector<SparseVec> kernel_of_columns(const PrimeField& f, std::size_t rows, const std::vector<SparseVec>& columns);

/// Accumulates scaled sparse contributions into a dense buffer.
class Accumulator {
 public:
  explicit Accumulator(const PrimeField& f) : field_(f) {}
  void reset(std::size_t dim);
  void add(std::uint32_t index, Coeff c);
  SparseVec take();

 private:
  PrimeField field_;
  std::vector<Coeff> dense_;
  std::vector<std::uint32_t> touched_;
};

/// Determinant of a square dense matrix (row-major).
Coeff determinant(const PrimeField& f, std::vector<std::vector<Coeff>> m);

}  // namespace cxlab

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hessgkm {

using Rational = mpq_class;

/// Sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// a + scale * b.
SparseVector sparse_axpy(const SparseVector& a, const Rational& scale, const SparseVector& b);

/// Dense matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Fraction-free (Bareiss) elimination on the denominator-cleared integer matrix.
  std::size_t rank() const;
  /// Reduced row echelon form; pivot columns appended to *pivots when given.
  RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Basis of { x : A x = 0 }.
  std::vector<std::vector<Rational>> nullspace() const;
  /// Some solution of A x = b, or nullopt when inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  RationalMatrix transpose() const;
  RationalMatrix permuted(const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Growing subspace of Q^dim kept as a sparse reduced row echelon basis.
/// Not safe for concurrent mutation; const members may be shared.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim), row_of_column_(dim, npos) {}

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the spanning set; returns false when v was already in the span.
  bool insert(const SparseVector& v);
  /// v minus its component along the basis; zero iff v is in the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  const std::vector<SparseVector>& rows() const { return rows_; }
  /// Pivot column of each row, parallel to rows().
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Basis of the orthogonal complement { x : <r, x> = 0 for every row r }.
  std::vector<SparseVector> kernel() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t dim_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> row_of_column_;
};

/// Least common multiple of the denominators of v.
mpz_class common_denominator(const SparseVector& v);

}  // namespace hessgkm

#include "hessgkm/linalg.hpp"

#include <algorithm>

#include "hessgkm/error.hpp"

namespace hessgkm {

SparseVector sparse_axpy(const SparseVector& a, const Rational& scale, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, scale * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + scale * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

mpz_class common_denominator(const SparseVector& v) {
  mpz_class l = 1;
  for (const auto& [i, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::SizeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::size_t RationalMatrix::rank() const {
  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols_; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*this)(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      m[r][c] = x.get_num() * (l / x.get_den());
    }
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t p = rank;
    while (p < rows_ && m[p][c] == 0) ++p;
    if (p == rows_) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      for (std::size_t j = c + 1; j < cols_; ++j) {
        m[i][j] = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
  RationalMatrix m = *this;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t p = row;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, c);
    for (std::size_t j = c; j < cols_; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(row, j);
    }
    if (pivots) pivots->push_back(c);
    ++row;
  }
  return m;
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) throw Error(Errc::SizeMismatch, "right-hand side length");
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  std::vector<std::size_t> pivots;
  const RationalMatrix e = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = e(i, cols_);
  return x;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::permuted(const std::vector<std::size_t>& row_order,
                                        const std::vector<std::size_t>& col_order) const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(row_order[r], col_order[c]);
  return m;
}

// ---------------------------------------------------------------------------
// EchelonBasis

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
  std::vector<std::pair<std::size_t, Rational>> parts;
  for (const auto& [c, x] : v) {
    if (c >= dim_) throw Error(Errc::IndexOutOfRange, "vector entry beyond dimension");
    const std::size_t r = row_of_column_[c];
    if (r == npos) {
      parts.emplace_back(c, x);
      continue;
    }
    for (const auto& [c2, y] : rows_[r])
      if (c2 != c) parts.emplace_back(c2, -x * y);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [c, x] : parts) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += x;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.emplace_back(c, std::move(x));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.front().first;
  const Rational inv = 1 / r.front().second;
  for (auto& [c, x] : r) x *= inv;
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot, [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == row.end() || it->first != pivot) continue;
    const Rational f = -it->second;
    row = sparse_axpy(row, f, r);
  }
  row_of_column_[pivot] = rows_.size();
  pivots_.push_back(pivot);
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseVector> EchelonBasis::kernel() const {
  std::vector<std::size_t> slot(dim_, npos);
  std::vector<SparseVector> out;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (row_of_column_[c] != npos) continue;
    slot[c] = out.size();
    out.push_back({{c, Rational(1)}});
  }
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, x] : rows_[i])
      if (c != pivots_[i]) out[slot[c]].emplace_back(pivots_[i], -x);
  for (auto& v : out)
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace hessgkm

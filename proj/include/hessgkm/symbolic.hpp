#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hessgkm/combinatorics.hpp"

namespace hessgkm {

/// Monomial in t_1..t_n stored as sorted (variable, exponent) pairs, exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int var, int exponent = 1);
  /// From a dense exponent vector indexed by variable - 1.
  static Monomial from_exponents(const std::vector<int>& exponents);

  int degree() const;
  int exponent(int var) const;
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  std::vector<int> exponents(int n) const;
  int max_variable() const { return factors_.empty() ? 0 : factors_.back().first; }

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, int>> factors_;
};

/// Graded lexicographic order with t_1 > t_2 > ... ; true when a precedes b.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree d in n variables, in graded-lex order.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// Sparse polynomial in t_1..t_n with integer coefficients; zero terms never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}

  static Polynomial constant(int n, const mpz_class& c);
  static Polynomial variable(int n, int k);
  /// t_a - t_b.
  static Polynomial linear_difference(int n, int a, int b);
  static Polynomial from_terms(int n, const std::vector<std::pair<Monomial, mpz_class>>& terms);

  int ambient() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// True for zero and for polynomials whose terms all have degree d.
  bool is_homogeneous(int d) const;
  mpz_class coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const mpz_class& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const mpz_class& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const mpz_class& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// "t1^2 - 2*t1*t2 + t2^2"; "0" for zero.
  std::string str() const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// Replaces t_a by t_b, i.e. reduces modulo t_a - t_b.
Polynomial substitute(const Polynomial& p, int a, int b);
Monomial substitute(const Monomial& m, int a, int b);

/// True iff (t_a - t_b) divides p.
bool divisible_by_linear(const Polynomial& p, int a, int b);

/// Ring automorphism t_i -> t_{sigma(i)}.
Polynomial permute_variables(const Permutation& sigma, const Polynomial& p);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(int n, const nlohmann::json& j);
/// Inverse of Polynomial::str().
Polynomial parse_polynomial(int n, const std::string& text);

/// Coefficients b_0, b_2, b_4, ... as the coefficient list of q^0, q^1, ...
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<std::int64_t> coefficients);

  static PoincarePolynomial one() { return PoincarePolynomial({1}); }
  /// q^k.
  static PoincarePolynomial monomial(int k, std::int64_t c = 1);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(int k) const;
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t total() const;
  bool is_palindromic() const;
  /// Drops terms of degree > d.
  PoincarePolynomial truncated(int d) const;

  PoincarePolynomial& operator+=(const PoincarePolynomial& other);
  friend PoincarePolynomial operator+(PoincarePolynomial a, const PoincarePolynomial& b) { return a += b; }
  friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b);

  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

  /// "1 + 4q + q^2".
  std::string str() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace hessgkm

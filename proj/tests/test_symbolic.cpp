#include <doctest.h>

#include <random>

#include "hessgkm/error.hpp"
#include "hessgkm/symbolic.hpp"
#include "oracles.hpp"

using namespace hessgkm;

namespace {

Polynomial t(int n, int k) { return Polynomial::variable(n, k); }

Polynomial random_poly(std::mt19937& rng, int n, int terms, int max_deg) {
  std::uniform_int_distribution<int> var(1, n), deg(0, max_deg), coef(-4, 4);
  Polynomial p(n);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) m = m * Monomial::variable(var(rng));
    p.add_term(m, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("monomials in graded-lex order") {
  const auto m = monomials_of_degree(3, 2);
  REQUIRE(m.size() == 6);
  std::vector<std::vector<int>> exps;
  for (const auto& x : m) exps.push_back(x.exponents(3));
  CHECK(exps == std::vector<std::vector<int>>{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 4; ++d) CHECK(static_cast<std::int64_t>(monomials_of_degree(n, d).size()) == oracle::binom(n + d - 1, d));
}

TEST_CASE("polynomial arithmetic and normal form") {
  const int n = 3;
  const Polynomial a = t(n, 1) - t(n, 2);
  CHECK((a * a).str() == "t1^2 - 2*t1*t2 + t2^2");
  CHECK((a - a).is_zero());
  CHECK((a - a).str() == "0");
  CHECK(a.total_degree() == 1);
  CHECK(Polynomial(n).total_degree() == -1);
  CHECK((a * a).is_homogeneous(2));
  CHECK(!(a * a + t(n, 3)).is_homogeneous(2));
  CHECK((a * mpz_class(-3)).str() == "-3*t1 + 3*t2");
  CHECK(Polynomial::constant(n, 5).str() == "5");
  Polynomial bad(2);
  CHECK_THROWS_AS(bad.add_term(Monomial::variable(3), 1), Error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 4, 5, 3);
    const auto b = random_poly(rng, 4, 5, 3);
    const auto c = random_poly(rng, 4, 5, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
  }
}

TEST_CASE("string and JSON round trips") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 5, 6, 4);
    CHECK(parse_polynomial(5, a.str()) == a);
    CHECK(polynomial_from_json(5, to_json(a)) == a);
  }
  CHECK_THROWS_AS(parse_polynomial(3, "t1 +"), Error);
  CHECK_THROWS_AS(parse_polynomial(3, "t4"), Error);
}

TEST_CASE("substitute") {
  const int n = 3;
  CHECK(substitute(t(n, 1) - t(n, 2), 1, 2).is_zero());
  CHECK(substitute(t(n, 1) * t(n, 3), 1, 3) == t(n, 3) * t(n, 3));
  CHECK(substitute((t(n, 1) - t(n, 2)) * (t(n, 1) - t(n, 3)), 1, 3).is_zero());
  try {
    substitute(t(n, 1), 2, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexOutOfRange);
  }
  CHECK_THROWS_AS(substitute(t(n, 1), 1, 4), Error);
}

TEST_CASE("divisibility by t_a - t_b") {
  const int n = 4;
  CHECK(divisible_by_linear(t(n, 1) - t(n, 2), 1, 2));
  CHECK(!divisible_by_linear(t(n, 1) + t(n, 2), 1, 2));
  CHECK(divisible_by_linear((t(n, 4) - t(n, 1)) * (t(n, 4) - t(n, 2)), 4, 2));
  // against long division on random inputs, half of them multiplied by the divisor
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = random_poly(rng, n, 4, 3);
    const int a = 1 + trial % 4;
    const int b = 1 + (trial / 4 + 1 + trial % 4) % 4;
    if (a == b) continue;
    if (trial % 2) p = p * (t(n, a) - t(n, b));
    CHECK(divisible_by_linear(p, a, b) == oracle::divides_by_long_division(p, a, b));
  }
}

TEST_CASE("variable permutation") {
  const int n = 3;
  CHECK(permute_variables(Permutation::parse("231"), t(n, 1)) == t(n, 2));
  const auto p = t(n, 1) * t(n, 1) - t(n, 2) * t(n, 3) * mpz_class(3);
  CHECK(permute_variables(Permutation::identity(3), p) == p);
  CHECK(permute_variables(Permutation::parse("213"), t(n, 1) - t(n, 2)) == -(t(n, 1) - t(n, 2)));
  const auto s = Permutation::parse("312");
  const auto u = Permutation::parse("132");
  CHECK(permute_variables(s * u, p) == permute_variables(s, permute_variables(u, p)));
  CHECK_THROWS_AS(permute_variables(Permutation::identity(2), p), Error);
}

TEST_CASE("Poincare polynomials") {
  const PoincarePolynomial p({1, 4, 1});
  CHECK(p.str() == "1 + 4q + q^2");
  CHECK(p.total() == 6);
  CHECK(p.is_palindromic());
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(5) == 0);
  CHECK(!PoincarePolynomial({1, 2}).is_palindromic());
  CHECK((p * PoincarePolynomial({1, 1})).coefficients() == std::vector<std::int64_t>{1, 5, 5, 1});
  CHECK(p.truncated(1) == PoincarePolynomial({1, 4}));
  CHECK(PoincarePolynomial({6}).str() == "6");
  CHECK(PoincarePolynomial({0, 0}).degree() == -1);
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "hessgkm/combinatorics.hpp"
#include "hessgkm/error.hpp"
#include "oracles.hpp"

using namespace hessgkm;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

std::vector<int> vals(const HessenbergFunction& h) { return {h.values().begin(), h.values().end()}; }

}  // namespace

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(8) == 40320);
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::binom(n, k));
}

TEST_CASE("permutation parsing and printing") {
  const auto w = Permutation::parse("231");
  CHECK(w(1) == 2);
  CHECK(w(3) == 1);
  CHECK(w.str() == "231");
  CHECK(Permutation::parse("2,3,1") == w);
  CHECK(code_of([] { Permutation::parse("221"); }) == Errc::ParseError);
  CHECK(code_of([] { Permutation::parse("2a1"); }) == Errc::ParseError);
  CHECK(code_of([] { Permutation(std::vector<int>{1, 3}); }) == Errc::OutOfRange);
  const auto big = Permutation::identity(10);
  CHECK(big.str() == "1,2,3,4,5,6,7,8,9,10");
  CHECK(Permutation::parse(big.str()) == big);
}

TEST_CASE("composition, inverse and transposition") {
  const auto a = Permutation::parse("231");
  const auto b = Permutation::parse("213");
  // (a*b)(i) = a(b(i))
  const auto ab = a * b;
  for (int i = 1; i <= 3; ++i) CHECK(ab(i) == a(b(i)));
  CHECK(a * a.inverse() == Permutation::identity(3));
  CHECK(a.swapped(1, 3).str() == "132");
  CHECK(code_of([&] { a.swapped(0, 2); }) == Errc::IndexOutOfRange);
  CHECK(code_of([&] { a * Permutation::identity(4); }) == Errc::SizeMismatch);
}

TEST_CASE("enumeration is lexicographic and ranks invert") {
  const auto s3 = enumerate_group(3);
  std::vector<std::string> got;
  for (const auto& w : s3) got.push_back(w.str());
  CHECK(got == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
  CHECK(enumerate_group(1).size() == 1);
  const auto s4 = enumerate_group(4);
  CHECK(s4.size() == 24);
  CHECK(s4.front().str() == "1234");
  CHECK(s4.back().str() == "4321");
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_group(n);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (std::size_t r = 0; r < all.size(); ++r) {
      CHECK(lex_rank(all[r]) == r);
      CHECK(lex_unrank(n, r) == all[r]);
    }
  }
  CHECK(code_of([] { enumerate_group(9); }) == Errc::CapExceeded);
  CHECK(enumerate_group(9, 9).size() == 362880);
}

TEST_CASE("Hessenberg validation") {
  const auto h = HessenbergFunction::parse("3,3,4,5,5");
  CHECK(h.size() == 5);
  CHECK(h(0) == 1);
  CHECK(h(3) == 4);
  CHECK(HessenbergFunction::parse("1,2,3").size() == 3);
  CHECK(code_of([] { HessenbergFunction::parse("2,1,3"); }) == Errc::NotWeaklyIncreasing);
  CHECK(code_of([] { HessenbergFunction::parse("2,2,2"); }) == Errc::BelowDiagonal);
  CHECK(code_of([] { HessenbergFunction::parse("2,4,4"); }) == Errc::OutOfRange);
  CHECK(code_of([] { HessenbergFunction::parse("2,,3"); }) == Errc::ParseError);
  CHECK(code_of([] { HessenbergFunction::parse("x"); }) == Errc::ParseError);
  // validate is idempotent
  CHECK(HessenbergFunction::validate(vals(h)) == h);
}

TEST_CASE("reduce") {
  const auto h = HessenbergFunction::parse("3,3,4,5,5");
  CHECK(vals(reduce(h, 2)) == std::vector<int>{2, 3, 4, 4});
  CHECK(vals(reduce(h, 3)) == std::vector<int>{2, 2, 4, 4});
  CHECK(vals(reduce(HessenbergFunction::parse("4,4,4,4"), 4)) == std::vector<int>{3, 3, 3});
  CHECK(code_of([&] { reduce(h, 0); }) == Errc::IndexOutOfRange);
  CHECK(code_of([&] { reduce(h, 6); }) == Errc::IndexOutOfRange);
  // always valid, size n-1
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_hessenberg(n))
      for (int j = 1; j <= n; ++j) CHECK(reduce(g, j).size() == n - 1);
}

TEST_CASE("reduce agrees with deleting row and column j of the box picture") {
  // Boxes (r, c) with r <= h(c)... use the row form: column c holds rows 1..h(c).
  for (int n = 2; n <= 6; ++n) {
    for (const auto& h : enumerate_hessenberg(n)) {
      for (int j = 1; j <= n; ++j) {
        std::vector<int> expect;
        for (int c = 1; c <= n; ++c) {
          if (c == j) continue;
          int rows = 0;
          for (int r = 1; r <= h(c); ++r)
            if (r != j) ++rows;
          expect.push_back(rows);
        }
        CHECK(vals(reduce(h, j)) == expect);
      }
    }
  }
}

TEST_CASE("dual function") {
  const auto h = HessenbergFunction::parse("3,3,4,5,5");
  CHECK(dual_function(h, 4) == 3);
  CHECK(dual_function(h, 2) == 1);
  for (int i = 2; i <= 5; ++i) CHECK(dual_function(HessenbergFunction::parse("5,5,5,5,5"), i) == 1);
  CHECK(code_of([&] { dual_function(h, 1); }) == Errc::IndexOutOfRange);
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_hessenberg(n))
      for (int i = 2; i <= n; ++i) CHECK(dual_function(g, i) <= i);
}

TEST_CASE("bottom and L sets") {
  const auto h = HessenbergFunction::parse("3,3,4,5,5");
  CHECK(bottom_set(h) == std::vector<int>{2});
  CHECK(l_set(h) == std::vector<int>{3, 4});
  const auto g = HessenbergFunction::parse("2,3,3");
  CHECK(bottom_set(g).empty());
  CHECK(l_set(g) == std::vector<int>{1, 2});
  for (int n = 3; n <= 8; ++n) {
    const auto flag = HessenbergFunction::validate(std::vector<int>(static_cast<std::size_t>(n), n));
    CHECK(bottom_set(flag) == std::vector<int>{n - 1});
    CHECK(l_set(flag).empty());
  }
}

TEST_CASE("lambda sets") {
  const auto h = HessenbergFunction::parse("3,4,5,5,5");
  CHECK(lambda_set(h, 2) == std::vector<int>{1, 2});
  CHECK(lambda_star_set(h, 2) == std::vector<int>{4, 5});
  for (int n = 2; n <= 7; ++n) {
    const auto flag = HessenbergFunction::validate(std::vector<int>(static_cast<std::size_t>(n), n));
    for (int d = 1; d <= n; ++d) CHECK(lambda_set(flag, d).empty());
  }
  // Under the gap condition, j -> j+d+1 maps Λ_d onto Λ*_d.
  for (int n = 3; n <= 7; ++n)
    for (const auto& g : enumerate_hessenberg(n))
      for (int d = 1; d <= n - 1; ++d) {
        if (!g.has_gap(d)) continue;
        std::vector<int> shifted;
        for (int j : lambda_set(g, d)) shifted.push_back(j + d + 1);
        CHECK(shifted == lambda_star_set(g, d));
      }
}

TEST_CASE("h-inversions") {
  CHECK(h_inversions(HessenbergFunction::parse("2,3,3"), Permutation::parse("321")) == 2);
  CHECK(h_inversions(HessenbergFunction::parse("3,3,3"), Permutation::parse("321")) == 3);
  for (const auto& h : enumerate_hessenberg(4)) CHECK(h_inversions(h, Permutation::identity(4)) == 0);
  for (const auto& w : enumerate_group(5))
    CHECK(h_inversions(HessenbergFunction::parse("5,5,5,5,5"), w) == inversions(w));
  CHECK(code_of([] { h_inversions(HessenbergFunction::parse("2,2"), Permutation::identity(3)); }) == Errc::SizeMismatch);
}

TEST_CASE("Hessenberg enumeration gives Catalan many, sorted, distinct") {
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    const auto all = enumerate_hessenberg(n);
    CHECK(all.size() == catalan[static_cast<std::size_t>(n)]);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<HessenbergFunction>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("partitions") {
  const auto p = Partition::from_composition({1, 0, 7});
  CHECK(p.str() == "(7,1)");
  CHECK(p.size() == 8);
  CHECK(p.length() == 2);
  std::vector<std::string> got;
  for (const auto& q : partitions_of(4)) got.push_back(q.str());
  CHECK(got == std::vector<std::string>{"(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"});
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
}

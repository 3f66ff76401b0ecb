#include "hessgkm/betti.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "hessgkm/error.hpp"

namespace hessgkm {

int dimension(const HessenbergFunction& h) {
  int d = 0;
  for (int j = 1; j <= h.size(); ++j) d += h(j) - j;
  return d;
}

PoincarePolynomial poincare_bruteforce(const HessenbergFunction& h, int cap) {
  const int n = h.size();
  if (n > cap) throw Error(Errc::CapExceeded, "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    ++counts[static_cast<std::size_t>(h_inversions(h, Permutation(w)))];
  } while (std::next_permutation(w.begin(), w.end()));
  return PoincarePolynomial(std::move(counts));
}

namespace {

std::shared_mutex memo_mutex;
std::map<std::vector<int>, PoincarePolynomial> memo;

}  // namespace

PoincarePolynomial poincare_inductive(const HessenbergFunction& h) {
  const std::vector<int> key(h.values().begin(), h.values().end());
  {
    std::shared_lock lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  PoincarePolynomial result;
  if (h.size() == 1) {
    result = PoincarePolynomial::one();
  } else {
    for (int j = 1; j <= h.size(); ++j)
      result += PoincarePolynomial::monomial(h(j) - j) * poincare_inductive(reduce(h, j));
  }
  std::unique_lock lock(memo_mutex);
  memo.emplace(key, result);
  return result;
}

PoincarePolynomial flag_poincare(int n) {
  PoincarePolynomial p = PoincarePolynomial::one();
  for (int i = 1; i <= n; ++i) p = p * PoincarePolynomial(std::vector<std::int64_t>(static_cast<std::size_t>(i), 1));
  return p;
}

std::int64_t b2_closed_form(const HessenbergFunction& h) {
  if (!h.is_connected()) throw Error(Errc::NotConnected, "h(j) >= j+1 fails for h=" + h.str());
  const int n = h.size();
  const auto ls = l_set(h);
  std::int64_t b2 = 0;
  for (int j : ls) b2 += binomial(n, j);
  b2 += static_cast<std::int64_t>(n - 1) * static_cast<std::int64_t>(bottom_set(h).size());
  b2 -= static_cast<std::int64_t>(ls.size());
  return b2;
}

std::vector<std::int64_t> betti_low_degree(const HessenbergFunction& h, int d) {
  const int n = h.size();
  if (d < 2) throw Error(Errc::PreconditionUnmet, "d >= 2 required");
  if (d > n - 1) throw Error(Errc::PreconditionUnmet, "d <= n-1 required");
  if (!h.has_gap(d)) throw Error(Errc::PreconditionUnmet, "h(j) >= j+" + std::to_string(d) + " fails for h=" + h.str());
  const PoincarePolynomial flag = flag_poincare(n);
  std::vector<std::int64_t> out;
  for (int i = 0; i <= d; ++i) out.push_back(flag.coefficient(i));
  out.back() += static_cast<std::int64_t>(n - 1) * static_cast<std::int64_t>(lambda_set(h, d).size());
  return out;
}

std::int64_t component_count(const HessenbergFunction& h) {
  const int n = h.size();
  std::int64_t count = factorial(n);
  int block = 0;
  for (int j = 1; j <= n; ++j) {
    ++block;
    if (h(j) == j) {
      count /= factorial(block);
      block = 0;
    }
  }
  return count;
}

}  // namespace hessgkm

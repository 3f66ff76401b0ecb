#include "hessgkm/rep.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "hessgkm/betti.hpp"
#include "hessgkm/error.hpp"

namespace hessgkm {

Partition cycle_type(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> lengths;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_composition(std::move(lengths));
}

Permutation cycle_type_representative(const Partition& mu) {
  std::vector<int> images;
  int start = 1;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) images.push_back(start + (k + 1) % len);
    start += len;
  }
  return Permutation(std::move(images));
}

std::int64_t m_lambda_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw Error(Errc::SizeMismatch, "partitions of different sizes");
  // Assign each cycle of mu to one block of lambda; blocks are labeled.
  std::map<std::pair<std::size_t, std::vector<int>>, std::int64_t> memo;
  const auto cycles = mu.parts();
  std::function<std::int64_t(std::size_t, std::vector<int>&)> count = [&](std::size_t c, std::vector<int>& room) {
    if (c == cycles.size()) return std::int64_t{1};
    auto key = std::make_pair(c, room);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (auto& r : room) {
      if (r < cycles[c]) continue;
      r -= cycles[c];
      total += count(c + 1, room);
      r += cycles[c];
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  std::vector<int> room(lambda.parts().begin(), lambda.parts().end());
  return count(0, room);
}

std::int64_t m_lambda_dimension(const Partition& lambda) {
  std::int64_t d = factorial(lambda.size());
  for (int p : lambda.parts()) d /= factorial(p);
  return d;
}

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(int n) : n_(n) {
  for (const Partition& mu : partitions_of(n)) values_.emplace(mu, Rational(0));
}

const Rational& ClassFunction::at(const Partition& mu) const {
  auto it = values_.find(mu);
  if (it == values_.end()) throw Error(Errc::SizeMismatch, "cycle type " + mu.str() + " is not a partition of " + std::to_string(n_));
  return it->second;
}

void ClassFunction::set(const Partition& mu, Rational value) {
  auto it = values_.find(mu);
  if (it == values_.end()) throw Error(Errc::SizeMismatch, "cycle type " + mu.str() + " is not a partition of " + std::to_string(n_));
  it->second = std::move(value);
}

bool ClassFunction::is_integral() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& e) { return e.second.get_den() == 1; });
}

ClassFunction ClassFunction::permutation_character(const Partition& lambda) {
  ClassFunction f(lambda.size());
  for (auto& [mu, v] : f.values_) v = Rational(static_cast<long>(m_lambda_character(lambda, mu)));
  return f;
}

ClassFunction ClassFunction::constant(int n, const Rational& c) {
  ClassFunction f(n);
  for (auto& [mu, v] : f.values_) v = c;
  return f;
}

// ---------------------------------------------------------------------------
// ModuleDecomposition

void ModuleDecomposition::add(const Partition& lambda, std::int64_t c) {
  if (n_ == 0) n_ = lambda.size();
  if (lambda.size() != n_) throw Error(Errc::SizeMismatch, "partition " + lambda.str() + " not of size " + std::to_string(n_));
  auto& m = mult_[lambda];
  m += c;
  if (m == 0) mult_.erase(lambda);
}

std::int64_t ModuleDecomposition::multiplicity(const Partition& lambda) const {
  auto it = mult_.find(lambda);
  return it == mult_.end() ? 0 : it->second;
}

bool ModuleDecomposition::all_nonnegative() const {
  return std::all_of(mult_.begin(), mult_.end(), [](const auto& e) { return e.second >= 0; });
}

std::int64_t ModuleDecomposition::dimension() const {
  std::int64_t d = 0;
  for (const auto& [lambda, c] : mult_) d += c * m_lambda_dimension(lambda);
  return d;
}

std::string ModuleDecomposition::str() const {
  if (mult_.empty()) return "0";
  std::string s;
  for (const auto& [lambda, c] : mult_) {
    std::int64_t a = c;
    if (s.empty()) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    if (a != 1) s += std::to_string(a) + "*";
    s += "M" + lambda.str();
  }
  return s;
}

nlohmann::ordered_json ModuleDecomposition::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [lambda, c] : mult_) j[lambda.str()] = c;
  return j;
}

// ---------------------------------------------------------------------------

ClassFunction dot_action_character(const HessenbergFunction& h, int d, const LinearAlgebraBudget& budget, int jobs) {
  if (!h.is_connected()) throw Error(Errc::NotConnected, "h(j) >= j+1 fails for h=" + h.str());
  const OrdinaryCohomologyPiece piece = ordinary_cohomology_piece(h, d, budget);
  const auto types = partitions_of(h.size());
  std::vector<Rational> traces(types.size());
  auto work = [&](std::size_t first) {
    for (std::size_t t = first; t < types.size(); t += static_cast<std::size_t>(std::max(jobs, 1)))
      traces[t] = piece.trace(cycle_type_representative(types[t]));
  };
  if (jobs <= 1) {
    work(0);
  } else {
    std::vector<std::future<void>> pending;
    for (int t = 0; t < jobs; ++t) pending.push_back(std::async(std::launch::async, work, static_cast<std::size_t>(t)));
    for (auto& f : pending) f.get();
  }
  ClassFunction chi(h.size());
  for (std::size_t t = 0; t < types.size(); ++t) chi.set(types[t], traces[t]);
  return chi;
}

ModuleDecomposition decompose(const ClassFunction& chi) {
  const auto parts = partitions_of(chi.size());
  const std::size_t p = parts.size();
  RationalMatrix a(p, p);
  std::vector<Rational> b(p);
  for (std::size_t r = 0; r < p; ++r) {
    b[r] = chi.at(parts[r]);
    for (std::size_t c = 0; c < p; ++c) a(r, c) = Rational(static_cast<long>(m_lambda_character(parts[c], parts[r])));
  }
  const auto x = a.solve(b);
  if (!x) throw Error(Errc::NonIntegralSolution, "character matrix system inconsistent");
  ModuleDecomposition out(chi.size());
  for (std::size_t c = 0; c < p; ++c) {
    if ((*x)[c].get_den() != 1)
      throw Error(Errc::NonIntegralSolution, "coefficient of M" + parts[c].str() + " is " + (*x)[c].get_str());
    out.add(parts[c], (*x)[c].get_num().get_si());
  }
  return out;
}

ModuleDecomposition beta_formula(const HessenbergFunction& h) {
  if (!h.is_connected()) throw Error(Errc::NotConnected, "h(j) >= j+1 fails for h=" + h.str());
  const int n = h.size();
  const auto ls = l_set(h);
  const auto bottom = bottom_set(h);
  ModuleDecomposition out(n);
  for (int j = 1; j <= n - 2; ++j) {
    if (std::find(ls.begin(), ls.end(), j) != ls.end())
      out.add(Partition::from_composition({n - j, j}));
    else if (std::find(bottom.begin(), bottom.end(), j) != bottom.end())
      out.add(Partition::from_composition({n - 1, 1}));
    else
      out.add(Partition::from_composition({n}));
  }
  out.add(Partition::from_composition({n}));
  return out;
}

ModuleDecomposition h2d_decomposition_formula(const HessenbergFunction& h, int d) {
  const int n = h.size();
  if (d < 2) throw Error(Errc::PreconditionUnmet, "d >= 2 required");
  if (d > n - 1) throw Error(Errc::PreconditionUnmet, "d <= n-1 required");
  if (!h.has_gap(d)) throw Error(Errc::PreconditionUnmet, "h(j) >= j+" + std::to_string(d) + " fails for h=" + h.str());
  const auto lambda = static_cast<std::int64_t>(lambda_set(h, d).size());
  const std::int64_t m_d = flag_poincare(n).coefficient(d) - lambda;
  if (m_d <= 0) throw Error(Errc::PreconditionUnmet, "m_d = " + std::to_string(m_d) + " is not positive");
  ModuleDecomposition out(n);
  out.add(Partition::from_composition({n}), m_d);
  out.add(Partition::from_composition({n - 1, 1}), lambda);
  return out;
}

}  // namespace hessgkm

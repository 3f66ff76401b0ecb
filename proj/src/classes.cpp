#include "hessgkm/classes.hpp"

#include <algorithm>

#include "hessgkm/error.hpp"

namespace hessgkm {

EquivariantClass::EquivariantClass(int n, int degree, std::vector<Polynomial> values)
    : n_(n), degree_(degree), dense_(std::make_shared<const std::vector<Polynomial>>(std::move(values))) {
  if (static_cast<std::int64_t>(dense_->size()) != factorial(n))
    throw Error(Errc::SizeMismatch, "dense class needs n! values");
}

EquivariantClass::EquivariantClass(int n, int degree, Evaluator lazy)
    : n_(n), degree_(degree), lazy_(std::move(lazy)) {}

EquivariantClass EquivariantClass::from_function(int n, int degree, Evaluator f) {
  if (n > kDenseLimit) return EquivariantClass(n, degree, std::move(f));
  std::vector<Polynomial> values;
  for (const Permutation& w : enumerate_group(n, n)) values.push_back(f(w));
  return EquivariantClass(n, degree, std::move(values));
}

EquivariantClass EquivariantClass::constant(int n, const Polynomial& p, int degree) {
  return from_function(n, degree, [p](const Permutation&) { return p; });
}

Polynomial EquivariantClass::at(const Permutation& w) const {
  if (w.size() != n_) throw Error(Errc::SizeMismatch, "vertex size differs from class size");
  if (dense_) return (*dense_)[lex_rank(w)];
  return lazy_(w);
}

bool EquivariantClass::is_homogeneous() const {
  for (const Permutation& w : enumerate_group(n_, n_))
    if (!at(w).is_homogeneous(degree_)) return false;
  return true;
}

namespace {

void require_same_size(const EquivariantClass& a, const EquivariantClass& b) {
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "classes of different sizes");
}

}  // namespace

EquivariantClass EquivariantClass::operator-() const {
  EquivariantClass self = *this;
  return from_function(n_, degree_, [self](const Permutation& w) { return -self.at(w); });
}

EquivariantClass operator+(const EquivariantClass& a, const EquivariantClass& b) {
  require_same_size(a, b);
  return EquivariantClass::from_function(a.n_, a.degree_, [a, b](const Permutation& w) { return a.at(w) + b.at(w); });
}

EquivariantClass operator-(const EquivariantClass& a, const EquivariantClass& b) {
  require_same_size(a, b);
  return EquivariantClass::from_function(a.n_, a.degree_, [a, b](const Permutation& w) { return a.at(w) - b.at(w); });
}

EquivariantClass operator*(const EquivariantClass& a, const mpz_class& c) {
  return EquivariantClass::from_function(a.n_, a.degree_, [a, c](const Permutation& w) { return a.at(w) * c; });
}

EquivariantClass operator*(const EquivariantClass& a, const EquivariantClass& b) {
  require_same_size(a, b);
  return EquivariantClass::from_function(a.n_, a.degree_ + b.degree_,
                                         [a, b](const Permutation& w) { return a.at(w) * b.at(w); });
}

bool operator==(const EquivariantClass& a, const EquivariantClass& b) {
  if (a.n_ != b.n_) return false;
  if (a.dense_ && b.dense_) return *a.dense_ == *b.dense_;
  for (const Permutation& w : enumerate_group(a.n_, a.n_))
    if (a.at(w) != b.at(w)) return false;
  return true;
}

EquivariantClass zero_class(int n, int degree) { return EquivariantClass::constant(n, Polynomial(n), degree); }

namespace {

void require_index(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi)
    throw Error(Errc::IndexOutOfRange, std::string(what) + "=" + std::to_string(value) + " outside [" +
                                           std::to_string(lo) + "," + std::to_string(hi) + "]");
}

bool occurs_in(const Permutation& w, int k, int from, int to) {
  for (int p = from; p <= to; ++p)
    if (w(p) == k) return true;
  return false;
}

}  // namespace

EquivariantClass class_t(int n, int k) {
  require_index(k, 1, n, "k");
  return EquivariantClass::constant(n, Polynomial::variable(n, k), 1);
}

EquivariantClass class_x(int n, int i) {
  require_index(i, 1, n, "i");
  return EquivariantClass::from_function(n, 1, [n, i](const Permutation& w) { return Polynomial::variable(n, w(i)); });
}

EquivariantClass class_y(const HessenbergFunction& h, int j, int k) {
  const int n = h.size();
  require_index(j, 1, n, "j");
  require_index(k, 1, n, "k");
  const int top = h(j);
  return EquivariantClass::from_function(n, top - j, [n, j, k, top](const Permutation& w) {
    if (!occurs_in(w, k, 1, j)) return Polynomial(n);
    Polynomial p = Polynomial::constant(n, 1);
    for (int l = j + 1; l <= top; ++l) p = p * Polynomial::linear_difference(n, k, w(l));
    return p;
  });
}

EquivariantClass class_tau(const HessenbergFunction& h, const std::vector<int>& subset) {
  const int n = h.size();
  std::vector<int> a = subset;
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw Error(Errc::IndexOutOfRange, "repeated subset element");
  for (int x : a) require_index(x, 1, n, "subset element");
  const int j = static_cast<int>(a.size());
  const auto ls = l_set(h);
  if (std::find(ls.begin(), ls.end(), j) == ls.end())
    throw Error(Errc::InvalidCardinality, "|A|=" + std::to_string(j) + " is not in L(h)");
  return EquivariantClass::from_function(n, 1, [n, j, a](const Permutation& w) {
    std::vector<int> head(w.images().begin(), w.images().begin() + j);
    std::sort(head.begin(), head.end());
    if (head != a) return Polynomial(n);
    return Polynomial::linear_difference(n, w(j), w(j + 1));
  });
}

EquivariantClass class_y_star(const HessenbergFunction& h, int i, int k) {
  const int n = h.size();
  require_index(i, 2, n, "i");
  require_index(k, 1, n, "k");
  const int bottom = dual_function(h, i);
  return EquivariantClass::from_function(n, i - bottom, [n, i, k, bottom](const Permutation& w) {
    if (!occurs_in(w, k, i, n)) return Polynomial(n);
    Polynomial p = Polynomial::constant(n, 1);
    for (int l = bottom; l <= i - 1; ++l) p = p * Polynomial::linear_difference(n, k, w(l));
    return p;
  });
}

EquivariantClass dot_act(const Permutation& sigma, const EquivariantClass& f) {
  if (sigma.size() != f.size()) throw Error(Errc::SizeMismatch, "permutation and class sizes differ");
  const Permutation inv = sigma.inverse();
  return EquivariantClass::from_function(f.size(), f.degree(), [sigma, inv, f](const Permutation& w) {
    return permute_variables(sigma, f.at(inv * w));
  });
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int p = k - 1;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == n - k + p + 1) --p;
    if (p < 0) break;
    ++cur[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

std::vector<int> image_of_subset(const Permutation& sigma, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int a : subset) out.push_back(sigma(a));
  std::sort(out.begin(), out.end());
  return out;
}

bool RelationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

RelationReport verify_relation_suite(const HessenbergFunction& h) {
  if (!h.is_connected()) throw Error(Errc::PreconditionUnmet, "h(j) >= j+1 fails for h=" + h.str());
  const int n = h.size();
  RelationReport report;
  auto record = [&](std::string name, const EquivariantClass& lhs, const EquivariantClass& rhs) {
    RelationCheck c{std::move(name), lhs == rhs, ""};
    if (!c.passed) c.detail = "pointwise mismatch";
    report.checks.push_back(std::move(c));
  };
  auto one = EquivariantClass::constant(n, Polynomial::constant(n, 1), 0);

  {
    EquivariantClass lhs = zero_class(n, 1);
    Polynomial rhs(n);
    for (int i = 1; i <= n; ++i) {
      lhs = lhs + class_x(n, i);
      rhs += Polynomial::variable(n, i);
    }
    record("sum of x_i equals sum of t_i", lhs, EquivariantClass::constant(n, rhs, 1));
  }

  for (int j = 1; j <= n - 1; ++j) {
    if (h(j) != j + 1) continue;
    EquivariantClass lhs = zero_class(n, 1);
    for (int k = 1; k <= n; ++k) lhs = lhs + class_y(h, j, k);
    EquivariantClass rhs = class_x(n, j + 1) * mpz_class(-j);
    for (int i = 1; i <= j; ++i) rhs = rhs + class_x(n, i);
    record("sum_k y_{" + std::to_string(j) + ",k} = x_1+...+x_j - j*x_{j+1}", lhs, rhs);
  }

  for (int j : l_set(h)) {
    EquivariantClass lhs = zero_class(n, 1);
    for (const auto& a : subsets_of_size(n, j)) lhs = lhs + class_tau(h, a);
    record("sum_{|A|=" + std::to_string(j) + "} tau_A = x_j - x_{j+1}", lhs, class_x(n, j) - class_x(n, j + 1));
  }

  {
    const auto bottom = bottom_set(h);
    const int m = bottom.empty() ? 0 : bottom.back();
    for (int k = 1; k <= n; ++k) {
      EquivariantClass lhs = m == 0 ? zero_class(n, 1) : class_y(h, m, k);
      for (int size = m + 1; size <= n - 1; ++size)
        for (const auto& a : subsets_of_size(n, size))
          if (std::find(a.begin(), a.end(), k) != a.end()) lhs = lhs + class_tau(h, a);
      record("y_{m,k} + sum_{k in A, m<|A|<n} tau_A = t_k - x_n [m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                 "]",
             lhs, class_t(n, k) - class_x(n, n));
    }
  }

  for (int j = 1; j <= n; ++j) {
    const int d = h(j) - j;
    EquivariantClass lhs = zero_class(n, d);
    for (int k = 1; k <= n; ++k) lhs = lhs + class_y(h, j, k);
    EquivariantClass rhs = zero_class(n, d);
    for (int i = 1; i <= j; ++i) {
      EquivariantClass prod = one;
      for (int l = j + 1; l <= h(j); ++l) prod = prod * (class_x(n, i) - class_x(n, l));
      rhs = rhs + prod;
    }
    record("sum_k y_{" + std::to_string(j) + ",k} = sum_{i<=j} prod_l (x_i - x_l)", lhs, rhs);
  }

  for (int d = 1; d <= n - 1; ++d) {
    if (!h.has_gap(d)) continue;
    for (int j : lambda_set(h, d)) {
      for (int k = 1; k <= n; ++k) {
        EquivariantClass rhs = one;
        for (int l = j + 1; l <= j + d; ++l) rhs = rhs * (class_t(n, k) - class_x(n, l));
        record("y_{j,k} + y*_{j+1+d,k} = prod (t_k - x_l) [d=" + std::to_string(d) + ",j=" + std::to_string(j) +
                   ",k=" + std::to_string(k) + "]",
               class_y(h, j, k) + class_y_star(h, j + 1 + d, k), rhs);
      }
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const EquivariantClass& f) {
  nlohmann::ordered_json j;
  j["degree"] = f.degree();
  auto& values = j["values"] = nlohmann::ordered_json::object();
  for (const Permutation& w : enumerate_group(f.size(), f.size())) values[w.str()] = f.at(w).str();
  return j;
}

}  // namespace hessgkm

#include "hessgkm/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "hessgkm/error.hpp"

namespace hessgkm {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int var, int exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(var, exponent);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& exponents) {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > 0) m.factors_.emplace_back(static_cast<int>(i) + 1, exponents[i]);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : factors_)
    if (v == var) return e;
  return 0;
}

std::vector<int> Monomial::exponents(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (const auto& [v, e] : factors_) out[static_cast<std::size_t>(v - 1)] = e;
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin();
  auto ib = fb.begin();
  while (ia != fa.end() && ib != fb.end()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != fa.end() && ib == fb.end();
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  // Lexicographically decreasing exponent vectors: largest exponent on t_1 first.
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n - 1) {
      exps[static_cast<std::size_t>(var)] = remaining;
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(var)] = e;
      rec(var + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(var)] = 0;
  };
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(0, d);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(int n, const mpz_class& c) {
  Polynomial p(n);
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(int n, int k) {
  if (k < 1 || k > n) throw Error(Errc::IndexOutOfRange, "variable t" + std::to_string(k));
  Polynomial p(n);
  p.add_term(Monomial::variable(k), 1);
  return p;
}

Polynomial Polynomial::linear_difference(int n, int a, int b) {
  return variable(n, a) - variable(n, b);
}

Polynomial Polynomial::from_terms(int n, const std::vector<std::pair<Monomial, mpz_class>>& terms) {
  Polynomial p(n);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  if (m.max_variable() > n_) throw Error(Errc::IndexOutOfRange, "monomial variable beyond ambient size");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  n_ = std::max(n_, other.n_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  n_ = std::max(n_, other.n_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.n_, b.n_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s.push_back('*');
    s += "t" + std::to_string(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_str(m);
    if (mono.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += mono;
    } else {
      s += mag.get_str() + "*" + mono;
    }
  }
  return s;
}

Monomial substitute(const Monomial& m, int a, int b) {
  const int ea = m.exponent(a);
  if (ea == 0) return m;
  Monomial rest;
  for (const auto& [v, e] : m.factors())
    if (v != a) rest = rest * Monomial::variable(v, e);
  return rest * Monomial::variable(b, ea);
}

Polynomial substitute(const Polynomial& p, int a, int b) {
  const int n = p.ambient();
  if (a == b || a < 1 || b < 1 || a > n || b > n)
    throw Error(Errc::IndexOutOfRange, "substitute t" + std::to_string(a) + " -> t" + std::to_string(b));
  Polynomial r(n);
  for (const auto& [m, c] : p.terms()) r.add_term(substitute(m, a, b), c);
  return r;
}

bool divisible_by_linear(const Polynomial& p, int a, int b) {
  return substitute(p, a, b).is_zero();
}

Polynomial permute_variables(const Permutation& sigma, const Polynomial& p) {
  if (sigma.size() != p.ambient()) throw Error(Errc::SizeMismatch, "permutation and polynomial sizes differ");
  Polynomial r(p.ambient());
  for (const auto& [m, c] : p.terms()) {
    Monomial image;
    for (const auto& [v, e] : m.factors()) image = image * Monomial::variable(sigma(v), e);
    r.add_term(image, c);
  }
  return r;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"exponents", m.exponents(p.ambient())}, {"coefficient", c.get_str()}});
  return out;
}

Polynomial polynomial_from_json(int n, const nlohmann::json& j) {
  Polynomial p(n);
  for (const auto& term : j) {
    const auto exps = term.at("exponents").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != n) throw Error(Errc::SizeMismatch, "exponent vector length");
    p.add_term(Monomial::from_exponents(exps), mpz_class(term.at("coefficient").get<std::string>()));
  }
  return p;
}

Polynomial parse_polynomial(int n, const std::string& text) {
  Polynomial p(n);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::ParseError, "polynomial '" + text + "': " + why);
  };
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto read_int = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return text.substr(start, pos - start);
  };
  skip_spaces();
  if (text.substr(pos) == "0") return p;
  int sign = 1;
  bool first = true;
  while (true) {
    skip_spaces();
    if (pos >= text.size()) break;
    if (text[pos] == '-' || text[pos] == '+') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_spaces();
    } else if (!first) {
      fail("expected sign");
    }
    first = false;
    mpz_class coeff = 1;
    Monomial m;
    bool have_factor = false;
    while (true) {
      if (pos < text.size() && text[pos] == 't') {
        ++pos;
        const int var = std::stoi(read_int());
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = std::stoi(read_int());
        }
        m = m * Monomial::variable(var, e);
      } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (have_factor) fail("coefficient after variable");
        coeff = mpz_class(read_int());
      } else {
        fail("unexpected character");
      }
      have_factor = true;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    p.add_term(m, coeff * sign);
  }
  return p;
}

// ---------------------------------------------------------------------------
// PoincarePolynomial

PoincarePolynomial::PoincarePolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

PoincarePolynomial PoincarePolynomial::monomial(int k, std::int64_t c) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return PoincarePolynomial(std::move(v));
}

std::int64_t PoincarePolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::int64_t PoincarePolynomial::total() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

bool PoincarePolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

PoincarePolynomial PoincarePolynomial::truncated(int d) const {
  std::vector<std::int64_t> v = coeffs_;
  if (static_cast<int>(v.size()) > d + 1) v.resize(static_cast<std::size_t>(d) + 1);
  return PoincarePolynomial(std::move(v));
}

PoincarePolynomial& PoincarePolynomial::operator+=(const PoincarePolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return PoincarePolynomial();
  std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PoincarePolynomial(std::move(v));
}

std::string PoincarePolynomial::str() const {
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (k == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += "q";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

void PoincarePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace hessgkm

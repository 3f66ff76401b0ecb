#include "hessgkm/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hessgkm/error.hpp"

namespace hessgkm {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::NotWeaklyIncreasing: return "NotWeaklyIncreasing";
    case Errc::BelowDiagonal: return "BelowDiagonal";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InvalidCardinality: return "InvalidCardinality";
    case Errc::NotConnected: return "NotConnected";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NonIntegralSolution: return "NonIntegralSolution";
  }
  return "Unknown";
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string item;
  auto flush = [&] {
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::ParseError, "empty list entry in '" + std::string(text) + "'");
    std::string trimmed = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(trimmed, &used);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "not an integer: '" + trimmed + "'");
    }
    if (used != trimmed.size()) throw Error(Errc::ParseError, "not an integer: '" + trimmed + "'");
    out.push_back(value);
    item.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      item.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw Error(Errc::OutOfRange, "not a permutation of [" + std::to_string(n) + "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return Permutation(parse_int_list(text));
  std::vector<int> v;
  for (char c : text) {
    if (c < '1' || c > '9') throw Error(Errc::ParseError, "bad permutation digit in '" + std::string(text) + "'");
    v.push_back(c - '0');
  }
  if (v.empty()) throw Error(Errc::ParseError, "empty permutation");
  try {
    return Permutation(std::move(v));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw Error(Errc::SizeMismatch, "composing permutations of different sizes");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = images_[static_cast<std::size_t>(other.images_[i] - 1)];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

Permutation Permutation::swapped(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size()) throw Error(Errc::IndexOutOfRange, "transposition index");
  Permutation r = *this;
  std::swap(r.images_[static_cast<std::size_t>(i - 1)], r.images_[static_cast<std::size_t>(j - 1)]);
  return r;
}

std::string Permutation::str() const {
  std::string s;
  if (size() <= 9) {
    for (int v : images_) s.push_back(static_cast<char>('0' + v));
    return s;
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(images_[i]);
  }
  return s;
}

std::size_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::size_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int k = i + 1; k <= n; ++k)
      if (w(k) < w(i)) ++smaller_after;
    rank = rank * static_cast<std::size_t>(n - i + 1) + static_cast<std::size_t>(smaller_after);
  }
  return rank;
}

Permutation lex_unrank(int n, std::size_t rank) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const auto base = static_cast<std::size_t>(n - i + 1);
    digits[static_cast<std::size_t>(i - 1)] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  for (int d : digits) {
    images.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + d);
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> enumerate_group(int n, int cap) {
  if (n < 1) throw Error(Errc::OutOfRange, "group size must be positive");
  if (n > cap) throw Error(Errc::CapExceeded, "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int inversions(const Permutation& w) {
  int count = 0;
  for (int j = 1; j <= w.size(); ++j)
    for (int i = j + 1; i <= w.size(); ++i)
      if (w(j) > w(i)) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// HessenbergFunction

HessenbergFunction HessenbergFunction::validate(std::vector<int> values) {
  if (values.empty()) throw Error(Errc::OutOfRange, "empty Hessenberg function");
  const int n = static_cast<int>(values.size());
  for (int j = 1; j <= n; ++j) {
    const int v = values[static_cast<std::size_t>(j - 1)];
    if (j > 1 && v < values[static_cast<std::size_t>(j - 2)])
      throw Error(Errc::NotWeaklyIncreasing, "h(" + std::to_string(j) + ") < h(" + std::to_string(j - 1) + ")");
    if (v < j) throw Error(Errc::BelowDiagonal, "h(" + std::to_string(j) + ") < " + std::to_string(j));
    if (v > n) throw Error(Errc::OutOfRange, "h(" + std::to_string(j) + ") > " + std::to_string(n));
  }
  return HessenbergFunction(std::move(values));
}

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
  return validate(parse_int_list(text));
}

int HessenbergFunction::operator()(int j) const {
  if (j == 0) return 1;
  if (j < 0 || j > size()) throw Error(Errc::IndexOutOfRange, "h(" + std::to_string(j) + ")");
  return values_[static_cast<std::size_t>(j - 1)];
}

bool HessenbergFunction::has_gap(int d) const {
  for (int j = 1; j <= size() - d; ++j)
    if ((*this)(j) < j + d) return false;
  return true;
}

std::string HessenbergFunction::str() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(values_[i]);
  }
  return s;
}

HessenbergFunction reduce(const HessenbergFunction& h, int j) {
  const int n = h.size();
  if (j < 1 || j > n) throw Error(Errc::IndexOutOfRange, "reduce index " + std::to_string(j));
  if (n == 1) throw Error(Errc::IndexOutOfRange, "cannot reduce a size-1 function");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    if (i < j)
      out.push_back(h(i) < j ? h(i) : h(i) - 1);
    else
      out.push_back(h(i + 1) - 1);
  }
  return HessenbergFunction::validate(std::move(out));
}

int dual_function(const HessenbergFunction& h, int i) {
  if (i <= 1 || i > h.size()) throw Error(Errc::IndexOutOfRange, "h*(" + std::to_string(i) + ")");
  for (int j = 1; j <= h.size(); ++j)
    if (h(j) >= i) return j;
  return h.size();  // unreachable: h(n) = n >= i
}

std::vector<int> bottom_set(const HessenbergFunction& h) {
  std::vector<int> out;
  for (int j = 1; j <= h.size() - 1; ++j)
    if (h(j - 1) == j + 1 && h(j) == j + 1) out.push_back(j);
  return out;
}

std::vector<int> l_set(const HessenbergFunction& h) {
  std::vector<int> out;
  for (int j = 1; j <= h.size() - 1; ++j)
    if (h(j - 1) == j && h(j) == j + 1) out.push_back(j);
  return out;
}

std::vector<int> lambda_set(const HessenbergFunction& h, int d) {
  if (d < 1) throw Error(Errc::OutOfRange, "d must be positive");
  std::vector<int> out;
  const int n = h.size();
  for (int j = 1; j <= n - d; ++j)
    if (h(j) == j + d && h(j) < n) out.push_back(j);
  return out;
}

std::vector<int> lambda_star_set(const HessenbergFunction& h, int d) {
  if (d < 1) throw Error(Errc::OutOfRange, "d must be positive");
  std::vector<int> out;
  for (int i = d + 2; i <= h.size(); ++i)
    if (dual_function(h, i) == i - d) out.push_back(i);
  return out;
}

int h_inversions(const HessenbergFunction& h, const Permutation& w) {
  if (h.size() != w.size()) throw Error(Errc::SizeMismatch, "h and w have different sizes");
  int count = 0;
  for (int j = 1; j <= w.size(); ++j)
    for (int i = j + 1; i <= h(j); ++i)
      if (w(j) > w(i)) ++count;
  return count;
}

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int j) {
    if (j > n) {
      out.push_back(HessenbergFunction::validate(cur));
      return;
    }
    const int lo = std::max(j, cur.empty() ? 1 : cur.back());
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// ---------------------------------------------------------------------------
// Partition

Partition Partition::from_composition(std::vector<int> parts) {
  Partition p;
  for (int x : parts) {
    if (x < 0) throw Error(Errc::OutOfRange, "negative part");
    if (x > 0) p.parts_.push_back(x);
  }
  std::sort(p.parts_.begin(), p.parts_.end(), std::greater<>());
  return p;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition::from_composition(cur));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace hessgkm

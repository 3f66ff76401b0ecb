#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hessgkm {

inline constexpr int kDefaultCapN = 8;

std::int64_t factorial(int n);
std::int64_t binomial(int n, int k);

/// Element of S_n in one-line notation. All indices and values are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Digit string ("321") or comma list ("10,2,...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  /// Composition, (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  /// Right multiplication by the transposition (i,j): swaps positions i and j.
  Permutation swapped(int i, int j) const;

  /// Digits for n <= 9, comma list otherwise.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Position of w in the lexicographic ordering of S_n, starting at 0.
std::size_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::size_t rank);

/// All of S_n in lexicographic one-line order.
std::vector<Permutation> enumerate_group(int n, int cap = kDefaultCapN);

int inversions(const Permutation& w);

/// Weakly increasing h : [n] -> [n] with h(j) >= j.
class HessenbergFunction {
 public:
  /// Throws NotWeaklyIncreasing, BelowDiagonal or OutOfRange.
  static HessenbergFunction validate(std::vector<int> values);
  /// Parses "3,3,4,5,5".
  static HessenbergFunction parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  /// Total on 0..n with h(0) = 1.
  int operator()(int j) const;
  std::span<const int> values() const { return values_; }

  /// h(j) >= j + d for every j in [n - d].
  bool has_gap(int d) const;
  /// h(j) >= j + 1 for every j in [n - 1].
  bool is_connected() const { return has_gap(1); }

  std::string str() const;

  friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;
  friend auto operator<=>(const HessenbergFunction&, const HessenbergFunction&) = default;

 private:
  explicit HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

/// Removes row j and column j from the box configuration of h.
HessenbergFunction reduce(const HessenbergFunction& h, int j);

/// h*(i) = min{ j : h(j) >= i }, for 1 < i <= n.
int dual_function(const HessenbergFunction& h, int i);

/// { j in [n-1] : h(j-1) = h(j) = j+1 }.
std::vector<int> bottom_set(const HessenbergFunction& h);
/// { j in [n-1] : h(j-1) = j, h(j) = j+1 }.
std::vector<int> l_set(const HessenbergFunction& h);
/// { j in [n-d] : h(j) = j+d < n }.
std::vector<int> lambda_set(const HessenbergFunction& h, int d);
/// { i : d+2 <= i <= n, h*(i) = i-d }.
std::vector<int> lambda_star_set(const HessenbergFunction& h, int d);

/// Number of pairs j < i <= h(j) with w(j) > w(i).
int h_inversions(const HessenbergFunction& h, const Permutation& w);

/// All Hessenberg functions of size n in lexicographic order.
std::vector<HessenbergFunction> enumerate_hessenberg(int n);

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts any composition into a partition; zero parts are dropped.
  static Partition from_composition(std::vector<int> parts);

  int size() const;
  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// "(7,1)".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(int n);

}  // namespace hessgkm

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hessgkm/combinatorics.hpp"
#include "hessgkm/symbolic.hpp"

namespace hessgkm {

/// Classes with n at most this are stored densely; larger ones evaluate per vertex.
inline constexpr int kDenseLimit = 6;

/// A map S_n -> Z[t_1..t_n] whose values are homogeneous of one degree.
class EquivariantClass {
 public:
  using Evaluator = std::function<Polynomial(const Permutation&)>;

  /// Values indexed by lexicographic rank.
  EquivariantClass(int n, int degree, std::vector<Polynomial> values);
  /// Dense when n <= kDenseLimit, otherwise keeps the evaluator.
  static EquivariantClass from_function(int n, int degree, Evaluator f);
  static EquivariantClass constant(int n, const Polynomial& p, int degree);

  int size() const { return n_; }
  int degree() const { return degree_; }
  bool is_dense() const { return dense_ != nullptr; }

  Polynomial at(const Permutation& w) const;
  /// Every value homogeneous of degree(); evaluates all vertices.
  bool is_homogeneous() const;

  EquivariantClass operator-() const;
  friend EquivariantClass operator+(const EquivariantClass& a, const EquivariantClass& b);
  friend EquivariantClass operator-(const EquivariantClass& a, const EquivariantClass& b);
  friend EquivariantClass operator*(const EquivariantClass& a, const mpz_class& c);
  /// Pointwise product; degrees add.
  friend EquivariantClass operator*(const EquivariantClass& a, const EquivariantClass& b);

  /// Pointwise equality over all of S_n.
  friend bool operator==(const EquivariantClass& a, const EquivariantClass& b);

 private:
  EquivariantClass(int n, int degree, Evaluator lazy);

  int n_ = 0;
  int degree_ = 0;
  std::shared_ptr<const std::vector<Polynomial>> dense_;
  Evaluator lazy_;
};

/// The zero class of the given degree.
EquivariantClass zero_class(int n, int degree);

/// Constant class w -> t_k.
EquivariantClass class_t(int n, int k);
/// x_i(w) = t_{w(i)}.
EquivariantClass class_x(int n, int i);
/// y_{j,k}(w) = prod_{l=j+1}^{h(j)} (t_k - t_{w(l)}) if k in {w(1..j)}, else 0. Degree h(j) - j.
EquivariantClass class_y(const HessenbergFunction& h, int j, int k);
/// tau_A(w) = t_{w(j)} - t_{w(j+1)} if {w(1..j)} = A with j = |A|, else 0. Requires |A| in L(h).
EquivariantClass class_tau(const HessenbergFunction& h, const std::vector<int>& subset);
/// y*_{i,k}(w) = prod_{l=h*(i)}^{i-1} (t_k - t_{w(l)}) if k in {w(i..n)}, else 0.
EquivariantClass class_y_star(const HessenbergFunction& h, int i, int k);

/// (sigma . f)(w) = sigma(f(sigma^{-1} w)).
EquivariantClass dot_act(const Permutation& sigma, const EquivariantClass& f);

/// All k-subsets of [n] in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);
/// sigma(A), sorted.
std::vector<int> image_of_subset(const Permutation& sigma, const std::vector<int>& subset);

struct RelationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_passed() const;
};

/// Checks the linear relations among x, y, tau and y* pointwise on S_n.
/// Throws PreconditionUnmet unless h(j) >= j+1 on [n-1].
RelationReport verify_relation_suite(const HessenbergFunction& h);

/// {"degree": d, "values": {"123": "...", ...}} in lexicographic vertex order.
nlohmann::ordered_json to_json(const EquivariantClass& f);

}  // namespace hessgkm

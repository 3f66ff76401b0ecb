#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hessgkm/cohomology.hpp"
#include "hessgkm/combinatorics.hpp"
#include "hessgkm/linalg.hpp"

namespace hessgkm {

/// Cycle lengths of sigma, decreasing.
Partition cycle_type(const Permutation& sigma);

/// Cycles in decreasing length on consecutive integers: (3,1) -> (1 2 3)(4) = 2314.
Permutation cycle_type_representative(const Partition& mu);

/// Number of cosets of the Young subgroup S_lambda fixed by an element of cycle type mu.
std::int64_t m_lambda_character(const Partition& lambda, const Partition& mu);

/// n! / prod lambda_i!.
std::int64_t m_lambda_dimension(const Partition& lambda);

/// Rational-valued function on the partitions of n.
class ClassFunction {
 public:
  explicit ClassFunction(int n);

  int size() const { return n_; }
  const Rational& at(const Partition& mu) const;
  void set(const Partition& mu, Rational value);
  const std::map<Partition, Rational>& values() const { return values_; }
  bool is_integral() const;

  /// Character of M^lambda.
  static ClassFunction permutation_character(const Partition& lambda);
  static ClassFunction constant(int n, const Rational& c);

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_;
  std::map<Partition, Rational> values_;
};

/// Multiplicities of permutation modules M^lambda.
class ModuleDecomposition {
 public:
  ModuleDecomposition() = default;
  explicit ModuleDecomposition(int n) : n_(n) {}

  int size() const { return n_; }
  /// Adds c copies of M^lambda, zero results are dropped.
  void add(const Partition& lambda, std::int64_t c = 1);
  std::int64_t multiplicity(const Partition& lambda) const;
  const std::map<Partition, std::int64_t, std::greater<>>& multiplicities() const { return mult_; }
  bool all_nonnegative() const;
  /// Sum of c_lambda dim M^lambda.
  std::int64_t dimension() const;

  /// "3*M(8) + 2*M(7,1)"; "0" when empty.
  std::string str() const;
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const ModuleDecomposition&, const ModuleDecomposition&) = default;

 private:
  int n_ = 0;
  std::map<Partition, std::int64_t, std::greater<>> mult_;
};

/// Character of the dot action on the degree-2d piece of ordinary cohomology.
/// Throws NotConnected, BudgetExceeded.
ClassFunction dot_action_character(const HessenbergFunction& h, int d, const LinearAlgebraBudget& budget = {},
                                   int jobs = 1);

/// Unique c with chi = sum c_lambda chi_{M^lambda}. Throws NonIntegralSolution.
ModuleDecomposition decompose(const ClassFunction& chi);

/// sum_{j=1}^{n-2} M^{beta_j} + M^{(n)}. Throws NotConnected.
ModuleDecomposition beta_formula(const HessenbergFunction& h);

/// m_d M^{(n)} + |Λ_d| M^{(n-1,1)}, m_d = b_{2d}(flag) - |Λ_d|. Throws PreconditionUnmet.
ModuleDecomposition h2d_decomposition_formula(const HessenbergFunction& h, int d);

}  // namespace hessgkm

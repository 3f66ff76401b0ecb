#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hessgkm/classes.hpp"
#include "hessgkm/gkm.hpp"
#include "hessgkm/linalg.hpp"

namespace hessgkm {

inline constexpr std::size_t kDefaultLinearAlgebraBudget = 10'000'000;

struct LinearAlgebraBudget {
  /// Ceiling on (constraint rows) x (unknowns) for one congruence system.
  std::size_t max_entries = kDefaultLinearAlgebraBudget;
};

/// Coordinates of maps S_n -> (degree-d forms): index = vertex rank * #monomials + monomial index.
class CoordinateSpace {
 public:
  CoordinateSpace(int n, int degree);

  int size() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t dimension() const { return vertices_.size() * monomials_.size(); }
  std::size_t monomial_index(const Monomial& m) const;

  /// Throws SizeMismatch for the wrong n and PreconditionUnmet for non-homogeneous values.
  SparseVector coordinates(const EquivariantClass& f) const;
  /// Scales by the common denominator so the class has integer coefficients.
  EquivariantClass to_class(const SparseVector& v) const;
  /// Coordinates of sigma . f.
  SparseVector act(const Permutation& sigma, const SparseVector& v) const;

 private:
  int n_;
  int degree_;
  std::vector<Permutation> vertices_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GrlexGreater> index_;
};

/// Number of entries of the congruence system for Γ(h) in polynomial degree d.
std::size_t congruence_system_entries(const HessenbergFunction& h, int d);

/// Degree-d graded piece of the graph cohomology of Γ(h) with a rational basis.
class GraphCohomologyPiece {
 public:
  GraphCohomologyPiece(std::shared_ptr<const LabeledGraph> graph, int degree, std::vector<SparseVector> basis);

  const LabeledGraph& graph() const { return *graph_; }
  const CoordinateSpace& space() const { return space_; }
  int degree() const { return space_.degree(); }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  EquivariantClass basis_class(std::size_t i) const { return space_.to_class(basis_[i]); }

 private:
  std::shared_ptr<const LabeledGraph> graph_;
  CoordinateSpace space_;
  std::vector<SparseVector> basis_;
};

/// Solves the edge congruences exactly. Throws BudgetExceeded.
GraphCohomologyPiece graph_cohomology_basis(std::shared_ptr<const LabeledGraph> graph, int d,
                                            const LinearAlgebraBudget& budget = {});

/// Degree-d piece of the ordinary cohomology: graph cohomology modulo the ideal (t_1..t_n).
class OrdinaryCohomologyPiece {
 public:
  OrdinaryCohomologyPiece(GraphCohomologyPiece top, EchelonBasis ideal, EchelonBasis quotient)
      : top_(std::move(top)), ideal_(std::move(ideal)), quotient_(std::move(quotient)) {}

  const GraphCohomologyPiece& top() const { return top_; }
  std::size_t ideal_dimension() const { return ideal_.rank(); }
  std::size_t dimension() const { return quotient_.rank(); }
  /// Trace of the dot action of sigma on the quotient.
  Rational trace(const Permutation& sigma) const;

 private:
  GraphCohomologyPiece top_;
  EchelonBasis ideal_;
  EchelonBasis quotient_;
};

OrdinaryCohomologyPiece ordinary_cohomology_piece(const HessenbergFunction& h, int d,
                                                  const LinearAlgebraBudget& budget = {});

/// dim of degree-1 graph cohomology minus n. Throws NotConnected, BudgetExceeded.
std::int64_t h2_rank(const HessenbergFunction& h, const LinearAlgebraBudget& budget = {});

struct Generator {
  enum class Kind { X, Y, T, F };
  Kind kind = Kind::X;
  int i = 0;
  int j = 0;
  int k = 0;
  std::vector<int> subset;

  std::string label() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct CohomologyPresentation {
  std::vector<Generator> generators;
  /// Integer coefficient vectors over generators.
  std::vector<std::vector<std::int64_t>> relations;
  std::vector<std::string> relation_notes;
  std::size_t relation_rank = 0;
  std::int64_t rank = 0;
};

nlohmann::ordered_json to_json(const CohomologyPresentation& p);

/// Generators X_i, Y_{j,k}, T_A modulo the three relation families. Throws NotConnected.
CohomologyPresentation h2_presentation(const HessenbergFunction& h);

/// Flag part (F generators, b_{2d}(flag) of them) plus Y_{j,k} for j in Λ_d(h),
/// modulo sum_k Y_{j,k} - y_j. The F component of each relation is the flag class y_j and
/// is recorded in relation_notes. Throws PreconditionUnmet.
CohomologyPresentation h2d_presentation(const HessenbergFunction& h, int d);

/// The class a presentation generator maps to (X, Y, T only).
EquivariantClass realize(const HessenbergFunction& h, const Generator& g);

struct RealizationReport {
  std::int64_t presentation_rank = 0;
  std::size_t graph_dimension = 0;
  std::int64_t quotient_dimension = 0;
  std::int64_t realized_rank = 0;
  bool generators_in_graph_cohomology = false;
  bool relations_vanish = false;
  bool ok() const {
    return generators_in_graph_cohomology && relations_vanish && presentation_rank == quotient_dimension &&
           realized_rank == quotient_dimension;
  }
};

/// Checks the degree-2 presentation against the congruence solution space.
RealizationReport verify_h2_realization(const HessenbergFunction& h, const LinearAlgebraBudget& budget = {});

struct SpanReport {
  int degree = 0;
  std::size_t generator_count = 0;
  std::size_t expected_dimension = 0;
  std::size_t generated_dimension = 0;
  bool all_in_space = false;
  bool spans() const { return all_in_space && generated_dimension == expected_dimension; }
};

/// d = 1: t_i, x_i, y_{j,k} (j in bottom set), tau_A span degree 1.
/// d >= 2: degree-d monomials in t_i, x_i plus y_{j,k} (j in Λ_d) span degree d.
SpanReport span_check(const HessenbergFunction& h, int d, const LinearAlgebraBudget& budget = {});

}  // namespace hessgkm

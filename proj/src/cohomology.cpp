#include "hessgkm/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "hessgkm/betti.hpp"
#include "hessgkm/error.hpp"

namespace hessgkm {

// ---------------------------------------------------------------------------
// CoordinateSpace

CoordinateSpace::CoordinateSpace(int n, int degree)
    : n_(n), degree_(degree), vertices_(enumerate_group(n, n)), monomials_(monomials_of_degree(n, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t CoordinateSpace::monomial_index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw Error(Errc::PreconditionUnmet, "monomial of the wrong degree");
  return it->second;
}

SparseVector CoordinateSpace::coordinates(const EquivariantClass& f) const {
  if (f.size() != n_) throw Error(Errc::SizeMismatch, "class size differs from coordinate space");
  const std::size_t m = monomials_.size();
  SparseVector out;
  for (std::size_t r = 0; r < vertices_.size(); ++r) {
    const Polynomial p = f.at(vertices_[r]);
    if (!p.is_homogeneous(degree_))
      throw Error(Errc::PreconditionUnmet, "value at " + vertices_[r].str() + " is not of degree " + std::to_string(degree_));
    std::vector<std::pair<std::size_t, Rational>> local;
    for (const auto& [mono, c] : p.terms()) local.emplace_back(r * m + monomial_index(mono), Rational(c));
    std::sort(local.begin(), local.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& e : local) out.push_back(std::move(e));
  }
  return out;
}

EquivariantClass CoordinateSpace::to_class(const SparseVector& v) const {
  const mpz_class scale = common_denominator(v);
  const std::size_t m = monomials_.size();
  std::vector<Polynomial> values(vertices_.size(), Polynomial(n_));
  for (const auto& [idx, x] : v) {
    const Rational scaled = x * scale;
    values[idx / m].add_term(monomials_[idx % m], scaled.get_num());
  }
  return EquivariantClass(n_, degree_, std::move(values));
}

SparseVector CoordinateSpace::act(const Permutation& sigma, const SparseVector& v) const {
  if (sigma.size() != n_) throw Error(Errc::SizeMismatch, "permutation size differs from coordinate space");
  const std::size_t m = monomials_.size();
  std::vector<std::size_t> mono_image(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n_), 0);
    for (const auto& [var, exp] : monomials_[i].factors()) e[static_cast<std::size_t>(sigma(var) - 1)] = exp;
    mono_image[i] = monomial_index(Monomial::from_exponents(e));
  }
  SparseVector out;
  out.reserve(v.size());
  std::size_t last_vertex = std::numeric_limits<std::size_t>::max();
  std::size_t image_vertex = 0;
  for (const auto& [idx, x] : v) {
    const std::size_t r = idx / m;
    if (r != last_vertex) {
      image_vertex = lex_rank(sigma * vertices_[r]);
      last_vertex = r;
    }
    out.emplace_back(image_vertex * m + mono_image[idx % m], x);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// Congruence systems

std::size_t congruence_system_entries(const HessenbergFunction& h, int d) {
  const int n = h.size();
  long double directions = 0;
  for (int j = 1; j <= n; ++j) directions += h(j) - j;
  const long double group = std::tgamma(static_cast<long double>(n) + 1);
  const long double edges = group * directions / 2;
  const long double rows = edges * static_cast<long double>(n > 1 ? binomial(n + d - 2, d) : 0);
  const long double cols = group * static_cast<long double>(binomial(n + d - 1, d));
  const long double entries = rows * cols;
  if (entries >= static_cast<long double>(std::numeric_limits<std::size_t>::max()))
    return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::llround(entries));
}

namespace {

void check_budget(const HessenbergFunction& h, int d, const LinearAlgebraBudget& budget) {
  const std::size_t entries = congruence_system_entries(h, d);
  if (entries > budget.max_entries)
    throw Error(Errc::BudgetExceeded, "degree-" + std::to_string(d) + " system for h=" + h.str() + " has " +
                                          std::to_string(entries) + " entries, budget " +
                                          std::to_string(budget.max_entries));
}

// For t_a -> t_b: the class index of each monomial after substitution, and the class count.
struct SubstitutionClasses {
  std::vector<std::size_t> target;
  std::size_t count = 0;
};

SubstitutionClasses substitution_classes(const std::vector<Monomial>& monomials, int a, int b) {
  SubstitutionClasses out;
  std::map<Monomial, std::size_t, GrlexGreater> seen;
  for (const Monomial& m : monomials) {
    auto [it, inserted] = seen.emplace(substitute(m, a, b), seen.size());
    out.target.push_back(it->second);
  }
  out.count = seen.size();
  return out;
}

}  // namespace

GraphCohomologyPiece::GraphCohomologyPiece(std::shared_ptr<const LabeledGraph> graph, int degree,
                                           std::vector<SparseVector> basis)
    : graph_(std::move(graph)), space_(graph_->size(), degree), basis_(std::move(basis)) {}

GraphCohomologyPiece graph_cohomology_basis(std::shared_ptr<const LabeledGraph> graph, int d,
                                            const LinearAlgebraBudget& budget) {
  if (d < 0) throw Error(Errc::OutOfRange, "negative degree");
  const LabeledGraph& g = *graph;
  const int n = g.size();
  check_budget(g.hessenberg(), d, budget);

  const CoordinateSpace space(n, d);
  const std::size_t m = space.monomials().size();
  std::map<std::pair<int, int>, SubstitutionClasses> classes;
  EchelonBasis constraints(space.dimension());
  for (const Edge& e : g.edges()) {
    const Permutation& w = g.vertices()[e.w];
    const int a = w(e.i);
    const int b = w(e.j);
    auto it = classes.find({a, b});
    if (it == classes.end()) it = classes.emplace(std::pair{a, b}, substitution_classes(space.monomials(), a, b)).first;
    const SubstitutionClasses& sc = it->second;
    std::vector<SparseVector> rows(sc.count);
    for (std::size_t mi = 0; mi < m; ++mi) {
      auto& row = rows[sc.target[mi]];
      row.emplace_back(e.w * m + mi, Rational(-1));
      row.emplace_back(e.v * m + mi, Rational(1));
    }
    for (auto& row : rows) {
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      constraints.insert(row);
    }
  }
  return GraphCohomologyPiece(std::move(graph), d, constraints.kernel());
}

// ---------------------------------------------------------------------------
// Ordinary cohomology

Rational OrdinaryCohomologyPiece::trace(const Permutation& sigma) const {
  const CoordinateSpace& space = top_.space();
  Rational tr = 0;
  const auto& rows = quotient_.rows();
  const auto& pivots = quotient_.pivots();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SparseVector image = ideal_.reduce(space.act(sigma, rows[i]));
    auto it = std::lower_bound(image.begin(), image.end(), pivots[i],
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != image.end() && it->first == pivots[i]) tr += it->second;
  }
  return tr;
}

OrdinaryCohomologyPiece ordinary_cohomology_piece(const HessenbergFunction& h, int d,
                                                  const LinearAlgebraBudget& budget) {
  check_budget(h, d, budget);
  auto graph = std::make_shared<const LabeledGraph>(build_graph(h, h.size()));
  GraphCohomologyPiece top = graph_cohomology_basis(graph, d, budget);
  const CoordinateSpace& space = top.space();
  const std::size_t m = space.monomials().size();
  const int n = h.size();

  EchelonBasis ideal(space.dimension());
  if (d > 0) {
    const GraphCohomologyPiece lower = graph_cohomology_basis(graph, d - 1, budget);
    const CoordinateSpace& low = lower.space();
    const std::size_t lm = low.monomials().size();
    for (int k = 1; k <= n; ++k) {
      const Monomial tk = Monomial::variable(k);
      std::vector<std::size_t> shift(lm);
      for (std::size_t i = 0; i < lm; ++i) shift[i] = space.monomial_index(low.monomials()[i] * tk);
      for (const SparseVector& b : lower.basis()) {
        SparseVector v;
        v.reserve(b.size());
        for (const auto& [idx, x] : b) v.emplace_back((idx / lm) * m + shift[idx % lm], x);
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        ideal.insert(v);
      }
    }
  }
  EchelonBasis quotient(space.dimension());
  for (const SparseVector& b : top.basis()) quotient.insert(ideal.reduce(b));
  return OrdinaryCohomologyPiece(std::move(top), std::move(ideal), std::move(quotient));
}

std::int64_t h2_rank(const HessenbergFunction& h, const LinearAlgebraBudget& budget) {
  if (!h.is_connected()) throw Error(Errc::NotConnected, "h(j) >= j+1 fails for h=" + h.str());
  check_budget(h, 1, budget);
  auto graph = std::make_shared<const LabeledGraph>(build_graph(h, h.size()));
  return static_cast<std::int64_t>(graph_cohomology_basis(graph, 1, budget).dimension()) - h.size();
}

// ---------------------------------------------------------------------------
// Presentations

std::string Generator::label() const {
  switch (kind) {
    case Kind::X:
      return "X_" + std::to_string(i);
    case Kind::Y:
      return "Y_{" + std::to_string(j) + "," + std::to_string(k) + "}";
    case Kind::T: {
      std::string s = "T_{";
      for (std::size_t a = 0; a < subset.size(); ++a) s += (a ? "," : "") + std::to_string(subset[a]);
      return s + "}";
    }
    case Kind::F:
      return "F_" + std::to_string(i);
  }
  return {};
}

nlohmann::ordered_json to_json(const CohomologyPresentation& p) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const Generator& g : p.generators) {
    nlohmann::ordered_json e;
    switch (g.kind) {
      case Generator::Kind::X:
        e["kind"] = "X";
        e["i"] = g.i;
        break;
      case Generator::Kind::Y:
        e["kind"] = "Y";
        e["j"] = g.j;
        e["k"] = g.k;
        break;
      case Generator::Kind::T:
        e["kind"] = "T";
        e["A"] = g.subset;
        break;
      case Generator::Kind::F:
        e["kind"] = "F";
        e["i"] = g.i;
        break;
    }
    gens.push_back(std::move(e));
  }
  nlohmann::ordered_json out;
  out["generators"] = std::move(gens);
  out["relations"] = p.relations;
  if (!p.relation_notes.empty()) out["relation_notes"] = p.relation_notes;
  out["rank"] = p.rank;
  return out;
}

namespace {

std::size_t relation_rank(const std::vector<std::vector<std::int64_t>>& relations, std::size_t cols) {
  RationalMatrix m(relations.size(), cols);
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(static_cast<long>(relations[r][c]));
  return m.rank();
}

}  // namespace

CohomologyPresentation h2_presentation(const HessenbergFunction& h) {
  if (!h.is_connected()) throw Error(Errc::NotConnected, "h(j) >= j+1 fails for h=" + h.str());
  const int n = h.size();
  CohomologyPresentation p;
  for (int i = 1; i <= n; ++i) p.generators.push_back({Generator::Kind::X, i, 0, 0, {}});

  std::vector<int> bottom;
  for (int j : bottom_set(h))
    if (j != n - 1) bottom.push_back(j);
  std::vector<int> ls;
  for (int j : l_set(h))
    if (j != n - 1) ls.push_back(j);

  std::map<int, std::size_t> y_start;
  for (int j : bottom) {
    y_start[j] = p.generators.size();
    for (int k = 1; k <= n; ++k) p.generators.push_back({Generator::Kind::Y, 0, j, k, {}});
  }
  std::map<int, std::vector<std::size_t>> t_slots;
  for (int j : ls) {
    for (auto& a : subsets_of_size(n, j)) {
      t_slots[j].push_back(p.generators.size());
      p.generators.push_back({Generator::Kind::T, 0, j, 0, std::move(a)});
    }
  }

  const std::size_t g = p.generators.size();
  auto x_slot = [](int i) { return static_cast<std::size_t>(i - 1); };
  {
    std::vector<std::int64_t> r(g, 0);
    for (int i = 1; i <= n; ++i) r[x_slot(i)] = 1;
    p.relations.push_back(std::move(r));
  }
  for (int j : bottom) {
    std::vector<std::int64_t> r(g, 0);
    for (int k = 0; k < n; ++k) r[y_start[j] + static_cast<std::size_t>(k)] = 1;
    for (int i = 1; i <= j; ++i) r[x_slot(i)] -= 1;
    r[x_slot(j + 1)] += j;
    p.relations.push_back(std::move(r));
  }
  for (int j : ls) {
    std::vector<std::int64_t> r(g, 0);
    for (std::size_t s : t_slots[j]) r[s] = 1;
    r[x_slot(j)] -= 1;
    r[x_slot(j + 1)] += 1;
    p.relations.push_back(std::move(r));
  }
  p.relation_rank = relation_rank(p.relations, g);
  p.rank = static_cast<std::int64_t>(g) - static_cast<std::int64_t>(p.relation_rank);
  return p;
}

CohomologyPresentation h2d_presentation(const HessenbergFunction& h, int d) {
  const int n = h.size();
  if (d < 2) throw Error(Errc::PreconditionUnmet, "d >= 2 required");
  if (d > n - 1) throw Error(Errc::PreconditionUnmet, "d <= n-1 required");
  if (!h.has_gap(d)) throw Error(Errc::PreconditionUnmet, "h(j) >= j+" + std::to_string(d) + " fails for h=" + h.str());
  CohomologyPresentation p;
  const std::int64_t flag_dim = flag_poincare(n).coefficient(d);
  for (std::int64_t i = 1; i <= flag_dim; ++i)
    p.generators.push_back({Generator::Kind::F, static_cast<int>(i), 0, 0, {}});
  const auto lambda = lambda_set(h, d);
  std::map<int, std::size_t> y_start;
  for (int j : lambda) {
    y_start[j] = p.generators.size();
    for (int k = 1; k <= n; ++k) p.generators.push_back({Generator::Kind::Y, 0, j, k, {}});
  }
  const std::size_t g = p.generators.size();
  for (int j : lambda) {
    std::vector<std::int64_t> r(g, 0);
    for (int k = 0; k < n; ++k) r[y_start[j] + static_cast<std::size_t>(k)] = 1;
    p.relations.push_back(std::move(r));
    p.relation_notes.push_back("sum_k Y_{" + std::to_string(j) + ",k} = y_" + std::to_string(j) +
                               " in the flag part");
  }
  p.relation_rank = relation_rank(p.relations, g);
  p.rank = static_cast<std::int64_t>(g) - static_cast<std::int64_t>(p.relation_rank);
  return p;
}

EquivariantClass realize(const HessenbergFunction& h, const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::X:
      return class_x(h.size(), g.i);
    case Generator::Kind::Y:
      return class_y(h, g.j, g.k);
    case Generator::Kind::T:
      return class_tau(h, g.subset);
    case Generator::Kind::F:
      break;
  }
  throw Error(Errc::PreconditionUnmet, "flag-part generators have no single realization");
}

RealizationReport verify_h2_realization(const HessenbergFunction& h, const LinearAlgebraBudget& budget) {
  const CohomologyPresentation p = h2_presentation(h);
  check_budget(h, 1, budget);
  const int n = h.size();
  auto graph = std::make_shared<const LabeledGraph>(build_graph(h, n));
  const GraphCohomologyPiece top = graph_cohomology_basis(graph, 1, budget);
  const CoordinateSpace& space = top.space();

  RealizationReport rep;
  rep.presentation_rank = p.rank;
  rep.graph_dimension = top.dimension();
  rep.quotient_dimension = static_cast<std::int64_t>(top.dimension()) - n;

  EchelonBasis constants(space.dimension());
  for (int k = 1; k <= n; ++k) constants.insert(space.coordinates(class_t(n, k)));
  EchelonBasis span = constants;

  std::vector<SparseVector> coords;
  rep.generators_in_graph_cohomology = true;
  for (const Generator& g : p.generators) {
    const EquivariantClass f = realize(h, g);
    if (!check_gkm(f, *graph)) rep.generators_in_graph_cohomology = false;
    coords.push_back(space.coordinates(f));
    span.insert(coords.back());
  }
  rep.realized_rank = static_cast<std::int64_t>(span.rank()) - n;

  rep.relations_vanish = true;
  for (const auto& r : p.relations) {
    SparseVector v;
    for (std::size_t s = 0; s < r.size(); ++s)
      if (r[s] != 0) v = sparse_axpy(v, Rational(static_cast<long>(r[s])), coords[s]);
    if (!constants.contains(v)) rep.relations_vanish = false;
  }
  return rep;
}

SpanReport span_check(const HessenbergFunction& h, int d, const LinearAlgebraBudget& budget) {
  const int n = h.size();
  if (d < 1) throw Error(Errc::PreconditionUnmet, "d >= 1 required");
  if (d == 1 && !h.is_connected()) throw Error(Errc::PreconditionUnmet, "h(j) >= j+1 fails for h=" + h.str());
  if (d >= 2 && (d > n - 1 || !h.has_gap(d)))
    throw Error(Errc::PreconditionUnmet, "h(j) >= j+" + std::to_string(d) + " on [n-d] with d <= n-1 required");
  check_budget(h, d, budget);
  auto graph = std::make_shared<const LabeledGraph>(build_graph(h, n));
  const GraphCohomologyPiece top = graph_cohomology_basis(graph, d, budget);
  const CoordinateSpace& space = top.space();

  std::vector<EquivariantClass> gens;
  if (d == 1) {
    for (int k = 1; k <= n; ++k) gens.push_back(class_t(n, k));
    for (int i = 1; i <= n; ++i) gens.push_back(class_x(n, i));
    for (int j : bottom_set(h))
      for (int k = 1; k <= n; ++k) gens.push_back(class_y(h, j, k));
    for (int j : l_set(h))
      for (const auto& a : subsets_of_size(n, j)) gens.push_back(class_tau(h, a));
  } else {
    std::vector<EquivariantClass> linear;
    for (int k = 1; k <= n; ++k) linear.push_back(class_t(n, k));
    for (int i = 1; i <= n; ++i) linear.push_back(class_x(n, i));
    std::function<void(std::size_t, int, const EquivariantClass&)> grow = [&](std::size_t from, int left,
                                                                             const EquivariantClass& acc) {
      if (left == 0) {
        gens.push_back(acc);
        return;
      }
      for (std::size_t s = from; s < linear.size(); ++s) grow(s, left - 1, acc * linear[s]);
    };
    grow(0, d, EquivariantClass::constant(n, Polynomial::constant(n, 1), 0));
    for (int j : lambda_set(h, d))
      for (int k = 1; k <= n; ++k) gens.push_back(class_y(h, j, k));
  }

  SpanReport rep;
  rep.degree = d;
  rep.generator_count = gens.size();
  rep.expected_dimension = top.dimension();
  rep.all_in_space = true;
  EchelonBasis span(space.dimension());
  for (const EquivariantClass& f : gens) {
    if (!check_gkm(f, *graph)) rep.all_in_space = false;
    span.insert(space.coordinates(f));
  }
  rep.generated_dimension = span.rank();
  return rep;
}

}  // namespace hessgkm

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hessgkm/combinatorics.hpp"
#include "hessgkm/symbolic.hpp"

namespace hessgkm {

class EquivariantClass;

/// Edge {w, w·(i,j)} of Γ(h), stored once from the lexicographically smaller endpoint w.
struct Edge {
  std::size_t w = 0;
  std::size_t v = 0;
  int j = 0;  // j < i <= h(j)
  int i = 0;
  Polynomial label;  // t_{w(i)} - t_{w(j)}

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The labeled graph Γ(h). Vertices are S_n in lexicographic order.
class LabeledGraph {
 public:
  int size() const { return hessenberg_.size(); }
  const HessenbergFunction& hessenberg() const { return hessenberg_; }
  const std::vector<Permutation>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Indices into edges() of the edges touching a vertex.
  const std::vector<std::size_t>& incident(std::size_t vertex) const { return incident_[vertex]; }
  std::size_t degree(std::size_t vertex) const { return incident_[vertex].size(); }
  std::size_t index_of(const Permutation& w) const { return lex_rank(w); }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.hessenberg_ == b.hessenberg_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  friend LabeledGraph build_graph(const HessenbergFunction&, int);
  friend LabeledGraph parse_graph_json(const std::string&);
  void index_edges();

  HessenbergFunction hessenberg_ = HessenbergFunction::validate({1});
  std::vector<Permutation> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Pairs (j, i) with j < i <= h(j), ordered by j then i.
std::vector<std::pair<int, int>> edge_directions(const HessenbergFunction& h);

LabeledGraph build_graph(const HessenbergFunction& h, int cap = kDefaultCapN);

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const LabeledGraph& g);

/// True iff f(v) - f(w) is divisible by the label of every edge.
bool check_gkm(const EquivariantClass& f, const LabeledGraph& g);

std::string export_dot(const LabeledGraph& g);
std::string export_json(const LabeledGraph& g);
LabeledGraph parse_graph_json(const std::string& text);

}  // namespace hessgkm

#include "hessgkm/gkm.hpp"

#include <numeric>
#include <sstream>

#include "hessgkm/classes.hpp"
#include "hessgkm/error.hpp"

namespace hessgkm {

std::vector<std::pair<int, int>> edge_directions(const HessenbergFunction& h) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= h.size(); ++j)
    for (int i = j + 1; i <= h(j); ++i) out.emplace_back(j, i);
  return out;
}

void LabeledGraph::index_edges() {
  incident_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incident_[edges_[e].w].push_back(e);
    incident_[edges_[e].v].push_back(e);
  }
}

LabeledGraph build_graph(const HessenbergFunction& h, int cap) {
  const int n = h.size();
  LabeledGraph g;
  g.hessenberg_ = h;
  g.vertices_ = enumerate_group(n, cap);
  const auto directions = edge_directions(h);
  for (std::size_t wi = 0; wi < g.vertices_.size(); ++wi) {
    const Permutation& w = g.vertices_[wi];
    for (const auto& [j, i] : directions) {
      const std::size_t vi = lex_rank(w.swapped(i, j));
      if (vi < wi) continue;
      g.edges_.push_back(Edge{wi, vi, j, i, Polynomial::linear_difference(n, w(i), w(j))});
    }
  }
  g.index_edges();
  return g;
}

std::vector<std::vector<std::size_t>> connected_components(const LabeledGraph& g) {
  const std::size_t nv = g.vertices().size();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    const std::size_t a = find(e.w);
    const std::size_t b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(nv, nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t r = find(v);
    if (slot[r] == nv) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

bool check_gkm(const EquivariantClass& f, const LabeledGraph& g) {
  if (f.size() != g.size()) throw Error(Errc::SizeMismatch, "class and graph sizes differ");
  std::vector<Polynomial> values;
  values.reserve(g.vertices().size());
  for (const Permutation& w : g.vertices()) values.push_back(f.at(w));
  for (const Edge& e : g.edges()) {
    const Permutation& w = g.vertices()[e.w];
    if (!divisible_by_linear(values[e.v] - values[e.w], w(e.i), w(e.j))) return false;
  }
  return true;
}

std::string export_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph \"Gamma(" << g.hessenberg().str() << ")\" {\n";
  out << "  node [shape=ellipse];\n";
  for (const Permutation& w : g.vertices()) out << "  \"" << w.str() << "\";\n";
  for (const Edge& e : g.edges()) {
    out << "  \"" << g.vertices()[e.w].str() << "\" -- \"" << g.vertices()[e.v].str() << "\" [label=\""
        << e.label.str() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const LabeledGraph& g) {
  nlohmann::ordered_json j;
  j["schema"] = "hess-gkm/1";
  j["n"] = g.size();
  j["h"] = std::vector<int>(g.hessenberg().values().begin(), g.hessenberg().values().end());
  auto& vertices = j["vertices"] = nlohmann::ordered_json::array();
  for (const Permutation& w : g.vertices()) vertices.push_back(w.str());
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"w", g.vertices()[e.w].str()},
                     {"v", g.vertices()[e.v].str()},
                     {"transposition", {e.j, e.i}},
                     {"label", e.label.str()}});
  }
  return j.dump(2) + "\n";
}

LabeledGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  LabeledGraph g;
  try {
    g.hessenberg_ = HessenbergFunction::validate(j.at("h").get<std::vector<int>>());
    const int n = g.hessenberg_.size();
    if (j.at("n").get<int>() != n) throw Error(Errc::SizeMismatch, "n does not match h");
    for (const auto& v : j.at("vertices")) g.vertices_.push_back(Permutation::parse(v.get<std::string>()));
    if (g.vertices_ != enumerate_group(n, n)) throw Error(Errc::ParseError, "vertices must list S_n in lexicographic order");
    for (const auto& e : j.at("edges")) {
      const auto w = Permutation::parse(e.at("w").get<std::string>());
      const auto v = Permutation::parse(e.at("v").get<std::string>());
      if (w.size() != n || v.size() != n) throw Error(Errc::SizeMismatch, "edge endpoint size");
      const auto t = e.at("transposition").get<std::vector<int>>();
      if (t.size() != 2) throw Error(Errc::ParseError, "transposition must have two entries");
      g.edges_.push_back(Edge{lex_rank(w), lex_rank(v), t[0], t[1], parse_polynomial(n, e.at("label").get<std::string>())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  g.index_edges();
  return g;
}

}  // namespace hessgkm

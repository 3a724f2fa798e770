#include "obk/plumbgraph.hpp"

#include <set>

#include "obk/error.hpp"

namespace obk {

PlumbingGraph PlumbingGraph::build(std::vector<PlumbingVertex> vertices, std::vector<PlumbingEdge> edges) {
  PlumbingGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  std::set<std::string_view> ids;
  for (const auto& v : g.vertices_) {
    if (!ids.insert(v.id).second) throw Error(ErrorKind::DuplicateId, "vertex " + v.id);
    if (v.dim < 1) throw Error(ErrorKind::DimensionMismatch, "vertex " + v.id + " needs a positive fiber dimension");
  }
  for (const auto& e : g.edges_) {
    for (const auto* end : {&e.v, &e.w})
      if (!ids.count(*end)) throw Error(ErrorKind::UnknownVertex, *end);
    if (e.v == e.w) throw Error(ErrorKind::InvalidEdge, "self-loop at " + e.v);
    if (e.sign != 1 && e.sign != -1) throw Error(ErrorKind::InvalidEdge, "edge sign must be +1 or -1");
  }
  return g;
}

std::optional<std::size_t> PlumbingGraph::find_vertex(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

bool PlumbingGraph::connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& e : edges_) {
      const auto a = *find_vertex(e.v), b = *find_vertex(e.w);
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
        if (x == v && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  const auto n = g.vertices().size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = g.vertices()[i].euler;
  for (const auto& e : g.edges()) {
    const auto a = *g.find_vertex(e.v), b = *g.find_vertex(e.w);
    m(a, b) = checked_add(m(a, b), e.sign);
    m(b, a) = checked_add(m(b, a), e.sign);
  }
  return m;
}

namespace {

std::vector<PlumbingVertex> numbered(int count, Int euler) {
  std::vector<PlumbingVertex> out;
  for (int i = 1; i <= count; ++i) out.push_back(PlumbingVertex{std::to_string(i), euler, 2});
  return out;
}

}  // namespace

PlumbingGraph milnor_graph() {
  std::vector<PlumbingEdge> edges;
  for (int i = 1; i < 8; ++i) edges.push_back({std::to_string(i), std::to_string(i + 1), 1});
  edges.push_back({"2", "5", -1});
  return PlumbingGraph::build(numbered(8, 2), std::move(edges));
}

PlumbingGraph e8_graph(Int euler) {
  std::vector<PlumbingEdge> edges;
  for (int i = 1; i < 7; ++i) edges.push_back({std::to_string(i), std::to_string(i + 1), 1});
  edges.push_back({"5", "8", 1});
  return PlumbingGraph::build(numbered(8, euler), std::move(edges));
}

LatticeReport lattice_report(const PlumbingGraph& g) {
  const IntMatrix m = intersection_matrix(g);
  return LatticeReport{determinant(m), smith_diagonal(m)};
}

}  // namespace obk

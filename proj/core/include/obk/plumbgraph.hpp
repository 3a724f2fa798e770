#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "obk/integer_matrix.hpp"

namespace obk {

/// Disc bundle over a sphere of dimension `dim`, with its Euler number.
struct PlumbingVertex {
  std::string id;
  Int euler = 0;
  int dim = 2;
  friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
};

/// One plumbing between two bundles; the sign picks f(y,x) (+1) or f(-y,x) (-1).
struct PlumbingEdge {
  std::string v;
  std::string w;
  int sign = 1;
  friend bool operator==(const PlumbingEdge&, const PlumbingEdge&) = default;
};

class PlumbingGraph {
 public:
  /// Throws DuplicateId, UnknownVertex, InvalidEdge (self-loop or sign not +-1).
  static PlumbingGraph build(std::vector<PlumbingVertex> vertices, std::vector<PlumbingEdge> edges);

  const std::vector<PlumbingVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<PlumbingEdge>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> find_vertex(std::string_view id) const;
  bool connected() const;

 private:
  PlumbingGraph() = default;
  std::vector<PlumbingVertex> vertices_;
  std::vector<PlumbingEdge> edges_;
};

/// Euler numbers on the diagonal, summed edge signs off it.
IntMatrix intersection_matrix(const PlumbingGraph& g);

/// Path 1-...-8 with an extra (-1)-plumbing between 2 and 5, Euler numbers 2.
PlumbingGraph milnor_graph();

/// E8 tree (chain 1..7, vertex 8 on 5) with all Euler numbers equal to `euler`.
PlumbingGraph e8_graph(Int euler = 2);

struct LatticeReport {
  Int determinant = 0;
  std::vector<Int> torsion;  // Smith normal form diagonal
};

LatticeReport lattice_report(const PlumbingGraph& g);

}  // namespace obk

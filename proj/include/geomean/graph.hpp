#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace geomean {

// Vertex names are arbitrary nonempty strings; generated families use the
// canonical "u3" / "v2" / "w1" scheme.
using VertexId = std::string;

// Undirected edge; endpoints are kept in lexicographic order.
struct Edge {
  VertexId a;
  VertexId b;

  Edge(VertexId x, VertexId y);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Family { Path, Cycle, Star, Comb, Crown, TriSnake, QuadSnake };

const char* family_name(Family f);

struct FamilySpec {
  Family family;
  int n = 1;
};

// Simple undirected graph. Vertices keep their construction order; the edge
// list is stored sorted lexicographically, which is the canonical edge order
// used by the verifier and by all serialized output.
class Graph {
 public:
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t p() const { return vertices_.size(); }
  std::size_t q() const { return edges_.size(); }

  bool has_vertex(const VertexId& v) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
};

// (p, q) of the graph.
std::pair<std::size_t, std::size_t> counts(const Graph& g);

// Builds the family graph with canonical vertex names:
//   Path/Cycle   u_1..u_n
//   Star         center u_1, leaves v_1..v_n
//   Comb/Crown   u_1..u_n plus pendant v_i adjacent to u_i
//   TriSnake     u_1..u_n plus v_i adjacent to u_i and u_{i+1}
//   QuadSnake    u_1..u_n plus v_i, w_i on the path u_i v_i w_i u_{i+1}
// Cycle and Crown require n >= 3; everything else accepts n >= 1, with
// Path(1)/TriSnake(1)/QuadSnake(1) degenerating to a single vertex.
Graph generate(const FamilySpec& spec);

// Disjoint union; vertices of part i are renamed "c<i+1>.<name>" so the
// parts can never collide and the component order stays readable.
Graph disjoint_union(std::span<const Graph> parts);

}  // namespace geomean

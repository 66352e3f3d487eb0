#pragma once

// Decorated plumbing graphs (vertex-weighted multigraphs) and their exact
// intersection matrices.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plumb/error.hpp"
#include "plumb/numeric.hpp"

namespace plumb {

using VertexId = std::int64_t;

struct Vertex {
  VertexId id = 0;
  std::int64_t genus = 0;   // non-negative
  std::int64_t euler = -1;  // self-intersection number, <= -1 in valid inputs
  std::int64_t arrows = 0;  // arrowhead count (non-negative)

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Undirected multigraph. Parallel edges are repeated pairs; loop edges are
/// rejected by validate(). Edge pair order and edge list order carry no
/// meaning.
struct PlumbingGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;

  bool has_vertex(VertexId id) const;
  const Vertex& vertex(VertexId id) const;
  Vertex& vertex(VertexId id);
  VertexId max_id() const;

  /// Degree counting edge multiplicity.
  std::int64_t valency(VertexId id) const;
  /// Neighbour -> edge multiplicity.
  std::map<VertexId, std::int64_t> neighbours(VertexId id) const;
};

bool operator==(const PlumbingGraph& a, const PlumbingGraph& b);

/// Symmetric integer matrix M with M_ii the Euler number and M_ij the edge
/// multiplicity; rows/columns follow `ids` (ascending vertex id).
struct IntersectionMatrix {
  std::vector<VertexId> ids;
  std::vector<std::vector<Int>> m;

  std::size_t size() const { return ids.size(); }
};

struct Divisor {
  std::map<VertexId, Int> coefficients;

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

struct Shape {
  enum class Kind { chain, cycle, other };

  Kind kind = Kind::other;
  // chain: path order starting at the endpoint with the smaller id;
  // cycle: starting at the smallest id, toward its smaller-id neighbour;
  // other: empty.
  std::vector<VertexId> order;
};

/// Checks connectivity, unique ids, no loop edges, no dangling edge
/// endpoints. Returns its argument so call sites can chain.
const PlumbingGraph& validate(const PlumbingGraph& g);

IntersectionMatrix intersection_matrix(const PlumbingGraph& g);

/// Exact Sylvester test on -M: every leading principal minor positive.
bool is_negative_definite(const IntersectionMatrix& m);

/// |det M| by exact fraction-free elimination.
Int abs_determinant(const IntersectionMatrix& m);

Shape shape_classify(const PlumbingGraph& g);

std::vector<std::int64_t> euler_sequence(const PlumbingGraph& g,
                                         const std::vector<VertexId>& order);

/// Label-independent euler word: chains up to reversal, cycles up to
/// rotation/reflection. Fails with InvalidParams on Shape::Kind::other.
std::vector<std::int64_t> canonical_shape_word(const PlumbingGraph& g);

}  // namespace plumb

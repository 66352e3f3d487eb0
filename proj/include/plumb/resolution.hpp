#pragma once

// Blow-up / blow-down moves on plumbing graphs and the even-string
// modification producing central vertices.

#include <vector>

#include "plumb/bnp.hpp"
#include "plumb/graph.hpp"

namespace plumb {

struct BlowUpSite {
  enum class Kind { edge_point, free_point };

  Kind kind = Kind::free_point;
  VertexId a = 0;
  VertexId b = 0;  // edge_point only

  static BlowUpSite edge(VertexId a, VertexId b) {
    return {Kind::edge_point, a, b};
  }
  static BlowUpSite free_point(VertexId a) { return {Kind::free_point, a, 0}; }
};

/// Inserts a fresh -1 vertex (id max+1). Edge sites subdivide one copy of the
/// edge and drop both endpoint weights by one; free sites attach the new
/// vertex and drop one weight.
PlumbingGraph blow_up(const PlumbingGraph& g, const BlowUpSite& site);

/// Removes a genus-zero, arrowless -1 vertex of valency <= 2, joining its
/// two neighbours (valency 2) or just dropping it (valency 1); the neighbour
/// weights go up by one.
PlumbingGraph blow_down(const PlumbingGraph& g, VertexId id);

/// True iff no vertex has genus 0, euler -1, no arrows and valency <= 2.
bool is_minimal(const PlumbingGraph& g);

/// pi_tilde output: the modified graph together with its string
/// decomposition (interiors include the inserted -1 vertices).
struct PiTildeResult {
  PlumbingGraph graph;
  StringDecomposition strings;
};

/// Blows up the middle edge of every string with an even number of interior
/// vertices, so that every string acquires a central vertex. Input must be a
/// minimal chain or cusp cycle.
PiTildeResult pi_tilde(const PlumbingGraph& g);

/// Middle vertex of every string, in decomposition order. Raises
/// MalformedString if some string has an even interior count.
std::vector<VertexId> central_vertices(const PiTildeResult& r);

}  // namespace plumb

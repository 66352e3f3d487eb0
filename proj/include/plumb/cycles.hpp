#pragma once

// Fundamental cycles of negative-definite plumbing graphs and the arrow
// decorations they induce.

#include <map>

#include "plumb/graph.hpp"

namespace plumb {

enum class TautClass { hj_chain, cusp_cycle, none };

struct TautShape {
  TautClass cls = TautClass::none;
  Shape shape;
};

/// Minimal chain with all euler numbers <= -2, or minimal cycle with all
/// <= -2 and at least one <= -3 (genus zero throughout); anything else is
/// TautClass::none.
TautShape taut_classify(const PlumbingGraph& g);

/// Laufer's algorithm from the all-ones divisor: while some z.E_j > 0,
/// increment z_j (smallest id first). A step cap of 64 * sum|e_i| * |V|
/// guards against non-negative-definite input.
Divisor fundamental_cycle(const PlumbingGraph& g);

/// k_i = -(z . E_i) for every vertex i.
std::map<VertexId, Int> anti_degrees(const PlumbingGraph& g, const Divisor& z);

struct CycleReport {
  Divisor z_min;                // equals the maximal ideal cycle here
  std::map<VertexId, Int> k;    // anti-degrees of z_min
  bool reduced = false;
};

/// Fundamental cycle of a chain or cusp cycle graph; verifies that it is
/// reduced (all coefficients one).
CycleReport maximal_cycle_taut(const PlumbingGraph& g);

/// Copy of the graph with arrows_i set to the anti-degree k_i.
PlumbingGraph decorate_with_arrows(const PlumbingGraph& g);

}  // namespace plumb

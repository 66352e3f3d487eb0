#pragma once

// Serialization: versioned JSON for graphs, divisors and descriptors, DOT
// emission, and the short text forms used by the command line tool.

#include <map>
#include <string>

#include "plumb/bnp.hpp"
#include "plumb/graph.hpp"

namespace plumb {

/// Format tag "plumbing-graph/v1". parse(serialize(g)) == g.
std::string graph_to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const std::string& text);

/// Format tag "divisor/v1"; coefficients keyed by vertex id.
std::string divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const std::string& text);

/// Format tag "bnp-descriptor/v1".
std::string descriptor_to_json(const BnpDescriptor& d);
BnpDescriptor descriptor_from_json(const std::string& text);

/// Graphviz output. Vertices are labelled "id / e=<euler> g=<genus>" plus
/// any extra text supplied for that id; arrows become directed edges to
/// anonymous point-shaped nodes.
std::string graph_to_dot(const PlumbingGraph& g,
                         const std::map<VertexId, std::string>& extra = {});

/// "chain: -4 -2 -3 -2" / "cycle: ..." in stored shape order; a vertex and
/// edge listing for other shapes.
std::string graph_to_text(const PlumbingGraph& g);

/// Accepts inline constructors "lens:p,q" and "cusp:b1,b2,..." or a path to
/// a JSON graph file.
PlumbingGraph load_graph(const std::string& arg);

}  // namespace plumb

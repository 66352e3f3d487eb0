#pragma once

// The inner metric descriptor of a chain or cusp cycle: L-nodes with their
// curvette counts, separated by strings of -2 vertices carrying inner rates.

#include <optional>
#include <string>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

struct LNodeRecord {
  VertexId vertex_id;
  std::int64_t euler;
  std::int64_t valency;
  Int curvettes;  // anti-degree; equals -euler - valency

  friend bool operator==(const LNodeRecord&, const LNodeRecord&) = default;
};

struct StringRecord {
  std::int64_t n;  // interior -2 vertex count
  Rat inner_rate;  // (n + 3) / 2

  friend bool operator==(const StringRecord&, const StringRecord&) = default;
};

/// Alternating descriptor. Chains: L_0 S_1 L_1 ... S_s L_s with strings[i]
/// between l_nodes[i] and l_nodes[i+1]. Cycles: L_1 S_1 ... L_s S_s with
/// strings[i] following l_nodes[i]; stored in canonical rotation/reflection
/// (lexicographically minimal flattened (curvettes, n) word).
struct BnpDescriptor {
  Shape::Kind shape = Shape::Kind::other;
  std::vector<LNodeRecord> l_nodes;
  std::vector<StringRecord> strings;

  friend bool operator==(const BnpDescriptor&, const BnpDescriptor&) = default;
};

struct TautString {
  VertexId from;
  VertexId to;
  std::vector<VertexId> interior;  // walk order from `from` to `to`
};

struct StringDecomposition {
  Shape::Kind shape = Shape::Kind::other;
  std::vector<VertexId> l_nodes;
  std::vector<TautString> strings;  // same indexing as BnpDescriptor
};

/// Vertices with positive anti-degree, in decomposition order; these are the
/// vertices with euler <= -3 plus, for chains, the two ends.
std::vector<VertexId> l_nodes(const PlumbingGraph& g);

StringDecomposition string_decomposition(const PlumbingGraph& g);

/// Inner rates (n_i + 3)/2 of the strings, in decomposition order.
std::vector<Rat> inner_rates(const PlumbingGraph& g);

BnpDescriptor bnp_descriptor(const PlumbingGraph& g);

/// Equality up to reversal (chains) or rotation/reflection (cycles).
bool bnp_equal(const BnpDescriptor& a, const BnpDescriptor& b);

enum class TopoVerdict {
  oriented_homeo,
  unoriented_homeo_only,
  distinct,
  unsupported,
};

const char* topo_verdict_name(TopoVerdict v);

struct CompareReport {
  TopoVerdict topo = TopoVerdict::unsupported;
  bool bilipschitz_equal = false;
  std::optional<std::string> witness;  // symmetry realizing the match
};

/// Compares two minimal chain/cusp-cycle graphs as oriented links and as
/// inner metric spaces. Oriented equality must imply descriptor equality;
/// that implication is asserted, not assumed.
CompareReport compare(const PlumbingGraph& g1, const PlumbingGraph& g2);

}  // namespace plumb

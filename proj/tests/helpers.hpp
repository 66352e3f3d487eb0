#pragma once

// Small graph builders shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "plumb/error.hpp"
#include "plumb/graph.hpp"

namespace helpers {

// Runs f and reports the Errc it throws, if any.
template <typename F>
std::optional<plumb::Errc> code_of(F&& f) {
  try {
    f();
  } catch (const plumb::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Path graph with ids 0..n-1 in order and the given euler numbers.
inline plumb::PlumbingGraph chain_of(const std::vector<std::int64_t>& euler) {
  plumb::PlumbingGraph g;
  for (std::size_t i = 0; i < euler.size(); ++i)
    g.vertices.push_back({static_cast<plumb::VertexId>(i), 0, euler[i], 0});
  for (std::size_t i = 0; i + 1 < euler.size(); ++i)
    g.edges.emplace_back(static_cast<plumb::VertexId>(i),
                         static_cast<plumb::VertexId>(i + 1));
  return g;
}

// Cycle graph with ids 0..n-1 in cyclic order; n == 2 yields a double edge.
inline plumb::PlumbingGraph cycle_of(const std::vector<std::int64_t>& euler) {
  plumb::PlumbingGraph g = chain_of(euler);
  g.edges.emplace_back(static_cast<plumb::VertexId>(euler.size() - 1),
                       static_cast<plumb::VertexId>(0));
  return g;
}

// Copy with every id mapped through `map`; vertex and edge order preserved.
inline plumb::PlumbingGraph relabel(
    const plumb::PlumbingGraph& g,
    const std::map<plumb::VertexId, plumb::VertexId>& map) {
  plumb::PlumbingGraph out = g;
  for (auto& v : out.vertices) v.id = map.at(v.id);
  for (auto& e : out.edges) e = {map.at(e.first), map.at(e.second)};
  return out;
}

// E8 tree: chain 0-2-3-4-5-6-7 with 1 attached to 3, all euler -2.
inline plumb::PlumbingGraph e8() {
  plumb::PlumbingGraph g;
  for (plumb::VertexId i = 0; i < 8; ++i) g.vertices.push_back({i, 0, -2, 0});
  g.edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  return g;
}

}  // namespace helpers

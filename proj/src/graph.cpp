#include "plumb/graph.hpp"

#include <algorithm>
#include <set>

#include "plumb/cyclic.hpp"

namespace plumb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::loop_edge: return "LoopEdge";
    case Errc::dangling_edge: return "DanglingEdge";
    case Errc::duplicate_vertex_id: return "DuplicateVertexId";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::not_a_lens_graph: return "NotALensGraph";
    case Errc::not_negative_definite: return "NotNegativeDefinite";
    case Errc::not_taut_class: return "NotTautClass";
    case Errc::reducedness_violated: return "ReducednessViolated";
    case Errc::no_such_site: return "NoSuchSite";
    case Errc::not_blow_downable: return "NotBlowDownable";
    case Errc::last_vertex: return "LastVertex";
    case Errc::not_minimal: return "NotMinimal";
    case Errc::malformed_string: return "MalformedString";
    case Errc::no_l_nodes: return "NoLNodes";
    case Errc::all_twos: return "AllTwos";
    case Errc::unrepresentable: return "Unrepresentable";
    case Errc::bad_format: return "BadFormat";
    case Errc::internal_check: return "InternalCheck";
  }
  return "UnknownError";
}

namespace {

std::string id_str(VertexId id) { return std::to_string(id); }

std::string edge_str(VertexId a, VertexId b) {
  return "{" + id_str(a) + "," + id_str(b) + "}";
}

}  // namespace

bool PlumbingGraph::has_vertex(VertexId id) const {
  for (const auto& v : vertices)
    if (v.id == id) return true;
  return false;
}

const Vertex& PlumbingGraph::vertex(VertexId id) const {
  for (const auto& v : vertices)
    if (v.id == id) return v;
  fail(Errc::dangling_edge, "no vertex with id " + id_str(id));
}

Vertex& PlumbingGraph::vertex(VertexId id) {
  for (auto& v : vertices)
    if (v.id == id) return v;
  fail(Errc::dangling_edge, "no vertex with id " + id_str(id));
}

VertexId PlumbingGraph::max_id() const {
  VertexId m = 0;
  for (const auto& v : vertices) m = std::max(m, v.id);
  return m;
}

std::int64_t PlumbingGraph::valency(VertexId id) const {
  std::int64_t d = 0;
  for (const auto& [a, b] : edges) {
    if (a == id) ++d;
    if (b == id) ++d;
  }
  return d;
}

std::map<VertexId, std::int64_t> PlumbingGraph::neighbours(VertexId id) const {
  std::map<VertexId, std::int64_t> n;
  for (const auto& [a, b] : edges) {
    if (a == id) ++n[b];
    if (b == id) ++n[a];
  }
  return n;
}

bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
  auto vs = [](const PlumbingGraph& g) {
    auto v = g.vertices;
    std::sort(v.begin(), v.end(),
              [](const Vertex& x, const Vertex& y) { return x.id < y.id; });
    return v;
  };
  auto es = [](const PlumbingGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> e;
    e.reserve(g.edges.size());
    for (auto [x, y] : g.edges) e.emplace_back(std::min(x, y), std::max(x, y));
    std::sort(e.begin(), e.end());
    return e;
  };
  return vs(a) == vs(b) && es(a) == es(b);
}

const PlumbingGraph& validate(const PlumbingGraph& g) {
  if (g.vertices.empty())
    fail(Errc::disconnected_graph, "graph has no vertices");

  std::set<VertexId> ids;
  for (const auto& v : g.vertices) {
    if (!ids.insert(v.id).second)
      fail(Errc::duplicate_vertex_id, "vertex id " + id_str(v.id) + " repeats");
  }
  for (const auto& [a, b] : g.edges) {
    if (a == b) fail(Errc::loop_edge, "loop edge at vertex " + id_str(a));
    if (!ids.count(a))
      fail(Errc::dangling_edge, "edge " + edge_str(a, b) + " references missing vertex " + id_str(a));
    if (!ids.count(b))
      fail(Errc::dangling_edge, "edge " + edge_str(a, b) + " references missing vertex " + id_str(b));
  }

  // breadth-first sweep from the first vertex
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<VertexId> seen{g.vertices.front().id};
  std::vector<VertexId> queue{g.vertices.front().id};
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    for (VertexId w : adj[v])
      if (seen.insert(w).second) queue.push_back(w);
  }
  for (VertexId id : ids)
    if (!seen.count(id))
      fail(Errc::disconnected_graph,
           "vertex " + id_str(id) + " is not reachable from vertex " +
               id_str(g.vertices.front().id));
  return g;
}

IntersectionMatrix intersection_matrix(const PlumbingGraph& g) {
  IntersectionMatrix mx;
  for (const auto& v : g.vertices) mx.ids.push_back(v.id);
  std::sort(mx.ids.begin(), mx.ids.end());
  const std::size_t n = mx.ids.size();
  std::map<VertexId, std::size_t> row;
  for (std::size_t i = 0; i < n; ++i) row[mx.ids[i]] = i;

  mx.m.assign(n, std::vector<Int>(n, 0));
  for (const auto& v : g.vertices) mx.m[row[v.id]][row[v.id]] = v.euler;
  for (const auto& [a, b] : g.edges) {
    mx.m[row[a]][row[b]] += 1;
    mx.m[row[b]][row[a]] += 1;
  }
  return mx;
}

Shape shape_classify(const PlumbingGraph& g) {
  Shape s;
  const std::size_t n = g.vertices.size();
  const std::size_t e = g.edges.size();

  std::vector<VertexId> ids;
  for (const auto& v : g.vertices) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());

  bool parallel = false;
  std::int64_t max_deg = 0;
  std::vector<VertexId> endpoints;
  for (VertexId id : ids) {
    auto nb = g.neighbours(id);
    std::int64_t deg = 0;
    for (auto [w, mult] : nb) {
      deg += mult;
      if (mult > 1) parallel = true;
    }
    max_deg = std::max(max_deg, deg);
    if (deg <= 1) endpoints.push_back(id);
  }

  // Walks along degree-<=2 vertices; stops when stuck or after n steps.
  auto walk = [&g, n](VertexId start, VertexId prev) {
    std::vector<VertexId> order;
    VertexId cur = start;
    while (order.size() < n) {
      order.push_back(cur);
      bool moved = false;
      for (auto [w, mult] : g.neighbours(cur)) {
        if (w != prev) {
          prev = cur;
          cur = w;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    return order;
  };

  if (e + 1 == n && !parallel && max_deg <= 2 && endpoints.size() == (n == 1 ? 1 : 2)) {
    auto order = walk(endpoints.front(), endpoints.front());
    if (order.size() == n) {
      s.kind = Shape::Kind::chain;
      s.order = std::move(order);
      return s;
    }
  }

  if (e == n && n >= 2 && max_deg == 2 && endpoints.empty()) {
    if (n == 2) {
      s.kind = Shape::Kind::cycle;
      s.order = {ids[0], ids[1]};
      return s;
    }
    if (!parallel) {
      VertexId start = ids.front();
      VertexId first = g.neighbours(start).begin()->first;  // smaller-id side
      auto order = walk(first, start);
      if (order.size() == n && order.back() == start) {
        order.pop_back();
        order.insert(order.begin(), start);
        s.kind = Shape::Kind::cycle;
        s.order = std::move(order);
        return s;
      }
    }
  }

  s.kind = Shape::Kind::other;
  return s;
}

std::vector<std::int64_t> euler_sequence(const PlumbingGraph& g,
                                         const std::vector<VertexId>& order) {
  std::vector<std::int64_t> w;
  w.reserve(order.size());
  for (VertexId id : order) w.push_back(g.vertex(id).euler);
  return w;
}

std::vector<std::int64_t> canonical_shape_word(const PlumbingGraph& g) {
  Shape s = shape_classify(g);
  auto w = euler_sequence(g, s.order);
  switch (s.kind) {
    case Shape::Kind::chain:
      return canonical_linear(std::move(w));
    case Shape::Kind::cycle:
      return canonical_cyclic(w);
    default:
      fail(Errc::invalid_params, "graph is neither a chain nor a cycle");
  }
}

}  // namespace plumb

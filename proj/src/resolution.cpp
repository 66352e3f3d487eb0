#include "plumb/resolution.hpp"

#include <algorithm>
#include <string>

#include "plumb/cycles.hpp"

namespace plumb {

namespace {

std::string id_str(VertexId id) { return std::to_string(id); }

}  // namespace

PlumbingGraph blow_up(const PlumbingGraph& g, const BlowUpSite& site) {
  validate(g);
  PlumbingGraph out = g;
  const VertexId fresh = out.max_id() + 1;

  if (site.kind == BlowUpSite::Kind::free_point) {
    if (!out.has_vertex(site.a))
      fail(Errc::no_such_site, "no vertex " + id_str(site.a));
    out.vertex(site.a).euler -= 1;
    out.vertices.push_back({fresh, 0, -1, 0});
    out.edges.emplace_back(site.a, fresh);
    return out;
  }

  auto it = std::find_if(out.edges.begin(), out.edges.end(), [&](const auto& e) {
    return (e.first == site.a && e.second == site.b) ||
           (e.first == site.b && e.second == site.a);
  });
  if (site.a == site.b || it == out.edges.end())
    fail(Errc::no_such_site,
         "no edge {" + id_str(site.a) + "," + id_str(site.b) + "}");
  out.edges.erase(it);
  out.vertex(site.a).euler -= 1;
  out.vertex(site.b).euler -= 1;
  out.vertices.push_back({fresh, 0, -1, 0});
  out.edges.emplace_back(site.a, fresh);
  out.edges.emplace_back(fresh, site.b);
  return out;
}

PlumbingGraph blow_down(const PlumbingGraph& g, VertexId id) {
  validate(g);
  if (!g.has_vertex(id)) fail(Errc::no_such_site, "no vertex " + id_str(id));
  const Vertex& v = g.vertex(id);
  if (v.genus != 0 || v.euler != -1 || v.arrows != 0)
    fail(Errc::not_blow_downable,
         "vertex " + id_str(id) + " is not a genus-zero arrowless -1 vertex");

  auto nb = g.neighbours(id);
  std::int64_t val = g.valency(id);
  if (val > 2)
    fail(Errc::not_blow_downable, "vertex " + id_str(id) + " has valency " +
                                      std::to_string(val));
  if (val == 0)  // a valid graph is connected, so this is the only vertex
    fail(Errc::last_vertex, "cannot blow down the only vertex");
  if (val == 2 && nb.size() == 1)
    fail(Errc::not_blow_downable,
         "blowing down vertex " + id_str(id) + " would create a loop edge");

  PlumbingGraph out;
  for (const auto& w : g.vertices)
    if (w.id != id) out.vertices.push_back(w);
  for (const auto& e : g.edges)
    if (e.first != id && e.second != id) out.edges.push_back(e);

  for (auto [w, mult] : nb) out.vertex(w).euler += 1;
  if (val == 2) out.edges.emplace_back(nb.begin()->first, std::next(nb.begin())->first);
  return out;
}

bool is_minimal(const PlumbingGraph& g) {
  validate(g);
  for (const auto& v : g.vertices) {
    if (v.genus == 0 && v.euler == -1 && v.arrows == 0 && g.valency(v.id) <= 2)
      return false;
  }
  return true;
}

PiTildeResult pi_tilde(const PlumbingGraph& g) {
  if (taut_classify(g).cls == TautClass::none)
    fail(Errc::not_taut_class,
         "graph is neither a minimal lens chain nor a cusp cycle");
  if (!is_minimal(g)) fail(Errc::not_minimal, "graph has a blow-downable vertex");

  StringDecomposition sd = string_decomposition(g);
  PiTildeResult r{g, sd};
  for (auto& s : r.strings.strings) {
    if (s.interior.size() % 2 != 0) continue;
    // middle edge: separates the first half of the interior from the rest
    const std::size_t h = s.interior.size() / 2;
    VertexId a = h == 0 ? s.from : s.interior[h - 1];
    VertexId b = h == s.interior.size() ? s.to : s.interior[h];
    r.graph = blow_up(r.graph, BlowUpSite::edge(a, b));
    s.interior.insert(s.interior.begin() + static_cast<std::ptrdiff_t>(h),
                      r.graph.max_id());
  }
  return r;
}

std::vector<VertexId> central_vertices(const PiTildeResult& r) {
  std::vector<VertexId> centres;
  for (const auto& s : r.strings.strings) {
    if (s.interior.size() % 2 == 0)
      fail(Errc::malformed_string,
           "string from " + id_str(s.from) + " to " + id_str(s.to) +
               " has an even interior count " + std::to_string(s.interior.size()));
    centres.push_back(s.interior[s.interior.size() / 2]);
  }
  return centres;
}

}  // namespace plumb

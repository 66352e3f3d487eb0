#include "plumb/cycles.hpp"

#include <algorithm>
#include <string>

namespace plumb {

TautShape taut_classify(const PlumbingGraph& g) {
  validate(g);
  TautShape t;
  t.shape = shape_classify(g);
  if (t.shape.kind == Shape::Kind::other) return t;

  bool genus_zero = true, all_le2 = true, some_le3 = false;
  for (const auto& v : g.vertices) {
    genus_zero = genus_zero && v.genus == 0;
    all_le2 = all_le2 && v.euler <= -2;
    some_le3 = some_le3 || v.euler <= -3;
  }
  if (!genus_zero || !all_le2) return t;

  if (t.shape.kind == Shape::Kind::chain)
    t.cls = TautClass::hj_chain;
  else if (some_le3)
    t.cls = TautClass::cusp_cycle;
  return t;
}

Divisor fundamental_cycle(const PlumbingGraph& g) {
  validate(g);

  std::vector<VertexId> ids;
  for (const auto& v : g.vertices) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());

  Divisor z;
  for (VertexId id : ids) z.coefficients[id] = 1;

  Int cap = 0;
  for (const auto& v : g.vertices) cap += v.euler < 0 ? -v.euler : v.euler;
  cap *= 64 * static_cast<std::int64_t>(g.vertices.size());

  std::map<VertexId, std::map<VertexId, std::int64_t>> nbs;
  for (VertexId id : ids) nbs[id] = g.neighbours(id);
  auto dot = [&](VertexId j) {
    Int s = g.vertex(j).euler * z.coefficients[j];
    for (auto [w, mult] : nbs[j]) s += mult * z.coefficients[w];
    return s;
  };

  Int steps = 0;
  for (;;) {
    bool bumped = false;
    for (VertexId j : ids) {
      if (dot(j) > 0) {
        z.coefficients[j] += 1;
        bumped = true;
        if (++steps > cap)
          fail(Errc::not_negative_definite,
               "Laufer iteration exceeded its step cap; the intersection "
               "matrix is not negative definite");
        break;
      }
    }
    if (!bumped) return z;
  }
}

std::map<VertexId, Int> anti_degrees(const PlumbingGraph& g, const Divisor& z) {
  validate(g);
  for (const auto& [id, c] : z.coefficients)
    if (!g.has_vertex(id))
      fail(Errc::invalid_params,
           "divisor supported on missing vertex " + std::to_string(id));

  auto coeff = [&z](VertexId id) {
    auto it = z.coefficients.find(id);
    return it == z.coefficients.end() ? Int(0) : it->second;
  };
  std::map<VertexId, Int> k;
  for (const auto& v : g.vertices) {
    Int s = v.euler * coeff(v.id);
    for (auto [w, mult] : g.neighbours(v.id)) s += mult * coeff(w);
    k[v.id] = -s;
  }
  return k;
}

CycleReport maximal_cycle_taut(const PlumbingGraph& g) {
  TautShape t = taut_classify(g);
  if (t.cls == TautClass::none)
    fail(Errc::not_taut_class, "graph is neither a minimal lens chain nor a cusp cycle");

  CycleReport r;
  r.z_min = fundamental_cycle(g);
  for (const auto& [id, c] : r.z_min.coefficients) {
    if (c != 1)
      fail(Errc::reducedness_violated, "fundamental cycle has coefficient " +
                                           c.str() + " at vertex " + std::to_string(id));
  }
  r.k = anti_degrees(g, r.z_min);
  r.reduced = true;

  for (const auto& [id, k] : r.k)
    if (k < 0)
      fail(Errc::internal_check,
           "negative anti-degree at vertex " + std::to_string(id));
  return r;
}

PlumbingGraph decorate_with_arrows(const PlumbingGraph& g) {
  CycleReport r = maximal_cycle_taut(g);
  PlumbingGraph out = g;
  for (auto& v : out.vertices) v.arrows = r.k.at(v.id).convert_to<std::int64_t>();
  return out;
}

}  // namespace plumb

#include "plumb/lens.hpp"

#include <limits>
#include <sstream>

#include "plumb/cyclic.hpp"

namespace plumb {

namespace {

std::string pq_str(const LensParams& pq) {
  std::ostringstream os;
  os << "(" << pq.p << "," << pq.q << ")";
  return os.str();
}

Int mod_p(const Int& a, const Int& p) {
  Int r = a % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

LensParams make_lens_params(Int p, Int q) {
  if (p < 2) fail(Errc::invalid_params, "p must be at least 2, got " + pq_str({p, q}));
  if (q < 1 || q >= p)
    fail(Errc::invalid_params, "q must satisfy 1 <= q < p, got " + pq_str({p, q}));
  if (int_gcd(p, q) != 1)
    fail(Errc::invalid_params, "p and q must be coprime, got " + pq_str({p, q}));
  return {std::move(p), std::move(q)};
}

NegContFrac neg_cont_frac(const LensParams& pq) {
  make_lens_params(pq.p, pq.q);
  NegContFrac cf;
  Int p = pq.p, q = pq.q;
  while (q != 0) {
    Int b = ceil_div(p, q);
    cf.terms.push_back(b);
    Int r = b * q - p;  // next pair is q / r
    p = q;
    q = r;
  }
  return cf;
}

LensParams eval_cont_frac(const NegContFrac& cf) {
  if (cf.terms.empty()) fail(Errc::invalid_params, "empty continued fraction");
  for (const Int& b : cf.terms)
    if (b < 2) fail(Errc::invalid_params, "continued fraction terms must be >= 2");
  Rat x = cf.terms.back();
  for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it)
    x = Rat(*it) - 1 / x;
  return make_lens_params(numerator(x), denominator(x));
}

PlumbingGraph lens_graph(const LensParams& pq) {
  NegContFrac cf = neg_cont_frac(pq);
  PlumbingGraph g;
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (cf.terms[i] > std::numeric_limits<std::int64_t>::max())
      fail(Errc::invalid_params, "euler number out of representable range");
    g.vertices.push_back(
        {static_cast<VertexId>(i), 0, -static_cast<std::int64_t>(cf.terms[i]), 0});
    if (i > 0)
      g.edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
  }
  return g;
}

LensReadings graph_to_lens_readings(const PlumbingGraph& g) {
  validate(g);
  Shape s = shape_classify(g);
  if (s.kind != Shape::Kind::chain)
    fail(Errc::not_a_lens_graph, "graph is not a chain");
  for (const auto& v : g.vertices) {
    if (v.genus != 0)
      fail(Errc::not_a_lens_graph, "vertex " + std::to_string(v.id) + " has genus " +
                                       std::to_string(v.genus));
    if (v.euler > -2)
      fail(Errc::not_a_lens_graph, "vertex " + std::to_string(v.id) +
                                       " has euler number > -2; chain is not minimal");
  }

  auto eval_order = [&g](const std::vector<VertexId>& order) {
    NegContFrac cf;
    for (VertexId id : order) cf.terms.push_back(Int(-g.vertex(id).euler));
    return eval_cont_frac(cf);
  };
  std::vector<VertexId> rev(s.order.rbegin(), s.order.rend());
  LensReadings r{eval_order(s.order), eval_order(rev)};
  if (r.stored.p != r.reversed.p || mod_p(r.stored.q * r.reversed.q, r.stored.p) != 1)
    fail(Errc::internal_check, "chain readings disagree: " + pq_str(r.stored) +
                                   " vs " + pq_str(r.reversed));
  return r;
}

LensParams graph_to_lens(const PlumbingGraph& g) {
  return graph_to_lens_readings(g).stored;
}

LensParams lens_reverse_orientation(const LensParams& pq) {
  make_lens_params(pq.p, pq.q);
  return {pq.p, pq.p - pq.q};
}

bool lens_oriented_homeo(const LensParams& a, const LensParams& b) {
  make_lens_params(a.p, a.q);
  make_lens_params(b.p, b.q);
  bool graphs_equal =
      canonical_shape_word(lens_graph(a)) == canonical_shape_word(lens_graph(b));
  bool arithmetic = a.p == b.p && (a.q == b.q || mod_p(a.q * b.q, a.p) == 1);
  if (graphs_equal != arithmetic)
    fail(Errc::internal_check,
         "graph comparison disagrees with q-arithmetic for " + pq_str(a) + " vs " +
             pq_str(b));
  return graphs_equal;
}

bool lens_unoriented_homeo(const LensParams& a, const LensParams& b) {
  return lens_oriented_homeo(a, b) ||
         lens_oriented_homeo(a, lens_reverse_orientation(b));
}

}  // namespace plumb

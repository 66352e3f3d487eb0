#include "plumb/cli.hpp"

#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plumb/bnp.hpp"
#include "plumb/cusp.hpp"
#include "plumb/cycles.hpp"
#include "plumb/error.hpp"
#include "plumb/io.hpp"
#include "plumb/lens.hpp"
#include "plumb/resolution.hpp"
#include "plumb/survey.hpp"

namespace plumb {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError {
  std::string message;
};

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

std::string rat_str(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Int parse_big(const std::string& s, const char* what) {
  try {
    if (s.empty()) throw std::runtime_error("empty");
    return Int(s);
  } catch (const std::exception&) {
    throw UsageError{std::string(what) + " '" + s + "' is not an integer"};
  }
}

std::int64_t parse_i64(const std::string& s, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError{std::string(what) + " '" + s + "' is not an integer"};
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

void emit_graph(const PlumbingGraph& g, const std::string& format,
                std::ostream& out,
                const std::map<VertexId, std::string>& extra = {}) {
  if (format == "dot")
    out << graph_to_dot(g, extra);
  else if (format == "text")
    out << graph_to_text(g) << "\n";
  else
    out << graph_to_json(g) << "\n";
}

void print_survey(const SurveyReport& r, const char* which,
                  const std::string& format, std::ostream& out,
                  std::ostream& err, bool verbose) {
  if (verbose) {
    for (const auto& c : r.counterexamples) err << "counterexample: " << c << "\n";
    for (const auto& s : r.same_rates_distinct)
      err << "same rates, distinct: " << s << "\n";
  }
  if (format == "dot") throw UsageError{"--format dot is not supported for surveys"};
  if (format == "text") {
    out << "survey: " << which << "\n"
        << "parameters: " << r.parameters << "\n"
        << "pairs_scanned: " << r.pairs_scanned << "\n"
        << "oriented_homeo: " << r.oriented_homeo << "\n"
        << "unoriented_only: " << r.unoriented_only << "\n"
        << "bilipschitz_distinct: " << r.bilipschitz_distinct << "\n"
        << "skipped_unrepresentable: " << r.skipped_unrepresentable << "\n"
        << "same_rates_distinct: " << r.same_rates_distinct.size() << "\n"
        << "counterexamples: " << r.counterexamples.size() << "\n"
        << "ok: " << (r.ok() ? "true" : "false") << "\n";
    return;
  }
  Json j;
  j["format"] = "survey/v1";
  j["survey"] = which;
  j["parameters"] = r.parameters;
  j["pairs_scanned"] = r.pairs_scanned;
  j["oriented_homeo"] = r.oriented_homeo;
  j["unoriented_only"] = r.unoriented_only;
  j["bilipschitz_distinct"] = r.bilipschitz_distinct;
  j["skipped_unrepresentable"] = r.skipped_unrepresentable;
  j["counterexamples"] = r.counterexamples;
  j["same_rates_distinct_count"] = r.same_rates_distinct.size();
  Json sample = Json::array();
  for (std::size_t i = 0; i < r.same_rates_distinct.size() && i < 10; ++i)
    sample.push_back(r.same_rates_distinct[i]);
  j["same_rates_distinct_sample"] = std::move(sample);
  j["ok"] = r.ok();
  out << j.dump() << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"calculator for plumbing graphs of lens and cusp singularities"};
  app.name("plumbcalc");
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
  };

  int exit_code = 0;
  const auto i64max = std::numeric_limits<std::int64_t>::max();

  std::string lens_p, lens_q;
  auto* lens_cmd =
      app.add_subcommand("lens", "minimal plumbing chain of the lens space L(p,q)");
  lens_cmd->add_option("p", lens_p, "order parameter, p >= 2")->required();
  lens_cmd->add_option("q", lens_q, "twist parameter, 1 <= q < p, coprime to p")
      ->required();
  add_format(lens_cmd);
  lens_cmd->callback([&] {
    emit_graph(lens_graph(make_lens_params(parse_big(lens_p, "p"),
                                           parse_big(lens_q, "q"))),
               format, out);
  });

  std::string cf_p, cf_q;
  auto* cf_cmd =
      app.add_subcommand("contfrac", "negative continued fraction expansion of p/q");
  cf_cmd->add_option("p", cf_p, "numerator")->required();
  cf_cmd->add_option("q", cf_q, "denominator")->required();
  add_format(cf_cmd);
  cf_cmd->callback([&] {
    const Int p = parse_big(cf_p, "p");
    const Int q = parse_big(cf_q, "q");
    const NegContFrac cf = neg_cont_frac(make_lens_params(p, q));
    if (format == "dot")
      throw UsageError{"--format dot is not supported for contfrac"};
    if (format == "text") {
      std::ostringstream line;
      for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        if (i) line << ' ';
        line << cf.terms[i];
      }
      out << line.str() << "\n";
      return;
    }
    Json j;
    j["p"] = int_to_json(p);
    j["q"] = int_to_json(q);
    j["terms"] = Json::array();
    for (const Int& t : cf.terms) j["terms"].push_back(int_to_json(t));
    out << j.dump() << "\n";
  });

  std::vector<std::string> rev_lens;
  std::string rev_cusp;
  auto* rev_cmd = app.add_subcommand("reverse", "orientation reversal");
  auto* rev_lens_opt =
      rev_cmd->add_option("--lens", rev_lens, "p q of the lens space")->expected(2);
  auto* rev_cusp_opt =
      rev_cmd->add_option("--cusp", rev_cusp, "cusp graph (file or inline)");
  rev_lens_opt->excludes(rev_cusp_opt);
  rev_cusp_opt->excludes(rev_lens_opt);
  add_format(rev_cmd);
  rev_cmd->callback([&] {
    if (!rev_lens.empty()) {
      const LensParams rev = lens_reverse_orientation(make_lens_params(
          parse_big(rev_lens[0], "p"), parse_big(rev_lens[1], "q")));
      if (format == "dot")
        throw UsageError{"--format dot is not supported for reverse --lens"};
      if (format == "text") {
        out << "lens: " << rev.p << " " << rev.q << "\n";
        return;
      }
      Json j;
      j["p"] = int_to_json(rev.p);
      j["q"] = int_to_json(rev.q);
      out << j.dump() << "\n";
      return;
    }
    if (!rev_cusp.empty()) {
      const CuspWord dual = cusp_reverse_orientation(cusp_word(load_graph(rev_cusp)));
      emit_graph(cusp_graph(dual), format, out);
      return;
    }
    throw UsageError{"one of --lens or --cusp is required"};
  });

  std::string fc_arg;
  auto* fc_cmd =
      app.add_subcommand("fundamental-cycle", "fundamental cycle coefficients");
  fc_cmd->add_option("graph", fc_arg, "graph file or inline constructor")->required();
  add_format(fc_cmd);
  fc_cmd->callback([&] {
    const PlumbingGraph g = load_graph(fc_arg);
    const Divisor z = fundamental_cycle(g);
    if (format == "dot") {
      std::map<VertexId, std::string> extra;
      for (const auto& [id, c] : z.coefficients) extra[id] = "z=" + c.str();
      out << graph_to_dot(g, extra);
      return;
    }
    if (format == "text") {
      for (const auto& [id, c] : z.coefficients) out << id << " " << c << "\n";
      return;
    }
    out << divisor_to_json(z) << "\n";
  });

  std::string ar_arg;
  auto* ar_cmd = app.add_subcommand(
      "arrows", "arrow decoration induced by the fundamental cycle");
  ar_cmd->add_option("graph", ar_arg, "graph file or inline constructor")->required();
  add_format(ar_cmd);
  ar_cmd->callback([&] {
    const PlumbingGraph g = load_graph(ar_arg);
    if (format == "dot") {
      out << graph_to_dot(decorate_with_arrows(g));
      return;
    }
    const CycleReport rep = maximal_cycle_taut(g);
    if (format == "text") {
      for (const auto& [id, k] : rep.k) out << id << " " << k << "\n";
      return;
    }
    out << divisor_to_json(Divisor{rep.k}) << "\n";
  });

  std::string bu_arg, bu_edge;
  std::int64_t bu_vertex = 0;
  auto* bu_cmd = app.add_subcommand("blowup", "blow up an edge or a free point");
  bu_cmd->add_option("graph", bu_arg, "graph file or inline constructor")->required();
  auto* bu_edge_opt =
      bu_cmd->add_option("--edge", bu_edge, "a,b endpoints of the edge to subdivide");
  auto* bu_vertex_opt =
      bu_cmd->add_option("--vertex", bu_vertex, "vertex carrying the free point");
  bu_edge_opt->excludes(bu_vertex_opt);
  bu_vertex_opt->excludes(bu_edge_opt);
  add_format(bu_cmd);
  bu_cmd->callback([&] {
    const PlumbingGraph g = load_graph(bu_arg);
    BlowUpSite site;
    if (bu_edge_opt->count() > 0) {
      const auto parts = split(bu_edge, ',');
      if (parts.size() != 2) throw UsageError{"--edge expects two ids as a,b"};
      site = BlowUpSite::edge(parse_i64(parts[0], "edge endpoint"),
                              parse_i64(parts[1], "edge endpoint"));
    } else if (bu_vertex_opt->count() > 0) {
      site = BlowUpSite::free_point(bu_vertex);
    } else {
      throw UsageError{"one of --edge or --vertex is required"};
    }
    emit_graph(blow_up(g, site), format, out);
  });

  std::string bd_arg;
  std::int64_t bd_vertex = 0;
  auto* bd_cmd = app.add_subcommand("blowdown", "blow down a -1 vertex");
  bd_cmd->add_option("graph", bd_arg, "graph file or inline constructor")->required();
  bd_cmd->add_option("--vertex", bd_vertex, "vertex to blow down")->required();
  add_format(bd_cmd);
  bd_cmd->callback(
      [&] { emit_graph(blow_down(load_graph(bd_arg), bd_vertex), format, out); });

  std::string pt_arg;
  auto* pt_cmd = app.add_subcommand(
      "pitilde", "blow up the middle of every even string to expose central vertices");
  pt_cmd->add_option("graph", pt_arg, "graph file or inline constructor")->required();
  add_format(pt_cmd);
  pt_cmd->callback([&] {
    const PiTildeResult r = pi_tilde(load_graph(pt_arg));
    const std::vector<VertexId> centres = central_vertices(r);
    if (format == "dot") {
      std::map<VertexId, std::string> extra;
      for (VertexId id : centres) extra[id] = "central";
      out << graph_to_dot(r.graph, extra);
      return;
    }
    if (format == "text") {
      out << graph_to_text(r.graph) << "\ncentral:";
      for (VertexId id : centres) out << " " << id;
      out << "\n";
      return;
    }
    Json j;
    j["format"] = "pitilde/v1";
    j["graph"] = Json::parse(graph_to_json(r.graph));
    j["l_nodes"] = r.strings.l_nodes;
    j["strings"] = Json::array();
    for (const TautString& s : r.strings.strings) {
      Json js;
      js["from"] = s.from;
      js["to"] = s.to;
      js["interior"] = s.interior;
      j["strings"].push_back(std::move(js));
    }
    j["central_vertices"] = centres;
    out << j.dump() << "\n";
  });

  std::string bnp_arg;
  auto* bnp_cmd =
      app.add_subcommand("bnp", "inner metric descriptor: L-nodes and strings");
  bnp_cmd->add_option("graph", bnp_arg, "graph file or inline constructor")
      ->required();
  add_format(bnp_cmd);
  bnp_cmd->callback([&] {
    const BnpDescriptor d = bnp_descriptor(load_graph(bnp_arg));
    if (format == "dot") throw UsageError{"--format dot is not supported for bnp"};
    if (format == "text") {
      std::ostringstream line;
      for (std::size_t i = 0; i < d.l_nodes.size(); ++i) {
        if (i) line << ' ';
        line << "L(" << d.l_nodes[i].curvettes << ")";
        if (i < d.strings.size())
          line << " S(" << rat_str(d.strings[i].inner_rate) << ")";
      }
      out << line.str() << "\n";
      return;
    }
    out << descriptor_to_json(d) << "\n";
  });

  std::string cmp_a, cmp_b;
  auto* cmp_cmd = app.add_subcommand(
      "compare", "topological and inner-metric comparison of two graphs");
  cmp_cmd->add_option("first", cmp_a, "graph file or inline constructor")->required();
  cmp_cmd->add_option("second", cmp_b, "graph file or inline constructor")
      ->required();
  add_format(cmp_cmd);
  cmp_cmd->callback([&] {
    const CompareReport rep = compare(load_graph(cmp_a), load_graph(cmp_b));
    const char* topo = topo_verdict_name(rep.topo);
    const char* bl =
        rep.bilipschitz_equal ? "BilipschitzEqual" : "BilipschitzDistinct";
    if (format == "dot")
      throw UsageError{"--format dot is not supported for compare"};
    if (format == "text") {
      out << "topology: " << topo << "\nbilipschitz: " << bl << "\n";
      if (rep.witness) out << "witness: " << *rep.witness << "\n";
      return;
    }
    Json j;
    j["topology"] = topo;
    j["bilipschitz"] = bl;
    if (rep.witness)
      j["witness"] = *rep.witness;
    else
      j["witness"] = nullptr;
    out << j.dump() << "\n";
  });

  std::string cc_arg;
  auto* cc_cmd = app.add_subcommand("cusp-check", "cusp cycle recognition");
  cc_cmd->add_option("graph", cc_arg, "graph file or inline constructor")->required();
  add_format(cc_cmd);
  cc_cmd->callback([&] {
    const PlumbingGraph g = load_graph(cc_arg);
    const bool yes = is_cusp_graph(g);
    if (format == "dot")
      throw UsageError{"--format dot is not supported for cusp-check"};
    if (format == "text") {
      out << "cusp: " << (yes ? "yes" : "no") << "\n";
      if (yes) {
        out << "word:";
        for (std::int64_t b : cusp_word(g).entries) out << " " << b;
        out << "\n";
      }
      return;
    }
    Json j;
    j["is_cusp"] = yes;
    if (yes) j["word"] = cusp_word(g).entries;
    out << j.dump() << "\n";
  });

  std::string mono_arg;
  auto* mono_cmd =
      app.add_subcommand("monodromy", "torus bundle monodromy of a cusp graph");
  mono_cmd->add_option("graph", mono_arg, "graph file or inline constructor")
      ->required();
  add_format(mono_cmd);
  mono_cmd->callback([&] {
    const CuspWord w = cusp_word(load_graph(mono_arg));
    const MonodromyMatrix m = monodromy(w.entries);
    const bool cond = m.trace() >= 3;
    if (format == "dot")
      throw UsageError{"--format dot is not supported for monodromy"};
    if (format == "text") {
      out << "matrix: " << m.a << " " << m.b << " / " << m.c << " " << m.d
          << "\ntrace: " << m.trace()
          << "\ntrace_condition: " << (cond ? "true" : "false") << "\n";
      return;
    }
    Json j;
    j["matrix"] = Json::array({Json::array({int_to_json(m.a), int_to_json(m.b)}),
                               Json::array({int_to_json(m.c), int_to_json(m.d)})});
    j["trace"] = int_to_json(m.trace());
    j["trace_condition"] = cond;
    out << j.dump() << "\n";
  });

  std::int64_t pmax = 0;
  bool sl_verbose = false;
  auto* sl_cmd = app.add_subcommand(
      "survey-lens", "scan lens pairs (p,q)/(p,p-q) for descriptor/graph mismatches");
  sl_cmd->add_option("--pmax", pmax, "largest p to scan")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, i64max));
  sl_cmd->add_flag("--verbose", sl_verbose, "write per-pair findings to stderr");
  add_format(sl_cmd);
  sl_cmd->callback([&] {
    const SurveyReport rep = survey_lens(pmax);
    print_survey(rep, "lens", format, out, err, sl_verbose);
    exit_code = rep.ok() ? 0 : 1;
  });

  std::int64_t kmax = 0, bmax = 0;
  bool sc_verbose = false;
  auto* sc_cmd = app.add_subcommand(
      "survey-cusp", "scan cusp words against their duals for mismatches");
  sc_cmd->add_option("--kmax", kmax, "largest cycle length")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, i64max));
  sc_cmd->add_option("--bmax", bmax, "largest weight")
      ->required()
      ->check(CLI::Range(std::int64_t{3}, i64max));
  sc_cmd->add_flag("--verbose", sc_verbose, "write per-pair findings to stderr");
  add_format(sc_cmd);
  sc_cmd->callback([&] {
    const SurveyReport rep = survey_cusp(kmax, bmax);
    print_survey(rep, "cusp", format, out, err, sc_verbose);
    exit_code = rep.ok() ? 0 : 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace plumb

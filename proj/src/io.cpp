#include "plumb/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "plumb/cusp.hpp"
#include "plumb/lens.hpp"

namespace plumb {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kGraphTag = "plumbing-graph/v1";
constexpr const char* kDivisorTag = "divisor/v1";
constexpr const char* kDescriptorTag = "bnp-descriptor/v1";

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail(Errc::bad_format, what + " is not an integer");
    }
  }
  fail(Errc::bad_format, what + " is not an integer");
}

std::int64_t i64_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    fail(Errc::bad_format, what + " is not an integer");
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    fail(Errc::bad_format, what + " is out of range");
  return j.get<std::int64_t>();
}

std::int64_t i64_from_string(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    fail(Errc::bad_format, what + " '" + s + "' is not an integer");
  return v;
}

Int big_from_string(const std::string& s, const std::string& what) {
  try {
    if (s.empty()) throw std::runtime_error("empty");
    return Int(s);
  } catch (const std::exception&) {
    fail(Errc::bad_format, what + " '" + s + "' is not an integer");
  }
}

std::string rat_to_string(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return Rat(int_from_json(j, what));
  if (!j.is_string()) fail(Errc::bad_format, what + " is not a rational");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    fail(Errc::bad_format, what + " '" + s + "' is not a rational");
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::bad_format, std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::bad_format, std::string("missing field '") + key + "'");
  return j.at(key);
}

void check_tag(const Json& j, const char* tag) {
  const Json& f = field(j, "format");
  if (!f.is_string() || f.get<std::string>() != tag)
    fail(Errc::bad_format, std::string("expected format tag \"") + tag + "\"");
}

std::vector<std::pair<VertexId, VertexId>> sorted_edges(const PlumbingGraph& g) {
  auto edges = g.edges;
  for (auto& e : edges)
    if (e.second < e.first) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Vertex> sorted_vertices(const PlumbingGraph& g) {
  auto vs = g.vertices;
  std::sort(vs.begin(), vs.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  return vs;
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

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string graph_to_json(const PlumbingGraph& g) {
  Json j;
  j["format"] = kGraphTag;
  j["vertices"] = Json::array();
  for (const auto& v : sorted_vertices(g)) {
    Json jv;
    jv["id"] = v.id;
    jv["genus"] = v.genus;
    jv["euler"] = v.euler;
    jv["arrows"] = v.arrows;
    j["vertices"].push_back(std::move(jv));
  }
  j["edges"] = Json::array();
  for (const auto& e : sorted_edges(g))
    j["edges"].push_back(Json::array({e.first, e.second}));
  return j.dump();
}

PlumbingGraph graph_from_json(const std::string& text) {
  const Json j = parse_json(text);
  check_tag(j, kGraphTag);
  PlumbingGraph g;
  const Json& jvs = field(j, "vertices");
  if (!jvs.is_array()) fail(Errc::bad_format, "'vertices' is not an array");
  for (const auto& jv : jvs) {
    if (!jv.is_object()) fail(Errc::bad_format, "vertex entry is not an object");
    Vertex v;
    v.id = i64_from_json(field(jv, "id"), "vertex id");
    v.euler = i64_from_json(field(jv, "euler"), "euler number");
    v.genus = jv.contains("genus") ? i64_from_json(jv.at("genus"), "genus") : 0;
    v.arrows =
        jv.contains("arrows") ? i64_from_json(jv.at("arrows"), "arrows") : 0;
    g.vertices.push_back(v);
  }
  const Json& jes = field(j, "edges");
  if (!jes.is_array()) fail(Errc::bad_format, "'edges' is not an array");
  for (const auto& je : jes) {
    if (!je.is_array() || je.size() != 2)
      fail(Errc::bad_format, "edge entry is not a pair");
    g.edges.emplace_back(i64_from_json(je.at(0), "edge endpoint"),
                         i64_from_json(je.at(1), "edge endpoint"));
  }
  return g;
}

std::string divisor_to_json(const Divisor& d) {
  Json j;
  j["format"] = kDivisorTag;
  Json coeffs = Json::object();
  for (const auto& [id, c] : d.coefficients)
    coeffs[std::to_string(id)] = int_to_json(c);
  j["coefficients"] = std::move(coeffs);
  return j.dump();
}

Divisor divisor_from_json(const std::string& text) {
  const Json j = parse_json(text);
  check_tag(j, kDivisorTag);
  const Json& jc = field(j, "coefficients");
  if (!jc.is_object()) fail(Errc::bad_format, "'coefficients' is not an object");
  Divisor d;
  for (const auto& [key, value] : jc.items())
    d.coefficients[i64_from_string(key, "vertex id")] =
        int_from_json(value, "coefficient");
  return d;
}

namespace {

const char* shape_name(Shape::Kind k) {
  switch (k) {
    case Shape::Kind::chain:
      return "chain";
    case Shape::Kind::cycle:
      return "cycle";
    case Shape::Kind::other:
      return "other";
  }
  return "other";
}

Shape::Kind shape_from_name(const std::string& s) {
  if (s == "chain") return Shape::Kind::chain;
  if (s == "cycle") return Shape::Kind::cycle;
  if (s == "other") return Shape::Kind::other;
  fail(Errc::bad_format, "unknown shape '" + s + "'");
}

}  // namespace

std::string descriptor_to_json(const BnpDescriptor& d) {
  Json j;
  j["format"] = kDescriptorTag;
  j["shape"] = shape_name(d.shape);
  j["l_nodes"] = Json::array();
  for (const auto& l : d.l_nodes) {
    Json jl;
    jl["vertex"] = l.vertex_id;
    jl["euler"] = l.euler;
    jl["valency"] = l.valency;
    jl["curvettes"] = int_to_json(l.curvettes);
    j["l_nodes"].push_back(std::move(jl));
  }
  j["strings"] = Json::array();
  for (const auto& s : d.strings) {
    Json js;
    js["n"] = s.n;
    js["inner_rate"] = rat_to_string(s.inner_rate);
    j["strings"].push_back(std::move(js));
  }
  return j.dump();
}

BnpDescriptor descriptor_from_json(const std::string& text) {
  const Json j = parse_json(text);
  check_tag(j, kDescriptorTag);
  BnpDescriptor d;
  const Json& js = field(j, "shape");
  if (!js.is_string()) fail(Errc::bad_format, "'shape' is not a string");
  d.shape = shape_from_name(js.get<std::string>());
  const Json& jl = field(j, "l_nodes");
  if (!jl.is_array()) fail(Errc::bad_format, "'l_nodes' is not an array");
  for (const auto& l : jl) {
    if (!l.is_object()) fail(Errc::bad_format, "l_node entry is not an object");
    LNodeRecord rec;
    rec.vertex_id = i64_from_json(field(l, "vertex"), "vertex id");
    rec.euler = i64_from_json(field(l, "euler"), "euler number");
    rec.valency = i64_from_json(field(l, "valency"), "valency");
    rec.curvettes = int_from_json(field(l, "curvettes"), "curvettes");
    d.l_nodes.push_back(std::move(rec));
  }
  const Json& jss = field(j, "strings");
  if (!jss.is_array()) fail(Errc::bad_format, "'strings' is not an array");
  for (const auto& s : jss) {
    if (!s.is_object()) fail(Errc::bad_format, "string entry is not an object");
    StringRecord rec;
    rec.n = i64_from_json(field(s, "n"), "interior count");
    rec.inner_rate = rat_from_json(field(s, "inner_rate"), "inner rate");
    d.strings.push_back(std::move(rec));
  }
  return d;
}

std::string graph_to_dot(const PlumbingGraph& g,
                         const std::map<VertexId, std::string>& extra) {
  std::ostringstream out;
  out << "digraph plumbing {\n";
  out << "  edge [dir=none];\n";
  for (const auto& v : sorted_vertices(g)) {
    std::string label = std::to_string(v.id) + " / e=" +
                        std::to_string(v.euler) + " g=" +
                        std::to_string(v.genus);
    auto it = extra.find(v.id);
    if (it != extra.end()) label += " / " + it->second;
    out << "  " << dot_quote("v" + std::to_string(v.id))
        << " [label=" << dot_quote(label) << "];\n";
  }
  for (const auto& e : sorted_edges(g))
    out << "  " << dot_quote("v" + std::to_string(e.first)) << " -> "
        << dot_quote("v" + std::to_string(e.second)) << ";\n";
  for (const auto& v : sorted_vertices(g)) {
    for (std::int64_t k = 0; k < v.arrows; ++k) {
      const std::string a = "a" + std::to_string(v.id) + "_" + std::to_string(k);
      out << "  " << dot_quote(a) << " [shape=point, label=\"\"];\n";
      out << "  " << dot_quote("v" + std::to_string(v.id)) << " -> "
          << dot_quote(a) << " [dir=forward];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_text(const PlumbingGraph& g) {
  const Shape s = shape_classify(g);
  if (s.kind != Shape::Kind::other) {
    std::ostringstream out;
    out << (s.kind == Shape::Kind::chain ? "chain:" : "cycle:");
    for (VertexId id : s.order) out << ' ' << g.vertex(id).euler;
    return out.str();
  }
  std::ostringstream out;
  out << "graph:";
  for (const auto& v : sorted_vertices(g))
    out << "\n  vertex " << v.id << " e=" << v.euler << " g=" << v.genus
        << " a=" << v.arrows;
  for (const auto& e : sorted_edges(g))
    out << "\n  edge " << e.first << " " << e.second;
  return out.str();
}

PlumbingGraph load_graph(const std::string& arg) {
  if (arg.rfind("lens:", 0) == 0) {
    const auto parts = split(arg.substr(5), ',');
    if (parts.size() != 2)
      fail(Errc::bad_format, "expected lens:p,q in '" + arg + "'");
    const Int p = big_from_string(parts[0], "p");
    const Int q = big_from_string(parts[1], "q");
    return lens_graph(make_lens_params(p, q));
  }
  if (arg.rfind("cusp:", 0) == 0) {
    const auto parts = split(arg.substr(5), ',');
    std::vector<std::int64_t> entries;
    for (const auto& part : parts)
      entries.push_back(i64_from_string(part, "cusp entry"));
    return cusp_graph(make_cusp_word(entries));
  }
  std::ifstream in(arg);
  if (!in) fail(Errc::bad_format, "cannot read '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

}  // namespace plumb

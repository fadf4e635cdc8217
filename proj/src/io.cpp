#include "curvetrace/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "curvetrace/error.hpp"

namespace curvetrace {

const char* const kToolVersion = "0.1.0";

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

EdgeEnd end_from_json(const Json& j, const std::string& where) {
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_number_integer()) {
    return EdgeEnd{j[0].get<std::string>(), j[1].get<int>()};
  }
  if (j.is_object() && j.contains("vertex") && j["vertex"].is_string()) {
    const int slot = j.contains("slot") ? j["slot"].get<int>() : 1;
    return EdgeEnd{j["vertex"].get<std::string>(), slot};
  }
  bad(where + ": expected {\"vertex\": id, \"slot\": n} or [id, n]");
}

std::size_t edge_by_id(const PantsGraph& g, const std::string& id, const char* file_kind) {
  const auto e = g.edge_index(id);
  if (!e) bad(std::string(file_kind) + " names unknown edge '" + id + "'");
  return *e;
}

double finite_number(const Json& v, const std::string& where) {
  if (!v.is_number()) bad(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad(where + ": value is not finite");
  return x;
}

Json matrix_entries(const Mat2& m) {
  Json out = Json::array();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.push_back(m(r, c).real());
      out.push_back(m(r, c).imag());
    }
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    bad("malformed JSON in '" + path + "': " + ex.what());
  }
}

PantsGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j["vertices"].is_array() ||
      !j["edges"].is_array()) {
    bad("graph must be an object with 'vertices' and 'edges' arrays");
  }
  std::vector<Vertex> vertices;
  for (const Json& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string()) bad("vertex needs a string 'id'");
    const std::string kind = v.contains("kind") ? lower(v["kind"].get<std::string>()) : "trinion";
    if (kind != "trinion" && kind != "boundary") {
      bad("vertex '" + v["id"].get<std::string>() + "' has unknown kind '" + kind + "'");
    }
    vertices.push_back(Vertex{v["id"].get<std::string>(), kind == "trinion" ? VertexKind::Trinion : VertexKind::Boundary});
  }
  std::vector<Edge> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string()) bad("edge needs a string 'id'");
    const std::string id = e["id"].get<std::string>();
    if (!e.contains("end0") || !e.contains("end1")) bad("edge '" + id + "' needs 'end0' and 'end1'");
    Edge edge{id, end_from_json(e["end0"], "edge '" + id + "' end0"), end_from_json(e["end1"], "edge '" + id + "' end1"),
              false};
    if (e.contains("reversed")) {
      if (!e["reversed"].is_boolean()) bad("edge '" + id + "': 'reversed' must be a boolean");
      edge.reversed = e["reversed"].get<bool>();
    }
    edges.push_back(std::move(edge));
  }
  return PantsGraph(std::move(vertices), std::move(edges));
}

Json graph_to_json(const PantsGraph& g) {
  Json out;
  out["vertices"] = Json::array();
  for (const Vertex& v : g.vertices()) {
    out["vertices"].push_back({{"id", v.id}, {"kind", v.kind == VertexKind::Trinion ? "trinion" : "boundary"}});
  }
  out["edges"] = Json::array();
  for (const Edge& e : g.edges()) {
    out["edges"].push_back({{"id", e.id},
                            {"end0", {{"vertex", e.end0.vertex}, {"slot", e.end0.slot}}},
                            {"end1", {{"vertex", e.end1.vertex}, {"slot", e.end1.slot}}},
                            {"reversed", e.reversed}});
  }
  return out;
}

PantsGraph load_graph(const std::string& path) {
  try {
    return graph_from_json(read_json_file(path));
  } catch (const nlohmann::json::exception& ex) {
    bad("graph file '" + path + "': " + ex.what());
  }
}

DehnParameter dehn_from_json(const PantsGraph& g, const Json& j) {
  if (!j.is_object()) bad("Dehn file must map edge ids to [m, t]");
  DehnParameter d = DehnParameter::zero(g.edge_count());
  for (const auto& [id, v] : j.items()) {
    const std::size_t e = edge_by_id(g, id, "Dehn file");
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      bad("Dehn entry for '" + id + "' must be [m, t] with integers");
    }
    d.m[e] = v[0].get<int>();
    d.t[e] = v[1].get<int>();
  }
  return d;
}

Json dehn_to_json(const PantsGraph& g, const DehnParameter& d) {
  Json out = Json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e) out[g.edge(e).id] = {d.m.at(e), d.t.at(e)};
  return out;
}

DehnParameter load_dehn(const PantsGraph& g, const std::string& path) {
  return dehn_from_json(g, read_json_file(path));
}

AngleVector angles_from_json(const PantsGraph& g, const Json& j) {
  if (!j.is_object()) bad("angle file must map edge ids to numbers");
  AngleVector a{std::vector<double>(g.edge_count(), std::nan(""))};
  for (const auto& [id, v] : j.items()) {
    const double x = finite_number(v, "angle of '" + id + "'");
    if (x < 0.0 || x > std::numbers::pi) bad("angle of '" + id + "' lies outside [0, pi]");
    a.a[edge_by_id(g, id, "angle file")] = x;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (std::isnan(a.a[e])) bad("angle file has no entry for edge '" + g.edge(e).id + "'");
  }
  return a;
}

TwistVector twists_from_json(const PantsGraph& g, const Json& j) {
  if (!j.is_object()) bad("twist file must map edge ids to numbers");
  TwistVector t{std::vector<double>(g.edge_count(), 0.0)};
  for (const auto& [id, v] : j.items()) {
    const std::size_t e = edge_by_id(g, id, "twist file");
    if (!g.is_internal(e)) bad("twist file sets external edge '" + id + "'");
    t.theta[e] = reduce_unit(finite_number(v, "twist of '" + id + "'"));
  }
  return t;
}

Json angles_to_json(const PantsGraph& g, const AngleVector& a) {
  Json out = Json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e) out[g.edge(e).id] = a.a.at(e);
  return out;
}

Json twists_to_json(const PantsGraph& g, const TwistVector& t) {
  Json out = Json::object();
  for (std::size_t e : g.internal_edges()) out[g.edge(e).id] = t.theta.at(e);
  return out;
}

Json representation_to_json(const PantsGraph& g, const RepresentationPoint& rep) {
  Json out;
  out["angles"] = angles_to_json(g, rep.angles());
  out["twists"] = twists_to_json(g, rep.twists());
  out["trinions"] = Json::array();
  for (std::size_t tr = 0; tr < rep.trinions().size(); ++tr) {
    out["trinions"].push_back({{"id", g.trinion_id(tr)},
                               {"x", matrix_entries(rep.trinions()[tr].x)},
                               {"y", matrix_entries(rep.trinions()[tr].y)}});
  }
  return out;
}

std::string format_route(const PantsGraph& g, const CurveRoute& r) {
  std::ostringstream os;
  os << "component,step,kind,id,from,to,winding,encircled,direction\n";
  for (std::size_t c = 0; c < r.components.size(); ++c) {
    const RouteComponent& comp = r.components[c];
    if (comp.core_edge) {
      os << c << ",0,core," << g.edge(*comp.core_edge).id << ",,,,,\n";
      continue;
    }
    for (std::size_t s = 0; s < comp.steps.size(); ++s) {
      os << c << ',' << s << ',';
      if (const auto* x = std::get_if<AnnulusCrossing>(&comp.steps[s])) {
        os << "crossing," << g.edge(x->edge).id << ',' << x->inlet << ',' << x->outlet << ',' << x->winding << ",,"
           << (x->forward ? "forward" : "backward") << '\n';
      } else {
        const auto& a = std::get<TrinionArc>(comp.steps[s]);
        os << "arc," << g.trinion_id(a.trinion) << ',' << a.from_slot << ':' << a.from_pos << ',' << a.to_slot
           << ':' << a.to_pos << ",," << a.encircled << ',' << (a.type().forward ? "forward" : "backward") << '\n';
      }
    }
  }
  return os.str();
}

std::string format_double(double x) {
  if (!std::isfinite(x)) throw std::logic_error("refusing to emit a non-finite number");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string provenance_header(const std::string& command_line, const std::string& seed) {
  std::string out = "# tool: curvetrace ";
  out += kToolVersion;
  out += "\n# command: " + command_line + "\n# seed: " + seed + "\n";
  return out;
}

}  // namespace curvetrace

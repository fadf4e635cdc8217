#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvetrace/error.hpp"
#include "curvetrace/fourier.hpp"
#include "curvetrace/independence.hpp"
#include "curvetrace/io.hpp"
#include "curvetrace/suite.hpp"
#include "curvetrace/trace.hpp"

namespace py = pybind11;
using namespace curvetrace;

namespace {

// Python-side Dehn parameters and angle/twist vectors are dicts keyed by
// edge id; they go through the same JSON readers as the CLI files.
using DehnDict = std::map<std::string, std::pair<int, int>>;
using RealDict = std::map<std::string, double>;

DehnParameter to_dehn(const PantsGraph& g, const DehnDict& d) {
  Json j = Json::object();
  for (const auto& [id, mt] : d) j[id] = {mt.first, mt.second};
  return dehn_from_json(g, j);
}

DehnDict from_dehn(const PantsGraph& g, const DehnParameter& d) {
  DehnDict out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) out[g.edge(e).id] = {d.m[e], d.t[e]};
  return out;
}

Json to_json(const RealDict& d) {
  Json j = Json::object();
  for (const auto& [id, x] : d) j[id] = x;
  return j;
}

RealDict from_vector(const PantsGraph& g, const std::vector<double>& v, bool internal_only) {
  RealDict out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!internal_only || g.is_internal(e)) out[g.edge(e).id] = v[e];
  }
  return out;
}

std::size_t edge_arg(const PantsGraph& g, const std::string& id) {
  const auto e = g.edge_index(id);
  if (!e) throw Error(ErrorCode::InvalidInput, "unknown edge '" + id + "'");
  return *e;
}

// A representation point bundled with the graph it was built on.
struct Point {
  PantsGraph graph;
  RepresentationPoint rep;
};

py::list route_to_python(const PantsGraph& g, const CurveRoute& r) {
  py::list comps;
  for (const RouteComponent& c : r.components) {
    py::list steps;
    if (c.core_edge) {
      py::dict s;
      s["kind"] = "core";
      s["edge"] = g.edge(*c.core_edge).id;
      steps.append(s);
    }
    for (const RouteStep& step : c.steps) {
      py::dict s;
      if (const auto* x = std::get_if<AnnulusCrossing>(&step)) {
        s["kind"] = "crossing";
        s["edge"] = g.edge(x->edge).id;
        s["inlet"] = x->inlet;
        s["outlet"] = x->outlet;
        s["winding"] = x->winding;
        s["forward"] = x->forward;
      } else {
        const auto& a = std::get<TrinionArc>(step);
        s["kind"] = "arc";
        s["trinion"] = g.trinion_id(a.trinion);
        s["from"] = py::make_tuple(a.from_slot, a.from_pos);
        s["to"] = py::make_tuple(a.to_slot, a.to_pos);
        s["encircled"] = a.encircled;
        s["parallel_index"] = a.parallel_index;
      }
      steps.append(s);
    }
    comps.append(steps);
  }
  return comps;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Trace functions of multicurves on SU(2) character varieties";
  static py::exception<Error> exc(m, "CurvetraceError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PantsGraph>(m, "Graph")
      .def_static("from_json", [](const std::string& text) { return graph_from_json(Json::parse(text)); })
      .def_static("load", &load_graph)
      .def("to_json", [](const PantsGraph& g) { return graph_to_json(g).dump(); })
      .def_property_readonly("edge_ids",
                             [](const PantsGraph& g) {
                               std::vector<std::string> ids;
                               for (const Edge& e : g.edges()) ids.push_back(e.id);
                               return ids;
                             })
      .def_property_readonly("internal_edge_ids",
                             [](const PantsGraph& g) {
                               std::vector<std::string> ids;
                               for (std::size_t e : g.internal_edges()) ids.push_back(g.edge(e).id);
                               return ids;
                             })
      .def_property_readonly("trinion_count", &PantsGraph::trinion_count)
      .def_property_readonly("euler_characteristic", &PantsGraph::euler_characteristic)
      .def("validate", [](const PantsGraph& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const Violation& v : validate_graph(g)) out.emplace_back(v.code, v.message);
        return out;
      });

  py::class_<Point>(m, "Representation")
      .def_property_readonly("angles", [](const Point& p) { return from_vector(p.graph, p.rep.angles().a, false); })
      .def_property_readonly("twists",
                             [](const Point& p) { return from_vector(p.graph, p.rep.twists().theta, true); })
      .def("holonomy", [](const Point& p, const std::string& trinion, int slot) {
        const auto t = p.graph.trinion_index(trinion);
        if (!t) throw Error(ErrorCode::InvalidInput, "unknown trinion '" + trinion + "'");
        return Eigen::Matrix2cd(p.rep.slot_loop(*t, slot));
      })
      .def("act", [](const Point& p, const RealDict& shifts) {
        TorusPoint t{std::vector<double>(p.graph.edge_count(), 0.0)};
        for (const auto& [id, x] : shifts) t.t[edge_arg(p.graph, id)] = x;
        return Point{p.graph, act(p.graph, p.rep, t)};
      })
      .def("to_json", [](const Point& p) { return representation_to_json(p.graph, p.rep).dump(); });

  m.def("validate_dehn", [](const PantsGraph& g, const DehnDict& d) {
    // Unknown ids are input errors, not violations, so resolve them first.
    std::vector<std::pair<std::string, std::string>> out;
    for (const Violation& v : validate_dehn(g, to_dehn(g, d))) out.emplace_back(v.code, v.message);
    return out;
  });
  m.def("enumerate_dehn", [](const PantsGraph& g, int m_max, int t_max, bool include_boundary) {
    std::vector<DehnDict> out;
    for (const DehnParameter& d : enumerate_dehn(g, m_max, t_max, include_boundary)) out.push_back(from_dehn(g, d));
    return out;
  }, py::arg("graph"), py::arg("m_max"), py::arg("t_max"), py::arg("include_boundary") = false);
  m.def("twist", [](const PantsGraph& g, const DehnDict& d, const std::string& edge, int ell) {
    return from_dehn(g, twist(g, to_dehn(g, d), edge_arg(g, edge), ell));
  });
  m.def("route", [](const PantsGraph& g, const DehnDict& d) { return route_to_python(g, route(g, to_dehn(g, d))); });

  m.def("in_delta", [](const PantsGraph& g, const RealDict& angles) {
    return std::string(to_string(in_delta(g, angles_from_json(g, to_json(angles)))));
  });
  m.def("build_representation", [](const PantsGraph& g, const RealDict& angles, const RealDict& twists) {
    return Point{g, build_representation(g, angles_from_json(g, to_json(angles)), twists_from_json(g, to_json(twists)))};
  }, py::arg("graph"), py::arg("angles"), py::arg("twists") = RealDict{});
  m.def("sample_interior", [](const PantsGraph& g, double margin, std::uint64_t seed) {
    const InteriorSample s = sample_interior(g, margin, seed);
    return Point{g, build_representation(g, s.angles, s.twists)};
  }, py::arg("graph"), py::arg("margin") = 0.05, py::arg("seed") = 1);

  m.def("trace", [](const Point& p, const DehnDict& d) {
    const TraceValue v = trace_of_route(p.rep, route(p.graph, to_dehn(p.graph, d)));
    return py::make_tuple(v.value, v.factors);
  }, "Trace function value and per-component factors");

  m.def("isotypes", [](const Point& p, const DehnDict& d, std::optional<std::vector<int>> grid) {
    const DehnParameter dp = to_dehn(p.graph, d);
    std::vector<int> n;
    if (grid) {
      n = *grid;
    } else {
      for (std::size_t e : p.graph.internal_edges()) n.push_back(dp.m[e] + 1);
    }
    const IsotypeTable t = isotypes(p.graph, p.rep, route(p.graph, dp), n);
    py::dict out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::vector<int> k = t.key(i);
      out[py::tuple(py::cast(k))] = t.coefficients[i];
    }
    return out;
  }, py::arg("point"), py::arg("dehn"), py::arg("grid") = py::none());
  m.def("top_isotype", [](const Point& p, const DehnDict& d) {
    const TopIsotypes t = top_isotype(p.graph, p.rep, to_dehn(p.graph, d));
    py::dict out;
    for (const auto& [k, c] : t.entries) out[py::tuple(py::cast(k))] = c;
    return out;
  });
  m.def("twist_phase_check", [](const Point& p, const DehnDict& d, const std::string& edge, int ell) {
    return twist_phase_check(p.graph, p.rep, to_dehn(p.graph, d), edge_arg(p.graph, edge), ell);
  });
  m.def("intersection_number", [](const Point& p, const DehnDict& d, const std::string& edge, int k_max) {
    return intersection_number(p.graph, p.rep, edge_arg(p.graph, edge), route(p.graph, to_dehn(p.graph, d)), k_max);
  });
  m.def("phi", &phi, py::arg("k"), py::arg("ell"), py::arg("alpha"));

  m.def("word_trace", [](const std::map<std::string, Eigen::Matrix2cd>& rho, const std::string& w) {
    return word_trace(Assignment(rho.begin(), rho.end()), parse_word(w));
  });
  m.def("check_trace_relation",
        [](const std::map<std::string, Eigen::Matrix2cd>& rho, const std::string& a, const std::string& b) {
          return check_trace_relation(Assignment(rho.begin(), rho.end()), parse_word(a), parse_word(b));
        });

  m.def("independence", [](const PantsGraph& g, int m_max, int t_max, std::size_t samples, std::uint64_t seed,
                           double tol) {
    const std::vector<DehnParameter> params = enumerate_dehn(g, m_max, t_max);
    const std::size_t rows = samples ? samples : 3 * params.size();
    const RankReport r = rank_report(build_matrix(g, params, rows, seed), tol);
    py::dict out;
    out["rank"] = r.rank;
    out["columns"] = r.columns;
    out["singular_values"] = r.singular_values;
    out["verdict"] = r.verdict();
    out["independent"] = r.independent;
    return out;
  }, py::arg("graph"), py::arg("m_max"), py::arg("t_max"), py::arg("samples") = 0, py::arg("seed") = 1,
        py::arg("tol") = 1e-8);

  m.def("suite", [](const PantsGraph& g, std::uint64_t seed) {
    SuiteOptions o;
    o.seed = seed;
    py::list out;
    for (const CriterionResult& c : run_suite(g, o).criteria) {
      py::dict row;
      row["id"] = c.id;
      row["name"] = c.name;
      row["pass"] = c.pass;
      row["metric"] = c.metric;
      row["threshold"] = c.threshold;
      row["detail"] = c.detail;
      out.append(row);
    }
    return out;
  }, py::arg("graph"), py::arg("seed") = 1);
}

// curvetrace: command-line front end for the curvetrace library.
//
// Exit codes: 0 success, 1 contract violation (a check failed, a
// verdict was negative), 2 input error (bad arguments, unreadable or
// invalid files, inputs outside the domain of an operation).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "curvetrace/error.hpp"
#include "curvetrace/fourier.hpp"
#include "curvetrace/independence.hpp"
#include "curvetrace/io.hpp"
#include "curvetrace/suite.hpp"
#include "curvetrace/trace.hpp"

using namespace curvetrace;

namespace {

constexpr int kExitContract = 1;
constexpr int kExitInput = 2;

struct Common {
  std::string command_line;
  std::string output;  // empty => stdout
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::InvalidInput, "cannot write output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

std::size_t internal_edge_arg(const PantsGraph& g, const std::string& id) {
  const auto e = g.edge_index(id);
  if (!e) throw Error(ErrorCode::InvalidInput, "unknown edge '" + id + "'");
  if (!g.is_internal(*e)) throw Error(ErrorCode::InvalidInput, "edge '" + id + "' is external");
  return *e;
}

// Base point from explicit files, or sampled from the seed.
RepresentationPoint base_point(const PantsGraph& g, const std::string& angles_path,
                               const std::string& twists_path, std::uint64_t seed, double margin) {
  if (!angles_path.empty()) {
    const AngleVector a = angles_from_json(g, read_json_file(angles_path));
    const TwistVector t = twists_path.empty() ? TwistVector{std::vector<double>(g.edge_count(), 0.0)}
                                              : twists_from_json(g, read_json_file(twists_path));
    return build_representation(g, a, t);
  }
  const InteriorSample s = sample_interior(g, margin, seed);
  return build_representation(g, s.angles, s.twists);
}

std::string csv_header(const Common& c, const std::string& seed) { return provenance_header(c.command_line, seed); }

Json provenance_json(const Common& c, const std::string& seed) {
  Json p;
  p["tool"] = std::string("curvetrace ") + kToolVersion;
  p["command"] = c.command_line;
  p["seed"] = seed;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  Common common;
  common.command_line = join_args(argc, argv);

  CLI::App app{"Trace functions of multicurves on SU(2) character varieties"};
  app.require_subcommand(1);
  app.add_option("-o,--output", common.output, "Write output to this file instead of stdout");

  std::string graph_path, dehn_path, angles_path, twists_path, edge_id;
  std::uint64_t seed = 1;
  double margin = 0.05;

  auto* validate = app.add_subcommand("validate", "Check a pants graph (and optionally a Dehn parameter)");
  validate->add_option("graph", graph_path, "Graph JSON file")->required();
  validate->add_option("--dehn", dehn_path, "Dehn parameter JSON file");

  auto* route_cmd = app.add_subcommand("route", "List the closed components of C(m, t)");
  route_cmd->add_option("graph", graph_path)->required();
  route_cmd->add_option("dehn", dehn_path)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate the trace function of C(m, t) at a point");
  eval->add_option("graph", graph_path)->required();
  eval->add_option("dehn", dehn_path)->required();
  eval->add_option("--angles", angles_path, "Angle JSON file")->required();
  eval->add_option("--twists", twists_path, "Twist JSON file");

  std::size_t count = 1;
  auto* sample = app.add_subcommand("sample", "Sample interior representation points");
  sample->add_option("graph", graph_path)->required();
  sample->add_option("--seed", seed);
  sample->add_option("--margin", margin);
  sample->add_option("--count", count, "Number of points (row i uses a seed derived from --seed)");

  auto* delta = app.add_subcommand("delta", "Classify an angle vector against the moment polytope");
  delta->add_option("graph", graph_path)->required();
  delta->add_option("angles", angles_path)->required();

  std::vector<int> grid;
  auto* fourier = app.add_subcommand("fourier", "Isotype table of a trace function along the torus orbit");
  fourier->add_option("graph", graph_path)->required();
  fourier->add_option("dehn", dehn_path)->required();
  fourier->add_option("--seed", seed);
  fourier->add_option("--margin", margin);
  fourier->add_option("--edge", edge_id, "Use the circle action of this edge only");
  fourier->add_option("--grid", grid, "N per internal edge (or one N with --edge)");
  fourier->add_option("--angles", angles_path);
  fourier->add_option("--twists", twists_path);

  int k_max = -1;
  auto* intersect = app.add_subcommand("intersect", "Recover intersection numbers from isotypes");
  intersect->add_option("graph", graph_path)->required();
  intersect->add_option("dehn", dehn_path)->required();
  intersect->add_option("--edge", edge_id, "Internal edge (default: all)");
  intersect->add_option("--k-max", k_max, "Largest k tried (default m_j + 2)");
  intersect->add_option("--seed", seed);
  intersect->add_option("--margin", margin);

  int ell = 1;
  auto* twist_check = app.add_subcommand("twist-check", "Fractional-twist phase law residual");
  twist_check->add_option("graph", graph_path)->required();
  twist_check->add_option("dehn", dehn_path)->required();
  twist_check->add_option("--edge", edge_id)->required();
  twist_check->add_option("--ell", ell);
  twist_check->add_option("--seed", seed);
  twist_check->add_option("--margin", margin);

  int m_max = 1, t_max = 1;
  std::size_t samples = 0;
  double tol = 1e-8;
  bool allow_many = false;
  auto* indep = app.add_subcommand("independence", "Numerical rank of the trace evaluation matrix");
  indep->add_option("graph", graph_path)->required();
  indep->add_option("--m-max", m_max);
  indep->add_option("--t-max", t_max);
  indep->add_option("--samples", samples, "Rows (default 3x the column count)");
  indep->add_option("--seed", seed);
  indep->add_option("--tol", tol);
  indep->add_option("--margin", margin);
  indep->add_flag("--allow-many-columns", allow_many, "Lift the 500-column cap");

  bool no_inprocess = false;
  auto* suite = app.add_subcommand("suite", "Run the acceptance checklist on a surface");
  suite->add_option("graph", graph_path)->required();
  suite->add_option("--seed", seed);
  suite->add_flag("--skip-inprocess-determinism", no_inprocess, "Skip the 1-vs-4-thread rerun (criterion 9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const std::string seed_text = std::to_string(seed);
    const PantsGraph g = graph_from_json(read_json_file(graph_path));
    Output out_file(common.output);
    std::ostream& out = out_file.stream();

    if (*validate) {
      std::vector<Violation> v = validate_graph(g);
      if (v.empty() && !dehn_path.empty()) v = validate_dehn(g, load_dehn(g, dehn_path));
      out << csv_header(common, "none") << "code,message\n";
      for (const Violation& x : v) out << x.code << ",\"" << x.message << "\"\n";
      if (!v.empty()) {
        std::cerr << "invalid: " << v.size() << " violation(s)\n";
        return kExitContract;
      }
      std::cerr << "ok\n";
      return 0;
    }

    require_valid(g);

    if (*route_cmd) {
      const CurveRoute r = route(g, load_dehn(g, dehn_path));
      out << csv_header(common, "none") << format_route(g, r);
      return 0;
    }

    if (*eval) {
      const DehnParameter d = load_dehn(g, dehn_path);
      const RepresentationPoint rep = base_point(g, angles_path, twists_path, seed, margin);
      const TraceValue v = trace_of_route(rep, route(g, d));
      out << csv_header(common, "none") << "component,factor\n";
      for (std::size_t i = 0; i < v.factors.size(); ++i) out << i << ',' << format_double(v.factors[i]) << '\n';
      out << "total," << format_double(v.value) << '\n';
      return 0;
    }

    if (*sample) {
      Json doc;
      doc["provenance"] = provenance_json(common, seed_text);
      doc["points"] = Json::array();
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = count == 1 ? seed : mix_seed(seed, i);
        const InteriorSample smp = sample_interior(g, margin, s);
        Json p = representation_to_json(g, build_representation(g, smp.angles, smp.twists));
        p["seed"] = s;
        p["draws"] = smp.draws;
        p["region"] = to_string(in_delta(g, smp.angles));
        p["face_distance"] = face_distance(g, smp.angles);
        doc["points"].push_back(std::move(p));
      }
      out << doc.dump(2) << '\n';
      return 0;
    }

    if (*delta) {
      const AngleVector a = angles_from_json(g, read_json_file(angles_path));
      out << csv_header(common, "none") << "region,face_distance\n"
          << to_string(in_delta(g, a)) << ',' << format_double(face_distance(g, a)) << '\n';
      return 0;
    }

    if (*fourier) {
      const DehnParameter d = load_dehn(g, dehn_path);
      const RepresentationPoint rep = base_point(g, angles_path, twists_path, seed, margin);
      const CurveRoute r = route(g, d);
      out << csv_header(common, angles_path.empty() ? seed_text : "none");
      if (!edge_id.empty()) {
        const std::size_t e = internal_edge_arg(g, edge_id);
        const int N = grid.empty() ? d.m[e] + 1 : grid.at(0);
        const std::vector<Complex> c = circle_isotypes(g, rep, r, e, N);
        out << "k_" << g.edge(e).id << ",real,imag,modulus\n";
        for (int k = -N; k <= N; ++k) {
          const Complex z = c[static_cast<std::size_t>(k + N)];
          out << k << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << ','
              << format_double(std::abs(z)) << '\n';
        }
        return 0;
      }
      if (grid.empty()) {
        for (std::size_t e : g.internal_edges()) grid.push_back(d.m[e] + 1);
      }
      const IsotypeTable t = isotypes(g, rep, r, grid);
      for (std::size_t e : t.edges) out << "k_" << g.edge(e).id << ',';
      out << "real,imag,modulus\n";
      for (std::size_t i = 0; i < t.size(); ++i) {
        for (int k : t.key(i)) out << k << ',';
        const Complex z = t.coefficients[i];
        out << format_double(z.real()) << ',' << format_double(z.imag()) << ',' << format_double(std::abs(z)) << '\n';
      }
      return 0;
    }

    if (*intersect) {
      const DehnParameter d = load_dehn(g, dehn_path);
      const RepresentationPoint rep = base_point(g, "", "", seed, margin);
      const CurveRoute r = route(g, d);
      std::vector<std::size_t> edges;
      if (edge_id.empty()) {
        edges = g.internal_edges();
      } else {
        edges.push_back(internal_edge_arg(g, edge_id));
      }
      out << csv_header(common, seed_text) << "edge,intersection,m\n";
      bool agree = true;
      for (std::size_t e : edges) {
        const int n = intersection_number(g, rep, e, r, k_max >= 0 ? k_max : d.m[e] + 2);
        agree = agree && n == d.m[e];
        out << g.edge(e).id << ',' << n << ',' << d.m[e] << '\n';
      }
      return agree ? 0 : kExitContract;
    }

    if (*twist_check) {
      const DehnParameter d = load_dehn(g, dehn_path);
      const RepresentationPoint rep = base_point(g, "", "", seed, margin);
      const std::size_t e = internal_edge_arg(g, edge_id);
      const double res = twist_phase_check(g, rep, d, e, ell);
      out << csv_header(common, seed_text) << "edge,k,ell,residual,pass\n"
          << g.edge(e).id << ',' << d.m[e] << ',' << ell << ',' << format_double(res) << ','
          << (res <= kVanishTolerance ? "true" : "false") << '\n';
      return res <= kVanishTolerance ? 0 : kExitContract;
    }

    if (*indep) {
      const std::vector<DehnParameter> params = enumerate_dehn(g, m_max, t_max);
      const std::size_t rows = samples ? samples : 3 * params.size();
      const EvaluationMatrix m = build_matrix(g, params, rows, seed, {margin, allow_many});
      const RankReport rep = rank_report(m, tol);
      out << csv_header(common, seed_text) << "index,singular_value,relative\n";
      const double top = rep.singular_values.empty() ? 0.0 : rep.singular_values.front();
      for (std::size_t i = 0; i < rep.singular_values.size(); ++i) {
        out << i << ',' << format_double(rep.singular_values[i]) << ','
            << format_double(top > 0.0 ? rep.singular_values[i] / top : 0.0) << '\n';
      }
      out << "# verdict: " << rep.verdict() << " (rank " << rep.rank << " of " << rep.columns << " columns, "
          << rows << " rows, rel_tol " << format_double(tol) << ")\n";
      return rep.independent ? 0 : kExitContract;
    }

    if (*suite) {
      SuiteOptions o;
      o.seed = seed;
      o.determinism_check = !no_inprocess;
      const SuiteReport rep = run_suite(g, o);
      out << csv_header(common, seed_text) << rep.to_csv();
      return rep.all_pass() ? 0 : kExitContract;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitContract;
  }
  return kExitInput;
}

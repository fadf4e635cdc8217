#include "curvetrace/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <sstream>

#include "curvetrace/error.hpp"
#include "curvetrace/fourier.hpp"
#include "curvetrace/independence.hpp"
#include "curvetrace/io.hpp"
#include "curvetrace/parallel.hpp"
#include "curvetrace/trace.hpp"

namespace curvetrace {

namespace {

// Stream ids for mix_seed, one per consumer, so criteria draw from
// independent sequences.
enum Stream : std::uint64_t {
  kPolytopeStream = 1,
  kWordStream = 2,
  kActionStream = 8,
  kBasePointStream = 1000,
  kIndependenceStream = 5000,
};

std::string num(double x) { return format_double(x); }

struct Sweep {
  std::vector<DehnParameter> params;
  std::vector<CurveRoute> routes;
  std::vector<RepresentationPoint> points;
};

std::vector<int> full_grid(const PantsGraph& g, const DehnParameter& d) {
  std::vector<int> grid;
  for (std::size_t e : g.internal_edges()) grid.push_back(d.m[e] + 1);
  return grid;
}

CriterionResult polytope_exactness(const PantsGraph& g, const SuiteOptions& o) {
  CriterionResult r{"C1", "polytope exactness", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(mix_seed(o.seed, kPolytopeStream));
  std::size_t inside = 0, outside = 0, boundary = 0, builder_mismatch = 0, tilt_mismatch = 0;
  AngleVector alpha{std::vector<double>(g.edge_count())};
  const TwistVector zero{std::vector<double>(g.edge_count(), 0.0)};
  for (std::size_t i = 0; i < o.polytope_draws; ++i) {
    for (double& a : alpha.a) a = std::numbers::pi * unit_uniform(rng);
    const DeltaRegion region = in_delta(g, alpha);
    (region == DeltaRegion::Interior ? inside : region == DeltaRegion::Boundary ? boundary : outside)++;

    bool built = true;
    try {
      build_representation(g, alpha, zero);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OutsideDelta) throw;
      built = false;
    }
    // Independent oracle: the tilted model exists iff |n_z| <= 1 at every trinion.
    bool tilt_ok = true;
    for (std::size_t tr = 0; tr < g.trinion_count(); ++tr) {
      const auto nz = tilt_cosine(alpha.a[g.slot_edge(tr, 1)], alpha.a[g.slot_edge(tr, 2)],
                                  alpha.a[g.slot_edge(tr, 3)]);
      if (nz && std::abs(*nz) > 1.0) tilt_ok = false;
    }
    const bool expect = region != DeltaRegion::Outside;
    if (built != expect) ++builder_mismatch;
    if (tilt_ok != expect) ++tilt_mismatch;
  }
  r.metric = static_cast<double>(builder_mismatch + tilt_mismatch);
  r.pass = builder_mismatch == 0 && tilt_mismatch == 0;
  r.detail = "draws=" + std::to_string(o.polytope_draws) + "; interior=" + std::to_string(inside) +
             "; boundary=" + std::to_string(boundary) + "; outside=" + std::to_string(outside) +
             "; builder disagreements=" + std::to_string(builder_mismatch) +
             "; tilt-oracle disagreements=" + std::to_string(tilt_mismatch);
  return r;
}

Word random_word(std::mt19937_64& rng, int max_length) {
  static const char* const letters = "abcABC";
  const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_length + 1));
  std::string s;
  for (int i = 0; i < len; ++i) s += letters[rng() % 6];
  return parse_word(s);
}

CriterionResult trace_relation(const SuiteOptions& o) {
  CriterionResult r{"C2", "trace relation", false, 0.0, 1e-10, ""};
  std::mt19937_64 rng(mix_seed(o.seed, kWordStream));
  double worst = 0.0;
  for (std::size_t i = 0; i < o.word_pairs; ++i) {
    Assignment rho;
    for (const char* gname : {"a", "b", "c"}) rho[gname] = random_su2(rng);
    const Word a = random_word(rng, o.word_length);
    const Word b = random_word(rng, o.word_length);
    worst = std::max(worst, check_trace_relation(rho, a, b));
  }
  r.metric = worst;
  r.pass = worst <= r.threshold;
  r.detail = "pairs=" + std::to_string(o.word_pairs) + "; max length=" + std::to_string(o.word_length) +
             "; max residual=" + num(worst);
  return r;
}

// Per (parameter, base point) results of the full-torus isotype tables.
struct FourierStats {
  double support_max = 0.0;
  double top_min = std::numeric_limits<double>::infinity();
  double reconstruction = 0.0;
};

void fourier_criteria(const PantsGraph& g, const Sweep& s, std::vector<CriterionResult>& out) {
  const std::size_t P = s.params.size();
  const std::size_t B = s.points.size();
  std::vector<FourierStats> stats(P * B);
  parallel_for(P * B, [&](std::size_t i) {
    const std::size_t p = i / B, b = i % B;
    const IsotypeTable table = isotypes(g, s.points[b], s.routes[p], full_grid(g, s.params[p]));
    const SupportReport sr = support_check(table, s.params[p]);
    FourierStats& st = stats[i];
    st.support_max = sr.max_violation;
    st.reconstruction = table.reconstruction_error;
    const TopIsotypes top = top_isotype(g, s.points[b], s.params[p]);
    st.top_min = top.min_modulus;
  });

  double support_max = 0.0, top_min = std::numeric_limits<double>::infinity(), recon = 0.0;
  std::size_t worst_support = 0, worst_top = 0;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (stats[i].support_max > support_max) {
      support_max = stats[i].support_max;
      worst_support = i / B;
    }
    if (stats[i].top_min < top_min) {
      top_min = stats[i].top_min;
      worst_top = i / B;
    }
    recon = std::max(recon, stats[i].reconstruction);
  }
  const std::string sweep = "parameters=" + std::to_string(P) + "; base points=" + std::to_string(B);

  CriterionResult c3{"C3", "isotype support", false, support_max, kVanishTolerance, ""};
  c3.pass = support_max <= kVanishTolerance && recon <= kVanishTolerance;
  c3.detail = sweep + "; max outside-support modulus=" + num(support_max) + " at " +
              dehn_to_json(g, s.params[worst_support]).dump() + "; max reconstruction error=" + num(recon);
  out.push_back(c3);

  CriterionResult c4{"C4", "extremal non-vanishing", false, top_min, kNonVanishThreshold, ""};
  c4.pass = top_min >= kNonVanishThreshold;
  const double gap = support_max > 0.0 ? std::log10(top_min / support_max) : std::numeric_limits<double>::infinity();
  c4.detail = sweep + "; min extremal modulus=" + num(top_min) + " at " + dehn_to_json(g, s.params[worst_top]).dump() +
              "; spectral gap vs C3=" + (std::isfinite(gap) ? num(gap) + " decades" : std::string("unbounded"));
  out.push_back(c4);
}

CriterionResult twist_phase(const PantsGraph& g, const Sweep& s) {
  CriterionResult r{"C5", "fractional-twist phase law", false, 0.0, kVanishTolerance, ""};
  const RepresentationPoint& rep = s.points.at(0);
  const std::size_t P = s.params.size();
  std::vector<double> twist_res(P, 0.0), law(P, 0.0);
  std::vector<int> checks(P, 0), quoted_failures(P, 0);
  parallel_for(P, [&](std::size_t p) {
    const DehnParameter& d = s.params[p];
    for (std::size_t e : g.internal_edges()) {
      if (d.m[e] < 1 || d.m[e] > 3) continue;
      for (int ell = -2; ell <= 2; ++ell) {
        twist_res[p] = std::max(twist_res[p], twist_phase_check(g, rep, d, e, ell));
        ++checks[p];
      }
    }
    law[p] = phase_law_check(g, rep, d, CoreFactor::Trace).residual;
    bool odd_core = false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) odd_core = odd_core || (d.m[e] == 0 && d.t[e] % 2 != 0);
    if (odd_core && phase_law_check(g, rep, d, CoreFactor::Quoted).residual > kVanishTolerance) quoted_failures[p] = 1;
  });
  double phase_max = 0.0, law_max = 0.0;
  int total = 0, quoted = 0;
  for (std::size_t p = 0; p < P; ++p) {
    phase_max = std::max(phase_max, twist_res[p]);
    law_max = std::max(law_max, law[p]);
    total += checks[p];
    quoted += quoted_failures[p];
  }
  r.metric = std::max(phase_max, law_max);
  r.pass = r.metric <= r.threshold;
  r.detail = "twist-phase checks=" + std::to_string(total) + "; max twist-phase residual=" + num(phase_max) +
             "; max factorized-law residual (core factor -2cos a)=" + num(law_max) +
             "; parameters where the (2cos a)^l core factor fails=" + std::to_string(quoted);
  return r;
}

CriterionResult intersection_recovery(const PantsGraph& g, const SuiteOptions& o, const Sweep& s) {
  CriterionResult r{"C6", "intersection-number recovery", false, 0.0, 0.0, ""};
  const std::size_t P = s.params.size();
  const std::size_t B = std::min(o.intersection_points, s.points.size());
  std::vector<int> mismatches(P * B, 0), checks(P * B, 0);
  parallel_for(P * B, [&](std::size_t i) {
    const std::size_t p = i / B, b = i % B;
    const DehnParameter& d = s.params[p];
    for (std::size_t e : g.internal_edges()) {
      ++checks[i];
      if (intersection_number(g, s.points[b], e, s.routes[p], d.m[e] + 2) != d.m[e]) ++mismatches[i];
    }
  });
  int bad = 0, total = 0;
  for (std::size_t i = 0; i < mismatches.size(); ++i) {
    bad += mismatches[i];
    total += checks[i];
  }
  r.metric = bad;
  r.pass = bad == 0 && B == o.intersection_points;
  r.detail = "checks=" + std::to_string(total) + " over " + std::to_string(B) +
             " base points; mismatches=" + std::to_string(bad);
  return r;
}

int independence_bound(const PantsGraph& g, const SuiteOptions& o) {
  if (o.independence_max >= 0) return o.independence_max;
  return g.internal_edges().size() <= 1 ? 2 : 1;
}

CriterionResult independence(const PantsGraph& g, const SuiteOptions& o) {
  CriterionResult r{"C7", "independence witness", false, 0.0, o.rel_tol, ""};
  const int M = independence_bound(g, o);
  const std::vector<DehnParameter> params = enumerate_dehn(g, M, M);
  const auto rows = static_cast<std::size_t>(std::ceil(o.oversampling * static_cast<double>(params.size())));
  bool all_independent = true;
  double worst_ratio = std::numeric_limits<double>::infinity();
  std::string ranks;
  EvaluationMatrix first;
  for (std::size_t s = 0; s < o.independence_seeds; ++s) {
    EvaluationMatrix m = build_matrix(g, params, rows, mix_seed(o.seed, kIndependenceStream + s), {o.margin, false});
    const RankReport rep = rank_report(m, o.rel_tol);
    all_independent = all_independent && rep.independent;
    worst_ratio = std::min(worst_ratio, rep.condition_ratio);
    ranks += (s ? "/" : "") + std::to_string(rep.rank);
    if (s == 0) first = std::move(m);
  }

  // Negative controls on the first matrix: an exact linear combination and a duplicate.
  bool controls_flagged = true;
  if (first.values.cols() >= 2) {
    EvaluationMatrix combo = first;
    append_column(combo, first.values.col(0) + 2.0 * first.values.col(first.values.cols() - 1));
    EvaluationMatrix dup = first;
    append_column(dup, first.values.col(first.values.cols() - 1));
    controls_flagged = !rank_report(combo, o.rel_tol).independent && !rank_report(dup, o.rel_tol).independent;
  }
  r.metric = worst_ratio;
  r.pass = all_independent && controls_flagged;
  r.detail = "enumerate_dehn(" + std::to_string(M) + "," + std::to_string(M) + "); columns=" +
             std::to_string(params.size()) + "; rows=" + std::to_string(rows) + "; seeds=" +
             std::to_string(o.independence_seeds) + "; ranks=" + ranks + "; min sigma ratio=" + num(worst_ratio) +
             "; verdict=" + (all_independent ? "independent" : "numerically dependent at this sample") +
             "; negative controls " + (controls_flagged ? "flagged" : "NOT flagged");
  return r;
}

double slot_angle(const RepresentationPoint& rep, std::size_t tr, int slot) {
  const double c = std::clamp(0.5 * rep.slot_loop(tr, slot).trace().real(), -1.0, 1.0);
  return std::acos(c);
}

double circle_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

CriterionResult torus_action(const PantsGraph& g, const SuiteOptions& o, const Sweep& s) {
  CriterionResult r{"C8", "torus-action contracts", false, 0.0, 1e-10, ""};
  const RepresentationPoint& rep = s.points.at(0);
  const std::size_t E = g.edge_count();

  // Period 1 and identity, bitwise.
  TorusPoint ones{std::vector<double>(E, 0.0)};
  for (std::size_t e : g.internal_edges()) ones.t[e] = 1.0;
  const RepresentationPoint same = act(g, rep, ones);
  const RepresentationPoint ident = act(g, rep, TorusPoint{std::vector<double>(E, 0.0)});
  bool period_exact = same.twists().theta == rep.twists().theta && ident.twists().theta == rep.twists().theta;
  for (std::size_t p = 0; p < s.params.size() && period_exact; ++p) {
    period_exact = trace_of_route(same, s.routes[p]).value == trace_of_route(rep, s.routes[p]).value;
  }

  // Moment map and group law under random shifts.
  std::mt19937_64 rng(mix_seed(o.seed, kActionStream));
  double angle_dev = 0.0, group_dev = 0.0;
  bool angles_exact = true;
  for (int i = 0; i < 50; ++i) {
    TorusPoint a{std::vector<double>(E, 0.0)}, b{std::vector<double>(E, 0.0)}, ab{std::vector<double>(E, 0.0)};
    for (std::size_t e : g.internal_edges()) {
      a.t[e] = 4.0 * unit_uniform(rng) - 2.0;
      b.t[e] = 4.0 * unit_uniform(rng) - 2.0;
      ab.t[e] = a.t[e] + b.t[e];
    }
    const RepresentationPoint moved = act(g, rep, a);
    angles_exact = angles_exact && moved.angles().a == rep.angles().a;
    for (std::size_t tr = 0; tr < g.trinion_count(); ++tr) {
      for (int slot = 1; slot <= 3; ++slot) {
        angle_dev = std::max(angle_dev, std::abs(slot_angle(moved, tr, slot) - rep.angle(g.slot_edge(tr, slot))));
      }
    }
    const RepresentationPoint twice = act(g, moved, b);
    const RepresentationPoint once = act(g, rep, ab);
    for (std::size_t e : g.internal_edges()) {
      group_dev = std::max(group_dev, circle_distance(twice.twist(e), once.twist(e)));
    }
  }

  // Traces of curves disjoint from an edge are constant along its circle.
  double disjoint_dev = 0.0;
  std::size_t disjoint_pairs = 0;
  for (std::size_t p = 0; p < s.params.size(); ++p) {
    const RouteEvaluator eval(rep, s.routes[p]);
    for (std::size_t e : g.internal_edges()) {
      if (s.routes[p].crossing_count(e) != 0) continue;
      ++disjoint_pairs;
      const double base = eval.value_on_edge(e, 0.0);
      for (int k = 1; k <= 8; ++k) {
        disjoint_dev = std::max(disjoint_dev, std::abs(eval.value_on_edge(e, k / 9.0 + 0.0371) - base));
      }
    }
  }
  r.metric = std::max({angle_dev, group_dev, disjoint_dev});
  r.pass = period_exact && angles_exact && r.metric <= r.threshold;
  r.detail = std::string("period-1 and identity exact=") + (period_exact ? "yes" : "no") +
             "; stored angles unchanged=" + (angles_exact ? "yes" : "no") + "; max recomputed-angle deviation=" +
             num(angle_dev) + "; max group-law deviation=" + num(group_dev) + "; disjoint (curve; edge) pairs=" +
             std::to_string(disjoint_pairs) + "; max disjoint-curve deviation=" + num(disjoint_dev);
  return r;
}

// Everything computed by a representative slice, as raw doubles.
std::vector<double> determinism_slice(const PantsGraph& g, const SuiteOptions& o, const Sweep& s) {
  std::vector<double> out;
  const std::size_t step = std::max<std::size_t>(1, s.params.size() / 16);
  for (std::size_t p = 0; p < s.params.size(); p += step) {
    const IsotypeTable t = isotypes(g, s.points.at(0), s.routes[p], full_grid(g, s.params[p]));
    for (const Complex& c : t.coefficients) {
      out.push_back(c.real());
      out.push_back(c.imag());
    }
  }
  const std::vector<DehnParameter> params = enumerate_dehn(g, independence_bound(g, o), independence_bound(g, o));
  const EvaluationMatrix m = build_matrix(g, params, params.size() + 8, mix_seed(o.seed, kIndependenceStream));
  out.insert(out.end(), m.values.data(), m.values.data() + m.values.size());
  return out;
}

CriterionResult determinism(const PantsGraph& g, const SuiteOptions& o, const Sweep& s) {
  CriterionResult r{"C9", "determinism", false, 0.0, 0.0, ""};
  if (!o.determinism_check) {
    r.pass = true;
    r.detail = "in-process check disabled";
    return r;
  }
  std::vector<double> serial, threaded;
  {
    ScopedThreadLimit limit(1);
    serial = determinism_slice(g, o, s);
  }
  {
    ScopedThreadLimit limit(4);
    threaded = determinism_slice(g, o, s);
  }
  std::size_t diff = serial.size() == threaded.size() ? 0 : std::max(serial.size(), threaded.size());
  if (diff == 0) {
    for (std::size_t i = 0; i < serial.size(); ++i) {
      if (std::memcmp(&serial[i], &threaded[i], sizeof(double)) != 0) ++diff;
    }
  }
  r.metric = static_cast<double>(diff);
  r.pass = diff == 0;
  r.detail = "values compared between 1 and 4 threads=" + std::to_string(serial.size()) +
             "; bitwise differences=" + std::to_string(diff);
  return r;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

std::string SuiteReport::to_csv() const {
  std::ostringstream os;
  os << "id,name,status,metric,threshold,detail\n";
  for (const CriterionResult& c : criteria) {
    os << c.id << ',' << c.name << ',' << (c.pass ? "pass" : "fail") << ',' << format_double(c.metric) << ','
       << format_double(c.threshold) << ',' << csv_quote(c.detail) << '\n';
  }
  return os.str();
}

SuiteReport run_suite(const PantsGraph& g, const SuiteOptions& o) {
  require_valid(g);
  SuiteReport report;
  report.criteria.push_back(polytope_exactness(g, o));
  report.criteria.push_back(trace_relation(o));

  Sweep s;
  s.params = enumerate_dehn(g, o.sweep_m_max, o.sweep_t_max);
  for (const DehnParameter& d : s.params) s.routes.push_back(route(g, d));
  const std::size_t points = std::max(o.fourier_points, o.intersection_points);
  for (std::size_t b = 0; b < points; ++b) {
    const InteriorSample smp = sample_interior(g, o.margin, mix_seed(o.seed, kBasePointStream + b));
    s.points.push_back(build_representation(g, smp.angles, smp.twists));
  }

  {
    Sweep fourier_sweep = s;
    fourier_sweep.points.resize(o.fourier_points);
    fourier_criteria(g, fourier_sweep, report.criteria);
  }
  report.criteria.push_back(twist_phase(g, s));
  report.criteria.push_back(intersection_recovery(g, o, s));
  report.criteria.push_back(independence(g, o));
  report.criteria.push_back(torus_action(g, o, s));
  report.criteria.push_back(determinism(g, o, s));
  return report;
}

}  // namespace curvetrace

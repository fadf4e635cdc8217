#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "fixtures.hpp"

#include "curvetrace/error.hpp"
#include "curvetrace/trace.hpp"

using namespace curvetrace;
using fixtures::dehn;
using std::numbers::pi;

namespace {

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

RepresentationPoint sample_point(const PantsGraph& g, std::uint64_t seed, double margin = 0.05) {
  const InteriorSample s = sample_interior(g, margin, seed);
  return build_representation(g, s.angles, s.twists);
}

double chi(const PantsGraph& g, const RepresentationPoint& rep, const DehnParameter& d) {
  return trace_of_route(rep, route(g, d)).value;
}

// Eigenvector for e^{ia}, normalized so that its largest coordinate is real
// and positive, computed with a general-purpose eigensolver.
Vec2 plus_vector(const Mat2& h, double a) {
  Eigen::ComplexEigenSolver<Mat2> es(h);
  const Complex target = std::polar(1.0, a);
  const int k = std::abs(es.eigenvalues()(0) - target) <= std::abs(es.eigenvalues()(1) - target) ? 0 : 1;
  Vec2 v = es.eigenvectors().col(k).normalized();
  const int big = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
  return v * (std::conj(v(big)) / std::abs(v(big)));
}

Mat2 frame_matrix(const Vec2& p) {
  Mat2 f;
  f << p(0), -std::conj(p(1)), p(1), std::conj(p(0));
  return f;
}

RouteComponent reversed_component(const RouteComponent& c) {
  RouteComponent out;
  const std::size_t n = c.steps.size();
  for (std::size_t k = 0; k < n; ++k) {
    const RouteStep& s = c.steps[(2 * n - 2 - k) % n];
    if (const auto* x = std::get_if<AnnulusCrossing>(&s)) {
      AnnulusCrossing r = *x;
      r.forward = !r.forward;
      out.steps.push_back(r);
    } else {
      TrinionArc a = std::get<TrinionArc>(s);
      std::swap(a.from_slot, a.to_slot);
      std::swap(a.from_pos, a.to_pos);
      out.steps.push_back(a);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("arc holonomy") {
  const PantsGraph g = fixtures::genus2();
  const RepresentationPoint rep =
      build_representation(g, AngleVector{{pi / 2, pi / 2, pi / 2}}, TwistVector{{0.0, 0.0, 0.0}});
  const TrinionHolonomy& h = rep.trinions()[0];

  SUBCASE("arcs between distinct slots run through the base point") {
    const Mat2 m = arc_holonomy(rep, 0, ArcType{1, 2, 0, true});
    CHECK(su2_defect(m) < 1e-12);
    CHECK(max_abs(m - Mat2::Identity()) == 0.0);
  }
  SUBCASE("a self-arc on slot 3 around slot 1 picks up X") {
    CHECK(max_abs(arc_holonomy(rep, 0, ArcType{3, 3, 1, true}) - h.x) == 0.0);
    CHECK(max_abs(arc_holonomy(rep, 0, ArcType{3, 3, 1, false}) - h.x.adjoint()) == 0.0);
    CHECK(max_abs(arc_holonomy(rep, 0, ArcType{1, 1, 2, true}) - h.y) == 0.0);
  }
  SUBCASE("the trinion relator") {
    CHECK(max_abs(h.slot_loop(1) * h.slot_loop(2) * h.slot_loop(3) - Mat2::Identity()) < 1e-15);
  }
  SUBCASE("inconsistent arc data") {
    for (const ArcType& bad : {ArcType{1, 1, 0, true}, ArcType{1, 1, 1, true}, ArcType{1, 2, 3, true},
                               ArcType{0, 2, 0, true}, ArcType{1, 4, 0, true}}) {
      try {
        arc_holonomy(rep, 0, bad);
        FAIL("expected UnknownArc");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownArc);
      }
    }
    CHECK_THROWS_AS(arc_holonomy(rep, 7, ArcType{1, 2, 0, true}), Error);
  }
}

TEST_CASE("empty route and core copies") {
  const PantsGraph g = fixtures::genus2();
  const RepresentationPoint rep = sample_point(g, 3);
  CHECK(chi(g, rep, DehnParameter::zero(3)) == 1.0);
  const TraceValue v = trace_of_route(rep, route(g, dehn({0, 0, 0}, {0, 1, 0})));
  CHECK(v.value == doctest::Approx(-2.0 * std::cos(rep.angle(1))).epsilon(1e-15));
  CHECK(chi(g, rep, dehn({0, 0, 0}, {0, 3, 0})) ==
        doctest::Approx(std::pow(-2.0 * std::cos(rep.angle(1)), 3)).epsilon(1e-13));
}

TEST_CASE("one-holed torus: curves crossing the loop once match explicit words") {
  // pi_1 of the one-holed torus is free on the loop core a and a dual
  // curve b. With the transport G built here from an independent
  // eigensolver, the curve with twist t is the word b a^t up to the sign
  // convention for positive twists, which must be the same for every t.
  const PantsGraph g = fixtures::one_holed_torus();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RepresentationPoint rep = sample_point(g, seed);
    const TrinionHolonomy& h = rep.trinions()[0];
    const double a1 = rep.angle(0);
    const double theta = rep.twist(0);
    const Mat2 f0 = frame_matrix(plus_vector(h.slot_loop(1), a1));
    const Mat2 f1 = frame_matrix(plus_vector(h.slot_loop(2), a1));
    const Mat2 gl = f0 * quarter_turn() * phase_diag(2 * pi * theta) * f1.adjoint();
    CHECK(max_abs(gl - rep.gluing(0)) < 1e-9);

    const double chi10 = chi(g, rep, dehn({1, 0}, {0, 0}));
    CHECK(chi10 == doctest::Approx(-gl.trace().real()).epsilon(1e-9));

    const double plus = -(gl * h.x).trace().real();
    const double minus = -(gl * h.x.adjoint()).trace().real();
    const double chi11 = chi(g, rep, dehn({1, 0}, {1, 0}));
    const int s = std::abs(chi11 - plus) < std::abs(chi11 - minus) ? 1 : -1;
    CHECK(std::min(std::abs(chi11 - plus), std::abs(chi11 - minus)) < 1e-9);
    for (int t = -4; t <= 4; ++t) {
      const double word = -(gl * su2_power(h.x, s * t)).trace().real();
      CHECK(chi(g, rep, dehn({1, 0}, {t, 0})) == doctest::Approx(word).epsilon(1e-9));
    }
  }
}

TEST_CASE("one-holed torus: trace functions obey the skein relations") {
  // For simple curves meeting once, chi_{XY} + chi_{X^-1 Y} = -chi_X chi_Y,
  // and the two resolutions of slopes (p,q), (p',q') are their sum and
  // difference. Disjoint copies multiply.
  const PantsGraph g = fixtures::one_holed_torus();
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const RepresentationPoint rep = sample_point(g, seed);
    auto c = [&](int m, int t) { return chi(g, rep, dehn({m, 0}, {t, 0})); };
    const double core = c(0, 1);
    CHECK(c(2, 0) == doctest::Approx(c(1, 0) * c(1, 0)).epsilon(1e-12));
    CHECK(c(0, 2) == doctest::Approx(core * core).epsilon(1e-12));
    for (int t = -3; t <= 3; ++t) {
      CHECK(c(1, t + 1) + c(1, t - 1) == doctest::Approx(-core * c(1, t)).epsilon(1e-10));
      CHECK(c(2, 2 * t + 1) + core == doctest::Approx(-c(1, t) * c(1, t + 1)).epsilon(1e-10));
      CHECK(c(3, 3 * t + 1) + c(1, t + 1) == doctest::Approx(-c(1, t) * c(2, 2 * t + 1)).epsilon(1e-10));
      CHECK(c(3, 3 * t + 2) + c(1, t) == doctest::Approx(-c(1, t + 1) * c(2, 2 * t + 1)).epsilon(1e-10));
      CHECK(c(2, 2 * t) == doctest::Approx(c(1, t) * c(1, t)).epsilon(1e-10));
    }
  }
}

TEST_CASE("four-holed sphere: disjoint copies multiply") {
  const PantsGraph g = fixtures::four_holed_sphere();
  const RepresentationPoint rep = sample_point(g, 8);
  for (int t = -2; t <= 2; ++t) {
    const double one = chi(g, rep, dehn({2, 0, 0, 0, 0}, {t, 0, 0, 0, 0}));
    CHECK(chi(g, rep, dehn({4, 0, 0, 0, 0}, {2 * t, 0, 0, 0, 0})) == doctest::Approx(one * one).epsilon(1e-10));
  }
}

TEST_CASE("word traces") {
  std::mt19937_64 rng(1);
  const Assignment rho{{"a", random_su2(rng)}, {"b", random_su2(rng)}, {"c", random_su2(rng)}};
  CHECK(word_trace(rho, parse_word("")) == -2.0);
  CHECK(word_trace(rho, parse_word("1")) == -2.0);
  CHECK(word_trace(rho, parse_word("aA")) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(word_trace(rho, parse_word("ab")) == doctest::Approx(-(rho.at("a") * rho.at("b")).trace().real()));
  CHECK(word_trace(rho, parse_word("aB")) ==
        doctest::Approx(-(rho.at("a") * rho.at("b").adjoint()).trace().real()));
  try {
    word_trace(rho, parse_word("az"));
    FAIL("expected UnassignedGenerator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnassignedGenerator);
  }
  CHECK_THROWS_AS(parse_word("a1"), Error);
  CHECK(format_word(parse_word("a B c")) == "aBc");
  CHECK(format_word(inverse(parse_word("aBc"))) == "CbA");
  CHECK(format_word(concat(parse_word("ab"), parse_word("C"))) == "abC");
  CHECK(format_word({}) == "1");

  for (int i = 0; i < 200; ++i) {
    Word w;
    const int len = static_cast<int>(rng() % 9);
    for (int k = 0; k < len; ++k) w.push_back({std::string(1, char('a' + rng() % 3)), rng() % 2 == 0});
    const double x = word_trace(rho, w);
    CHECK(x >= -2.0 - 1e-12);
    CHECK(x <= 2.0 + 1e-12);
  }
}

TEST_CASE("trace relation") {
  std::mt19937_64 rng(2);
  CHECK(check_trace_relation({}, {}, {}) == 0.0);
  // Cayley-Hamilton with a = b: the relation reads chi_a^2 + chi_{a^2} - 2 = 0
  // because chi of the empty word is -2.
  for (int i = 0; i < 100; ++i) {
    const Mat2 a = random_su2(rng);
    const double ca = -a.trace().real();
    const double ca2 = -(a * a).trace().real();
    CHECK(std::abs(ca * ca + ca2 - 2.0) < 1e-12);
    CHECK(check_trace_relation({{"a", a}}, parse_word("a"), parse_word("a")) < 1e-12);
  }
  for (int i = 0; i < 1000; ++i) {
    const Assignment rho{{"a", random_su2(rng)}, {"b", random_su2(rng)}, {"c", random_su2(rng)}};
    Word w[2];
    for (Word& x : w) {
      const int len = static_cast<int>(rng() % 7);
      for (int k = 0; k < len; ++k) x.push_back({std::string(1, char('a' + rng() % 3)), rng() % 2 == 0});
    }
    CHECK(check_trace_relation(rho, w[0], w[1]) <= 1e-10);
  }
}

TEST_CASE("component factors: inversion, rotation, bounds, products") {
  for (const PantsGraph& g : fixtures::all_surfaces()) {
    const RepresentationPoint rep = sample_point(g, 5);
    for (const DehnParameter& d : enumerate_dehn(g, 3, 2)) {
      const CurveRoute r = route(g, d);
      const TraceValue v = trace_of_route(rep, r);
      double product = 1.0;
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        const RouteComponent& c = r.components[i];
        const double f = v.factors[i];
        CHECK(std::abs(f) <= 2.0 + 1e-12);
        product *= f;
        if (c.core_edge) continue;
        const Mat2 hol = component_holonomy(rep, c);
        CHECK(su2_defect(hol) < 1e-10);
        CHECK(-component_holonomy(rep, reversed_component(c)).trace().real() == doctest::Approx(f).epsilon(1e-12));
        RouteComponent rotated = c;
        std::rotate(rotated.steps.begin(), rotated.steps.begin() + 2, rotated.steps.end());
        CHECK(-component_holonomy(rep, rotated).trace().real() == doctest::Approx(f).epsilon(1e-12));
      }
      CHECK(v.value == doctest::Approx(product).epsilon(1e-12));
    }
  }
}

TEST_CASE("trace functions are periodic along the torus action") {
  const PantsGraph g = fixtures::genus2();
  const RepresentationPoint rep = sample_point(g, 12);
  const CurveRoute r = route(g, dehn({2, 1, 1}, {1, -1, 0}));
  const double base = trace_of_route(rep, r).value;
  CHECK(trace_of_route(act(g, rep, TorusPoint{{1.0, 0.0, 0.0}}), r).value == base);
  CHECK(trace_of_route(act(g, rep, TorusPoint{{0.0, 0.0, 0.0}}), r).value == base);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    TorusPoint s{{unit_uniform(rng), unit_uniform(rng), unit_uniform(rng)}};
    const double x = trace_of_route(act(g, rep, s), r).value;
    for (std::size_t j = 0; j < 3; ++j) {
      TorusPoint s1 = s;
      s1.t[j] += 1.0;
      CHECK(std::abs(trace_of_route(act(g, rep, s1), r).value - x) < 1e-10);
    }
  }
}

TEST_CASE("curves disjoint from an edge are invariant under its circle action") {
  const PantsGraph g = fixtures::genus2();
  const RepresentationPoint rep = sample_point(g, 13);
  const CurveRoute r = route(g, dehn({0, 2, 2}, {0, 1, -1}));
  const double base = trace_of_route(rep, r).value;
  for (int i = 0; i <= 20; ++i) {
    const RepresentationPoint moved = act(g, rep, TorusPoint{{i / 20.0, 0.0, 0.0}});
    CHECK(std::abs(trace_of_route(moved, r).value - base) < 1e-10);
  }
  // Core copies of the edge commute with its own circle action as well.
  const CurveRoute core = route(g, dehn({0, 0, 0}, {2, 0, 0}));
  CHECK(std::abs(trace_of_route(act(g, rep, TorusPoint{{0.3, 0.0, 0.0}}), core).value -
                 trace_of_route(rep, core).value) < 1e-12);
}

TEST_CASE("compiled evaluation agrees with direct evaluation") {
  for (const PantsGraph& g : fixtures::all_surfaces()) {
    const RepresentationPoint rep = sample_point(g, 6);
    std::mt19937_64 rng(6);
    for (const DehnParameter& d : enumerate_dehn(g, 2, 1)) {
      const CurveRoute r = route(g, d);
      const RouteEvaluator ev(rep, r);
      std::vector<double> off(g.edge_count(), 0.0);
      for (std::size_t e : g.internal_edges()) off[e] = unit_uniform(rng);
      CHECK(std::abs(ev.value(off) - trace_of_route(act(g, rep, TorusPoint{off}), r).value) < 1e-12);
      for (std::size_t e : g.internal_edges()) {
        std::vector<double> single(g.edge_count(), 0.0);
        single[e] = off[e];
        CHECK(std::abs(ev.value_on_edge(e, off[e]) - ev.value(single)) < 1e-13);
      }
    }
  }
}

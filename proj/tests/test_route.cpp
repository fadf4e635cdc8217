#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "fixtures.hpp"

#include "curvetrace/error.hpp"
#include "curvetrace/route.hpp"

using namespace curvetrace;
using fixtures::dehn;

namespace {

std::size_t core_count(const CurveRoute& r, std::size_t edge) {
  std::size_t n = 0;
  for (const auto& c : r.components) n += c.core_edge == edge;
  return n;
}

// Checks that consecutive steps meet: every arc starts where the previous
// crossing arrived and ends where the next crossing departs.
void check_connectivity(const PantsGraph& g, const DehnParameter& d, const CurveRoute& r) {
  std::set<std::pair<std::size_t, int>> strands;
  for (const RouteComponent& c : r.components) {
    if (c.core_edge) {
      CHECK(c.steps.empty());
      CHECK(d.m[*c.core_edge] == 0);
      continue;
    }
    REQUIRE(c.steps.size() % 2 == 0);
    REQUIRE(!c.steps.empty());
    CHECK(std::get<AnnulusCrossing>(c.steps[0]).forward);
    for (std::size_t i = 0; i < c.steps.size(); i += 2) {
      const auto& x = std::get<AnnulusCrossing>(c.steps[i]);
      const auto& arc = std::get<TrinionArc>(c.steps[i + 1]);
      const auto& next = std::get<AnnulusCrossing>(c.steps[(i + 2) % c.steps.size()]);
      CHECK(strands.insert({x.edge, x.inlet}).second);
      CHECK(x.inlet >= 0);
      CHECK(x.inlet < d.m[x.edge]);

      const Attachment arrive = g.attachment(x.edge, x.forward ? 1 : 0);
      REQUIRE(arrive.trinion.has_value());
      CHECK(arc.trinion == *arrive.trinion);
      CHECK(arc.from_slot == arrive.slot);
      const Attachment depart = g.attachment(next.edge, next.forward ? 0 : 1);
      CHECK(arc.trinion == *depart.trinion);
      CHECK(arc.to_slot == depart.slot);
      CHECK(arc.from_pos < d.m[g.slot_edge(arc.trinion, arc.from_slot)]);
      CHECK(arc.to_pos < d.m[g.slot_edge(arc.trinion, arc.to_slot)]);
      CHECK((arc.from_slot == arc.to_slot) == (arc.encircled != 0));
    }
  }
  int total = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) total += d.m[e];
  CHECK(strands.size() == static_cast<std::size_t>(total));
}

}  // namespace

TEST_CASE("arc patterns") {
  SUBCASE("triangle case") {
    const TrinionArcPattern p = arc_pattern(2, 2, 2);
    CHECK(p.x(1, 2) == 1);
    CHECK(p.x(2, 3) == 1);
    CHECK(p.x(1, 3) == 1);
    CHECK(p.self == std::array<int, 3>{0, 0, 0});
  }
  SUBCASE("a long slot gets self-arcs around the lower other slot") {
    const TrinionArcPattern p = arc_pattern(3, 1, 0);
    CHECK(p.x(1, 1) == 1);
    CHECK(p.encircled[0] == 2);
    CHECK(p.x(1, 2) == 1);
    CHECK(p.x(2, 3) == 0);
    const TrinionArcPattern q = arc_pattern(0, 0, 4);
    CHECK(q.x(3, 3) == 2);
    CHECK(q.encircled[2] == 1);
  }
  SUBCASE("odd or negative input") {
    CHECK_THROWS_AS(arc_pattern(1, 1, 1), Error);
    CHECK_THROWS_AS(arc_pattern(-2, 0, 0), Error);
  }
  SUBCASE("every slot has m_k endpoints") {
    for (int a = 0; a <= 7; ++a) {
      for (int b = 0; b <= 7; ++b) {
        for (int c = 0; c <= 7; ++c) {
          if ((a + b + c) % 2) continue;
          const TrinionArcPattern p = arc_pattern(a, b, c);
          const int m[3] = {a, b, c};
          for (int k = 1; k <= 3; ++k) {
            int ends = 2 * p.x(k, k);
            for (int j = 1; j <= 3; ++j) {
              if (j != k) ends += p.x(k, j);
            }
            CHECK(ends == m[k - 1]);
          }
        }
      }
    }
  }
}

TEST_CASE("strand map") {
  CHECK(strand_target(0, 3, 4).outlet == 1);
  CHECK(strand_target(0, 3, 4).winding == 1);
  CHECK(strand_target(0, 3, -1).outlet == 2);
  CHECK(strand_target(0, 3, -1).winding == -1);
  CHECK(strand_target(2, 3, 0).outlet == 2);
  CHECK(strand_target(2, 3, 0).winding == 0);
}

TEST_CASE("one-holed torus, m = 1 and t = 0: one component crossing once") {
  const PantsGraph g = fixtures::one_holed_torus();
  const CurveRoute r = route(g, dehn({1, 0}, {0, 0}));
  REQUIRE(r.components.size() == 1);
  REQUIRE(r.components[0].steps.size() == 2);
  const auto& x = std::get<AnnulusCrossing>(r.components[0].steps[0]);
  CHECK(x.edge == 0);
  CHECK(x.winding == 0);
}

TEST_CASE("the empty multicurve has no components") {
  for (const PantsGraph& g : fixtures::all_surfaces()) {
    CHECK(route(g, DehnParameter::zero(g.edge_count())).components.empty());
  }
}

TEST_CASE("genus two, m = (2,0,0), t = (0,1,0): hand-traced route") {
  // Both trinions carry one self-arc on slot 1 around slot 2. The two
  // strands of e1 run straight across and the self-arcs join them into a
  // single loop; e2 contributes one parallel copy of its core.
  const PantsGraph g = fixtures::genus2();
  const CurveRoute r = route(g, dehn({2, 0, 0}, {0, 1, 0}));
  REQUIRE(r.components.size() == 2);
  const RouteComponent& loop = r.components[0];
  REQUIRE(loop.steps.size() == 4);
  const auto& x0 = std::get<AnnulusCrossing>(loop.steps[0]);
  const auto& a0 = std::get<TrinionArc>(loop.steps[1]);
  const auto& x1 = std::get<AnnulusCrossing>(loop.steps[2]);
  const auto& a1 = std::get<TrinionArc>(loop.steps[3]);
  CHECK(x0.edge == 0);
  CHECK(x0.inlet == 0);
  CHECK(x0.outlet == 0);
  CHECK(x0.forward);
  CHECK(a0.trinion == 1);
  CHECK(a0.from_slot == 1);
  CHECK(a0.to_slot == 1);
  CHECK(a0.encircled == 2);
  CHECK(x1.edge == 0);
  CHECK(x1.inlet == 1);
  CHECK_FALSE(x1.forward);
  CHECK(a1.trinion == 0);
  CHECK(a1.encircled == 2);
  CHECK(r.components[1].core_edge == std::optional<std::size_t>(1));
  CHECK(r.crossing_count(0) == 2);
  CHECK(r.winding_sum(0) == 0);
}

TEST_CASE("one-holed torus: component count is gcd(m, t)") {
  const PantsGraph g = fixtures::one_holed_torus();
  for (int m = 1; m <= 7; ++m) {
    for (int t = -8; t <= 8; ++t) {
      const CurveRoute r = route(g, dehn({m, 0}, {t, 0}));
      CHECK(r.components.size() == static_cast<std::size_t>(std::gcd(m, std::abs(t))));
    }
  }
  for (int t = 0; t <= 4; ++t) CHECK(route(g, dehn({0, 0}, {t, 0})).components.size() == std::size_t(t));
}

TEST_CASE("four-holed sphere: component count is gcd(m/2, t)") {
  const PantsGraph g = fixtures::four_holed_sphere();
  for (int m = 2; m <= 10; m += 2) {
    for (int t = -6; t <= 6; ++t) {
      const CurveRoute r = route(g, dehn({m, 0, 0, 0, 0}, {t, 0, 0, 0, 0}));
      CHECK(r.components.size() == static_cast<std::size_t>(std::gcd(m / 2, std::abs(t))));
    }
  }
}

TEST_CASE("routes realize the Dehn coordinates on every surface") {
  for (const PantsGraph& g : fixtures::all_surfaces()) {
    for (const DehnParameter& d : enumerate_dehn(g, 3, 2, true)) {
      const CurveRoute r = route(g, d);
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        CHECK(r.crossing_count(e) == d.m[e]);
        if (d.m[e] > 0) {
          CHECK(r.winding_sum(e) == d.t[e]);
          CHECK(core_count(r, e) == 0);
        } else {
          CHECK(core_count(r, e) == static_cast<std::size_t>(d.t[e]));
        }
      }
      check_connectivity(g, d, r);
    }
  }
}

TEST_CASE("routing is deterministic") {
  const PantsGraph g = fixtures::genus2();
  const DehnParameter d = dehn({3, 2, 1}, {-2, 1, 4});
  CHECK(route(g, d) == route(g, d));
}

TEST_CASE("a fractional twist only moves windings on its edge") {
  std::mt19937_64 rng(11);
  for (const PantsGraph& g : fixtures::all_surfaces()) {
    for (const DehnParameter& d : enumerate_dehn(g, 3, 1)) {
      for (std::size_t j : g.internal_edges()) {
        if (d.m[j] == 0) continue;
        const int ell = static_cast<int>(rng() % 7) - 3;
        const CurveRoute a = route(g, d);
        const CurveRoute b = route(g, twist(g, d, j, ell));
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
          CHECK(a.crossing_count(e) == b.crossing_count(e));
          CHECK(b.winding_sum(e) - a.winding_sum(e) == (e == j ? ell : 0));
        }
      }
    }
  }
}

TEST_CASE("relabelling ids and reordering the graph keeps the components") {
  const PantsGraph g = fixtures::genus2();
  const PantsGraph h = fixtures::genus2_relabelled();  // edge order (e3, e1, e2)
  for (const DehnParameter& d : enumerate_dehn(g, 3, 2)) {
    const DehnParameter p{{d.m[2], d.m[0], d.m[1]}, {d.t[2], d.t[0], d.t[1]}};
    const CurveRoute a = route(g, d);
    const CurveRoute b = route(h, p);
    CHECK(a.components.size() == b.components.size());
    std::multiset<std::size_t> la, lb;
    for (const auto& c : a.components) la.insert(c.steps.size());
    for (const auto& c : b.components) lb.insert(c.steps.size());
    CHECK(la == lb);
  }
}

TEST_CASE("inadmissible parameters are refused") {
  CHECK_THROWS_AS(route(fixtures::genus2(), dehn({1, 1, 1}, {0, 0, 0})), Error);
}

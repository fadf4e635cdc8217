#include <algorithm>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"

#include "curvetrace/error.hpp"
#include "curvetrace/graph.hpp"

using namespace curvetrace;

namespace {

bool has_code(const std::vector<Violation>& vs, const std::string& code) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.code == code; });
}

const Vertex T{"T", VertexKind::Trinion};
const Vertex U{"U", VertexKind::Trinion};
const Vertex B{"B", VertexKind::Boundary};

}  // namespace

TEST_CASE("bundled surfaces are valid") {
  for (const PantsGraph& g : fixtures::all_surfaces()) {
    CHECK(validate_graph(g).empty());
    CHECK_NOTHROW(require_valid(g));
  }
}

TEST_CASE("genus two has two trinions and three internal edges") {
  const PantsGraph g = fixtures::genus2();
  CHECK(g.trinion_count() == 2);
  CHECK(g.euler_characteristic() == -2);
  CHECK(g.internal_edges().size() == 3);
  CHECK(g.slot_edge(*g.trinion_index("T2"), 2) == *g.edge_index("e2"));
}

TEST_CASE("one-holed torus: a loop edge is allowed, the rim is external") {
  const PantsGraph g = fixtures::one_holed_torus();
  CHECK(g.euler_characteristic() == -1);
  CHECK(g.is_internal(*g.edge_index("loop")));
  CHECK_FALSE(g.is_internal(*g.edge_index("rim")));
  const Attachment a = g.attachment(*g.edge_index("rim"), 1);
  CHECK_FALSE(a.trinion.has_value());
}

TEST_CASE("four-holed sphere has one internal edge") {
  const PantsGraph g = fixtures::four_holed_sphere();
  REQUIRE(g.internal_edges().size() == 1);
  CHECK(g.edge(g.internal_edges()[0]).id == "waist");
}

TEST_CASE("trinion with an unfilled slot is rejected") {
  const PantsGraph g({T, B}, {{"loop", {"T", 1}, {"T", 2}, false}});
  const auto vs = validate_graph(g);
  CHECK(has_code(vs, "unfilled slot"));
  CHECK_THROWS_AS(require_valid(g), Error);
}

TEST_CASE("each structural violation is reported by name") {
  SUBCASE("duplicate vertex id") {
    CHECK(has_code(validate_graph(PantsGraph({T, T}, {})), "duplicate vertex id"));
  }
  SUBCASE("duplicate edge id") {
    const PantsGraph g({T, U}, {{"e", {"T", 1}, {"U", 1}, false},
                                {"e", {"T", 2}, {"U", 2}, false},
                                {"f", {"T", 3}, {"U", 3}, false}});
    CHECK(has_code(validate_graph(g), "duplicate edge id"));
  }
  SUBCASE("unknown vertex") {
    const PantsGraph g({T}, {{"e", {"T", 1}, {"Z", 1}, false}});
    CHECK(has_code(validate_graph(g), "unknown vertex"));
  }
  SUBCASE("slot out of range") {
    const PantsGraph g({T, B}, {{"e", {"T", 4}, {"B", 1}, false}});
    CHECK(has_code(validate_graph(g), "bad slot"));
    const PantsGraph h({T, B}, {{"e", {"T", 1}, {"B", 2}, false}});
    CHECK(has_code(validate_graph(h), "bad slot"));
  }
  SUBCASE("boundary-boundary edge") {
    const PantsGraph g({T, B, {"C", VertexKind::Boundary}}, {{"e", {"B", 1}, {"C", 1}, false}});
    CHECK(has_code(validate_graph(g), "boundary-boundary edge"));
  }
  SUBCASE("slot glued to itself") {
    const PantsGraph g({T}, {{"e", {"T", 1}, {"T", 1}, false}});
    CHECK(has_code(validate_graph(g), "slot glued to itself"));
  }
  SUBCASE("slot used twice") {
    const PantsGraph g({T, U}, {{"e1", {"T", 1}, {"U", 1}, false},
                                {"e2", {"T", 1}, {"U", 2}, false},
                                {"e3", {"T", 2}, {"U", 3}, false},
                                {"e4", {"T", 3}, {"T", 2}, false}});
    CHECK(has_code(validate_graph(g), "slot used twice"));
  }
  SUBCASE("boundary vertex not of degree one") {
    const PantsGraph g({T, B}, {{"loop", {"T", 1}, {"T", 2}, false}, {"rim", {"T", 3}, {"T", 3}, false}});
    CHECK(has_code(validate_graph(g), "boundary degree"));
  }
  SUBCASE("no trinion") {
    CHECK(has_code(validate_graph(PantsGraph({B}, {})), "no trinion"));
  }
  SUBCASE("empty id") {
    const PantsGraph g({{"", VertexKind::Trinion}}, {});
    CHECK(has_code(validate_graph(g), "empty id"));
  }
}

TEST_CASE("several violations are listed together") {
  const PantsGraph g({T, T}, {{"e", {"T", 9}, {"Z", 1}, false}});
  CHECK(validate_graph(g).size() >= 3);
  try {
    require_valid(g);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
    CHECK(std::string(e.what()).find("duplicate vertex id") != std::string::npos);
  }
}

TEST_CASE("relabelling keeps the structure") {
  const PantsGraph g = fixtures::genus2_relabelled();
  CHECK(validate_graph(g).empty());
  CHECK(g.trinion_id(0) == "Q");
  CHECK(g.edge(0).id == "c");
}

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"

#include "curvetrace/error.hpp"
#include "curvetrace/io.hpp"

using namespace curvetrace;
using fixtures::dehn;

namespace {

bool message_has(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == ErrorCode::InvalidInput && std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("graph JSON round trip") {
  for (const PantsGraph& g : fixtures::all_surfaces()) {
    const PantsGraph h = graph_from_json(graph_to_json(g));
    CHECK(graph_to_json(h) == graph_to_json(g));
    CHECK(validate_graph(h).empty());
  }
}

TEST_CASE("edge ends may be objects or pairs, kinds are case-insensitive") {
  const Json j = Json::parse(R"({
    "vertices": [{"id": "T", "kind": "Trinion"}, {"id": "B", "kind": "BOUNDARY"}],
    "edges": [{"id": "loop", "end0": ["T", 1], "end1": {"vertex": "T", "slot": 2}},
              {"id": "rim", "end0": ["T", 3], "end1": ["B", 1], "reversed": true}]})");
  const PantsGraph g = graph_from_json(j);
  CHECK(validate_graph(g).empty());
  CHECK(g.edge(1).reversed);
  CHECK_FALSE(g.edge(0).reversed);
}

TEST_CASE("malformed graphs") {
  CHECK(message_has([] { graph_from_json(Json::parse("[]")); }, "vertices"));
  CHECK(message_has([] { graph_from_json(Json::parse(R"({"vertices": [{"id": "T", "kind": "disc"}], "edges": []})")); },
                    "unknown kind"));
  CHECK(message_has([] {
    graph_from_json(Json::parse(R"({"vertices": [], "edges": [{"id": "e", "end0": 3, "end1": ["T", 1]}]})"));
  }, "end0"));
  CHECK(message_has([] {
    graph_from_json(Json::parse(R"({"vertices": [], "edges": [{"id": "e", "end0": ["T", 1], "end1": ["T", 2], "reversed": 1}]})"));
  }, "reversed"));
}

TEST_CASE("missing and malformed files name the path") {
  const std::string missing = std::string(CURVETRACE_TEST_DATA) + "/no_such_file.json";
  CHECK(message_has([&] { load_graph(missing); }, missing));
  const std::string broken = std::string(CURVETRACE_TEST_DATA) + "/m111.json";
  CHECK(message_has([&] { load_graph(broken); }, "vertices"));
}

TEST_CASE("Dehn files") {
  const PantsGraph g = fixtures::genus2();
  CHECK(dehn_from_json(g, Json::parse(R"({"e1": [2, 0]})")) == dehn({2, 0, 0}, {0, 0, 0}));
  CHECK(dehn_from_json(g, Json::parse(R"({"e2": [1, -3], "e3": [1, 0]})")) == dehn({0, 1, 1}, {0, -3, 0}));
  CHECK(message_has([&] { dehn_from_json(g, Json::parse(R"({"e9": [2, 0]})")); }, "e9"));
  CHECK(message_has([&] { dehn_from_json(g, Json::parse(R"({"e1": [2.5, 0]})")); }, "integers"));
  const DehnParameter d = dehn({3, 1, 2}, {-1, 4, 0});
  CHECK(dehn_from_json(g, dehn_to_json(g, d)) == d);
  CHECK(load_dehn(g, std::string(CURVETRACE_SURFACES) + "/m200.json") == dehn({2, 0, 0}, {0, 0, 0}));
}

TEST_CASE("angle and twist files") {
  const PantsGraph g = fixtures::one_holed_torus();
  const AngleVector a = angles_from_json(g, Json::parse(R"({"loop": 1.0, "rim": 0.5})"));
  CHECK(a.a == std::vector<double>{1.0, 0.5});
  CHECK(message_has([&] { angles_from_json(g, Json::parse(R"({"loop": 1.0})")); }, "rim"));
  CHECK(message_has([&] { angles_from_json(g, Json::parse(R"({"loop": 4.0, "rim": 1})")); }, "[0, pi]"));
  CHECK(message_has([&] { angles_from_json(g, Json::parse(R"({"loop": "x", "rim": 1})")); }, "number"));

  const TwistVector t = twists_from_json(g, Json::parse(R"({"loop": 1.25})"));
  CHECK(t.theta == std::vector<double>{0.25, 0.0});
  CHECK(twists_from_json(g, Json::object()).theta == std::vector<double>{0.0, 0.0});
  CHECK(message_has([&] { twists_from_json(g, Json::parse(R"({"rim": 0.5})")); }, "external"));

  CHECK(angles_from_json(g, angles_to_json(g, a)).a == a.a);
  CHECK(twists_from_json(g, twists_to_json(g, t)).theta == t.theta);
}

TEST_CASE("representation JSON carries eight reals per matrix") {
  const PantsGraph g = fixtures::genus2();
  const InteriorSample s = sample_interior(g, 0.05, 1);
  const RepresentationPoint rep = build_representation(g, s.angles, s.twists);
  const Json j = representation_to_json(g, rep);
  REQUIRE(j["trinions"].size() == 2);
  for (const Json& tr : j["trinions"]) {
    CHECK(tr["x"].size() == 8);
    CHECK(tr["y"].size() == 8);
  }
  const Mat2& y = rep.trinions()[1].y;
  CHECK(j["trinions"][1]["y"][2].get<double>() == y(0, 1).real());
  CHECK(j["trinions"][1]["y"][7].get<double>() == y(1, 1).imag());
  CHECK(j["angles"]["e2"].get<double>() == s.angles.a[1]);
}

TEST_CASE("route listing") {
  const PantsGraph g = fixtures::genus2();
  const std::string text = format_route(g, route(g, dehn({2, 0, 0}, {0, 1, 0})));
  CHECK(text.rfind("component,step,kind,id,from,to,winding,encircled,direction\n", 0) == 0);
  CHECK(text.find("0,0,crossing,e1,0,0,0,,forward") != std::string::npos);
  CHECK(text.find("1,0,core,e2") != std::string::npos);
}

TEST_CASE("number formatting round-trips and refuses non-finite values") {
  for (double x : {0.1, -2.0 / 3.0, 1e-300, 6.02214076e23, -0.0}) {
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
  CHECK(format_double(2.0) == "2");
  CHECK_THROWS_AS(format_double(std::numeric_limits<double>::quiet_NaN()), std::logic_error);
  CHECK_THROWS_AS(format_double(std::numeric_limits<double>::infinity()), std::logic_error);
}

TEST_CASE("provenance header") {
  const std::string h = provenance_header("curvetrace sample g.json --seed 3", "3");
  CHECK(h == std::string("# tool: curvetrace ") + kToolVersion +
                 "\n# command: curvetrace sample g.json --seed 3\n# seed: 3\n");
}

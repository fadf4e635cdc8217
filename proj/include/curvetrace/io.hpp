#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "curvetrace/dehn.hpp"
#include "curvetrace/graph.hpp"
#include "curvetrace/moduli.hpp"
#include "curvetrace/route.hpp"

namespace curvetrace {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws InvalidInput naming the path when
/// the file is missing or malformed.
Json read_json_file(const std::string& path);

PantsGraph graph_from_json(const Json& j);
Json graph_to_json(const PantsGraph& g);
PantsGraph load_graph(const std::string& path);

/// Dehn file: {"edge-id": [m, t], ...}; unlisted edges get (0, 0).
DehnParameter dehn_from_json(const PantsGraph& g, const Json& j);
Json dehn_to_json(const PantsGraph& g, const DehnParameter& d);
DehnParameter load_dehn(const PantsGraph& g, const std::string& path);

/// Angle file: {"edge-id": a, ...} covering every edge.
AngleVector angles_from_json(const PantsGraph& g, const Json& j);
/// Twist file: {"edge-id": theta, ...}; unlisted internal edges get 0.
TwistVector twists_from_json(const PantsGraph& g, const Json& j);
Json angles_to_json(const PantsGraph& g, const AngleVector& a);
Json twists_to_json(const PantsGraph& g, const TwistVector& t);

/// Angles, twists and per trinion the 8 real entries (row-major, re/im
/// interleaved) of X and Y.
Json representation_to_json(const PantsGraph& g, const RepresentationPoint& rep);

/// Human-readable listing of a route, one component per line.
std::string format_route(const PantsGraph& g, const CurveRoute& r);

/// Round-trip decimal form used in every CSV (printf %.17g). Throws
/// std::logic_error for NaN or infinity, which must never be emitted.
std::string format_double(double x);

/// "# tool: curvetrace <version>", "# command: ...", "# seed: ..." lines.
std::string provenance_header(const std::string& command_line, const std::string& seed);

extern const char* const kToolVersion;

}  // namespace curvetrace

#pragma once

#include <string>
#include <vector>

#include "curvetrace/dehn.hpp"
#include "curvetrace/graph.hpp"
#include "curvetrace/io.hpp"

namespace fixtures {

inline curvetrace::PantsGraph surface(const std::string& name) {
  return curvetrace::load_graph(std::string(CURVETRACE_SURFACES) + "/" + name + ".json");
}

inline curvetrace::PantsGraph genus2() { return surface("genus2"); }
inline curvetrace::PantsGraph one_holed_torus() { return surface("one_holed_torus"); }
inline curvetrace::PantsGraph four_holed_sphere() { return surface("four_holed_sphere"); }

/// Genus two with relabelled ids, the trinions listed in the other order
/// and the edges permuted to (e3, e1, e2).
inline curvetrace::PantsGraph genus2_relabelled() {
  using namespace curvetrace;
  return PantsGraph({{"Q", VertexKind::Trinion}, {"P", VertexKind::Trinion}},
                    {{"c", {"P", 3}, {"Q", 3}, false},
                     {"a", {"P", 1}, {"Q", 1}, false},
                     {"b", {"P", 2}, {"Q", 2}, false}});
}

/// Genus two with every annulus glued in the conjugate parametrization.
inline curvetrace::PantsGraph genus2_reversed() {
  using namespace curvetrace;
  return PantsGraph({{"T1", VertexKind::Trinion}, {"T2", VertexKind::Trinion}},
                    {{"e1", {"T1", 1}, {"T2", 1}, true},
                     {"e2", {"T1", 2}, {"T2", 2}, true},
                     {"e3", {"T1", 3}, {"T2", 3}, true}});
}

/// Genus two built as two one-holed tori joined along a separating curve.
inline curvetrace::PantsGraph genus2_dumbbell() {
  using namespace curvetrace;
  return PantsGraph({{"L", VertexKind::Trinion}, {"R", VertexKind::Trinion}},
                    {{"l", {"L", 1}, {"L", 2}, false},
                     {"r", {"R", 1}, {"R", 2}, true},
                     {"s", {"L", 3}, {"R", 3}, false}});
}

inline std::vector<curvetrace::PantsGraph> all_surfaces() {
  return {genus2(), one_holed_torus(), four_holed_sphere(), genus2_reversed(), genus2_dumbbell()};
}

inline curvetrace::DehnParameter dehn(std::vector<int> m, std::vector<int> t) {
  return curvetrace::DehnParameter{std::move(m), std::move(t)};
}

}  // namespace fixtures

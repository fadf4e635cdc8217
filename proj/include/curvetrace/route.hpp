#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "curvetrace/dehn.hpp"
#include "curvetrace/graph.hpp"

namespace curvetrace {

/// Arc counts of the elementary multicurve C(m1, m2, m3) in one trinion.
///
/// `between[k]` counts arcs joining the two slots other than k+1
/// (so between[2] is x12). `self[k]` counts arcs from slot k+1 back to
/// itself; these all go around slot `encircled[k]` (0 when self[k] == 0).
struct TrinionArcPattern {
  std::array<int, 3> between{};
  std::array<int, 3> self{};
  std::array<int, 3> encircled{};

  int x(int i, int j) const;  // arcs between slots i and j (1-based; i == j for self-arcs)
};

/// Requires an even sum. Triangle case: x_ij = (m_i + m_j - m_k) / 2.
/// Otherwise the long slot k gets (m_k - m_i - m_j) / 2 self-arcs around
/// the lower-numbered of the two other slots.
TrinionArcPattern arc_pattern(int m1, int m2, int m3);

/// Homotopy class of a trinion arc. For arcs between distinct slots this is
/// the class running along the spokes; a self-arc traversed with `forward`
/// set goes once around `encircled` with that slot's boundary orientation.
struct ArcType {
  int from_slot = 1;
  int to_slot = 2;
  int encircled = 0;
  bool forward = true;
};

struct TrinionArc {
  std::size_t trinion = 0;
  int from_slot = 1;
  int from_pos = 0;  // endpoint positions, in slot boundary order
  int to_slot = 1;
  int to_pos = 0;
  int encircled = 0;
  int parallel_index = 0;  // 0 = innermost arc of its parallel family

  ArcType type() const;
};

/// A strand of the annulus of `edge`. Indices are in the annulus's own angle
/// order; inlet sits on end0, outlet on end1. `forward` is the traversal
/// direction (end0 -> end1).
struct AnnulusCrossing {
  std::size_t edge = 0;
  int inlet = 0;
  int outlet = 0;
  int winding = 0;
  bool forward = true;
};

using RouteStep = std::variant<AnnulusCrossing, TrinionArc>;

/// One closed component. Either an alternating cycle crossing, arc,
/// crossing, arc, ... (starting with a forward crossing), or a parallel copy
/// of the core of `core_edge` (m = 0 edges with t > 0), with no steps.
struct RouteComponent {
  std::vector<RouteStep> steps;
  std::optional<std::size_t> core_edge;

  bool operator==(const RouteComponent&) const = default;
};

struct CurveRoute {
  std::vector<RouteComponent> components;

  /// Number of crossings of `edge` over all components.
  int crossing_count(std::size_t edge) const;
  /// Sum of windings over the crossings of `edge`.
  long winding_sum(std::size_t edge) const;

  bool operator==(const CurveRoute&) const = default;
};

bool operator==(const AnnulusCrossing& a, const AnnulusCrossing& b);
bool operator==(const TrinionArc& a, const TrinionArc& b);

/// Strand routing of C(m, t): glues the elementary trinion multicurves to
/// the annulus multicurves and extracts the closed components.
CurveRoute route(const PantsGraph& g, const DehnParameter& d);

/// Annulus strand map: inlet i -> outlet (i + t) mod m, winding floor((i + t) / m).
struct StrandTarget {
  int outlet;
  int winding;
};
StrandTarget strand_target(int inlet, int m, int t);

}  // namespace curvetrace

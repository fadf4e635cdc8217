#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "curvetrace/graph.hpp"

namespace curvetrace {

/// Dehn coordinates (m, t), indexed by edge position in the graph.
struct DehnParameter {
  std::vector<int> m;
  std::vector<int> t;

  /// The empty multicurve on a graph with `edges` edges.
  static DehnParameter zero(std::size_t edges) {
    return DehnParameter{std::vector<int>(edges, 0), std::vector<int>(edges, 0)};
  }

  /// Lexicographic on m (first edge most significant), then on t.
  friend auto operator<=>(const DehnParameter&, const DehnParameter&) = default;
  friend bool operator==(const DehnParameter&, const DehnParameter&) = default;
};

std::vector<Violation> validate_dehn(const PantsGraph& g, const DehnParameter& d);

/// Throws Error(InvalidInput) when d is not admissible on g.
void require_valid(const PantsGraph& g, const DehnParameter& d);

/// Fractional twist: t_j <- t_j + ell. Requires j internal with m_j >= 1.
DehnParameter twist(const PantsGraph& g, const DehnParameter& d, std::size_t edge, int ell);

/// All admissible parameters with m_j <= m_max and |t_j| <= t_max, sorted.
///
/// External edges carry m = 0; their t (copies of the boundary curve) is
/// held at 0 unless `include_boundary` is set, in which case it ranges
/// over 0..t_max.
std::vector<DehnParameter> enumerate_dehn(const PantsGraph& g, int m_max, int t_max,
                                          bool include_boundary = false);

}  // namespace curvetrace

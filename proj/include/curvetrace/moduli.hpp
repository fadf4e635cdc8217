#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "curvetrace/graph.hpp"
#include "curvetrace/su2.hpp"

namespace curvetrace {

/// Holonomy angles a_j in [0, pi], one per edge (external edges carry the
/// prescribed boundary angle).
struct AngleVector {
  std::vector<double> a;
};

/// Torus coordinates theta_j in [0, 1), one slot per edge; entries of
/// external edges are ignored and kept at 0.
struct TwistVector {
  std::vector<double> theta;
};

enum class DeltaRegion { Interior, Boundary, Outside };

const char* to_string(DeltaRegion r);

/// Classifies alpha against |a_i - a_j| <= a_k <= min(a_i + a_j, 2pi - a_i - a_j)
/// at every trinion. Interior iff every inequality is strict.
DeltaRegion in_delta(const PantsGraph& g, const AngleVector& alpha);

/// The same classification for a single trinion's angle triple.
DeltaRegion trinion_region(double a1, double a2, double a3);

/// n_z = (cos a1 cos a2 - cos a3) / (sin a1 sin a2); the trinion is
/// realizable by the tilted model iff |n_z| <= 1. Empty when sin a1 sin a2 == 0.
std::optional<double> tilt_cosine(double a1, double a2, double a3);

/// Smallest Euclidean distance, in the trinion's own (a1, a2, a3) coordinates,
/// from alpha to a face of the local polytope, minimized over trinions.
/// Negative when alpha lies outside.
double face_distance(const PantsGraph& g, const AngleVector& alpha);

/// Ordered eigenvectors of a slot holonomy for e^{+ia} and e^{-ia}.
/// Columns of matrix() form a special unitary matrix, so omega(e+, e-) = 1.
struct EigenFrame {
  Vec2 plus;
  Vec2 minus;

  Mat2 matrix() const;
};

/// Phase-normalized frame of a special unitary h with trace 2cos(a):
/// e+ has its largest-modulus coordinate real positive, e- = (-conj(e+_2), conj(e+_1)).
/// Central h gets the standard basis.
EigenFrame eigenframe(const Mat2& h, double a);

/// Per-trinion holonomy: X on slot 1, Y on slot 2, (XY)^{-1} on slot 3.
struct TrinionHolonomy {
  Mat2 x;
  Mat2 y;

  Mat2 slot_loop(int slot) const;
};

/// Connection data on one edge, copied from the graph so evaluation needs
/// only the representation.
struct EdgeGluing {
  bool internal = false;
  bool reversed = false;
  std::array<std::size_t, 2> trinion{};
  std::array<int, 2> slot{};
};

/// An SU(2) representation of the surface group assembled from trinion
/// representations glued along annuli.
///
/// Each annulus transport, from the end0 trinion basis to the end1 trinion
/// basis, is F0 * J * diag(e^{2 pi i theta}, e^{-2 pi i theta}) * F1^{-1},
/// with F the slot eigenframes and J the quarter turn exchanging eigenlines.
class RepresentationPoint {
 public:
  RepresentationPoint() = default;
  RepresentationPoint(AngleVector angles, TwistVector twists, std::vector<TrinionHolonomy> trinions,
                      std::vector<std::array<EigenFrame, 3>> frames, std::vector<EdgeGluing> gluings);

  const AngleVector& angles() const { return angles_; }
  const TwistVector& twists() const { return twists_; }
  const std::vector<TrinionHolonomy>& trinions() const { return trinions_; }
  const std::vector<EdgeGluing>& gluings() const { return gluings_; }
  const EigenFrame& frame(std::size_t trinion, int slot) const { return frames_.at(trinion).at(slot - 1); }

  std::size_t edge_count() const { return gluings_.size(); }
  double angle(std::size_t edge) const { return angles_.a.at(edge); }
  double twist(std::size_t edge) const { return twists_.theta.at(edge); }

  /// Boundary loop of a trinion slot, in the trinion's basis.
  Mat2 slot_loop(std::size_t trinion, int slot) const { return trinions_.at(trinion).slot_loop(slot); }

  /// Annulus transport of an internal edge at twist theta + offset.
  Mat2 gluing(std::size_t edge, double offset = 0.0) const;

  /// Holonomy around the edge's core is central (a in {0, pi}).
  bool central(std::size_t edge) const;
  /// Internal edges with central holonomy (torus action undefined there).
  std::vector<std::size_t> degenerate_edges() const;

  /// Replaces the twist vector; frames and holonomies are unchanged.
  RepresentationPoint with_twists(TwistVector twists) const;

 private:
  AngleVector angles_;
  TwistVector twists_;
  std::vector<TrinionHolonomy> trinions_;
  std::vector<std::array<EigenFrame, 3>> frames_;
  std::vector<EdgeGluing> gluings_;
};

/// Explicit representation over alpha in Delta. Throws OutsideDelta.
RepresentationPoint build_representation(const PantsGraph& g, const AngleVector& alpha,
                                         const TwistVector& theta);

/// Torus point: one offset per edge (external entries ignored).
struct TorusPoint {
  std::vector<double> t;
};

/// theta_j <- theta_j + t_j mod 1 on internal edges. Throws CentralHolonomy
/// when t_j is not an integer on an edge with central holonomy.
RepresentationPoint act(const PantsGraph& g, const RepresentationPoint& rep, const TorusPoint& t);

/// Reduction to [0, 1) that is exact for integer shifts.
double reduce_unit(double x);

struct InteriorSample {
  AngleVector angles;
  TwistVector twists;
  std::uint64_t seed = 0;
  std::size_t draws = 0;
};

/// Rejection sampler on Int(Delta) at face distance >= margin.
/// Throws EmptyInterior after max_draws rejected draws.
inline constexpr std::size_t kMaxInteriorDraws = 1000000;
InteriorSample sample_interior(const PantsGraph& g, double margin, std::uint64_t seed,
                               std::size_t max_draws = kMaxInteriorDraws);

}  // namespace curvetrace

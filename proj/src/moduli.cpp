#include "curvetrace/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "curvetrace/error.hpp"

namespace curvetrace {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCentralTolerance = 1e-12;

std::array<double, 3> trinion_angles(const PantsGraph& g, const AngleVector& alpha, std::size_t tr) {
  return {alpha.a[g.slot_edge(tr, 1)], alpha.a[g.slot_edge(tr, 2)], alpha.a[g.slot_edge(tr, 3)]};
}

// Slacks of a1+a2-a3, a1+a3-a2, a2+a3-a1 and 2pi-(a1+a2+a3).
std::array<double, 4> slacks(double a1, double a2, double a3) {
  return {a1 + a2 - a3, a1 + a3 - a2, a2 + a3 - a1, 2.0 * kPi - (a1 + a2 + a3)};
}

void check_sizes(const PantsGraph& g, const AngleVector& alpha) {
  if (alpha.a.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidInput, "angle vector has " + std::to_string(alpha.a.size()) +
                                             " entries for " + std::to_string(g.edge_count()) + " edges");
  }
  for (double x : alpha.a) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidInput, "angle vector contains a non-finite value");
  }
}

DeltaRegion region_unchecked(const PantsGraph& g, const AngleVector& alpha);
double face_distance_unchecked(const PantsGraph& g, const AngleVector& alpha);

}  // namespace

const char* to_string(DeltaRegion r) {
  switch (r) {
    case DeltaRegion::Interior: return "interior";
    case DeltaRegion::Boundary: return "boundary";
    case DeltaRegion::Outside: return "outside";
  }
  return "unknown";
}

DeltaRegion trinion_region(double a1, double a2, double a3) {
  const auto s = slacks(a1, a2, a3);
  const double lo = *std::min_element(s.begin(), s.end());
  if (lo < 0.0) return DeltaRegion::Outside;
  if (lo == 0.0) return DeltaRegion::Boundary;
  return DeltaRegion::Interior;
}

DeltaRegion in_delta(const PantsGraph& g, const AngleVector& alpha) {
  require_valid(g);
  check_sizes(g, alpha);
  return region_unchecked(g, alpha);
}

namespace {

DeltaRegion region_unchecked(const PantsGraph& g, const AngleVector& alpha) {
  DeltaRegion worst = DeltaRegion::Interior;
  for (std::size_t tr = 0; tr < g.trinion_count(); ++tr) {
    const auto a = trinion_angles(g, alpha, tr);
    const DeltaRegion r = trinion_region(a[0], a[1], a[2]);
    if (r == DeltaRegion::Outside) return r;
    if (r == DeltaRegion::Boundary) worst = r;
  }
  return worst;
}

double face_distance_unchecked(const PantsGraph& g, const AngleVector& alpha) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t tr = 0; tr < g.trinion_count(); ++tr) {
    const auto a = trinion_angles(g, alpha, tr);
    for (double s : slacks(a[0], a[1], a[2])) best = std::min(best, s / std::sqrt(3.0));
  }
  return best;
}

}  // namespace

std::optional<double> tilt_cosine(double a1, double a2, double a3) {
  const double denom = std::sin(a1) * std::sin(a2);
  if (denom == 0.0) return std::nullopt;
  return (std::cos(a1) * std::cos(a2) - std::cos(a3)) / denom;
}

double face_distance(const PantsGraph& g, const AngleVector& alpha) {
  require_valid(g);
  check_sizes(g, alpha);
  return face_distance_unchecked(g, alpha);
}

Mat2 EigenFrame::matrix() const {
  Mat2 f;
  f.col(0) = plus;
  f.col(1) = minus;
  return f;
}

EigenFrame eigenframe(const Mat2& h, double a) {
  if (std::min(a, kPi - a) < kCentralTolerance) {
    return EigenFrame{Vec2(1.0, 0.0), Vec2(0.0, 1.0)};
  }
  // (h - e^{-ia}) annihilates the e^{-ia} eigenline, so its columns span the e^{+ia} one.
  const Mat2 proj = h - std::polar(1.0, -a) * Mat2::Identity();
  Vec2 v = proj.col(0).norm() >= proj.col(1).norm() ? Vec2(proj.col(0)) : Vec2(proj.col(1));
  v.normalize();
  const int big = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
  v *= std::conj(v(big)) / std::abs(v(big));
  v(big) = std::abs(v(big));
  const Vec2 w(-std::conj(v(1)), std::conj(v(0)));
  return EigenFrame{v, w};
}

Mat2 TrinionHolonomy::slot_loop(int slot) const {
  switch (slot) {
    case 1: return x;
    case 2: return y;
    case 3: return su2_inverse(x * y);
    default: throw Error(ErrorCode::InvalidInput, "slot must be 1, 2 or 3");
  }
}

RepresentationPoint::RepresentationPoint(AngleVector angles, TwistVector twists,
                                         std::vector<TrinionHolonomy> trinions,
                                         std::vector<std::array<EigenFrame, 3>> frames,
                                         std::vector<EdgeGluing> gluings)
    : angles_(std::move(angles)),
      twists_(std::move(twists)),
      trinions_(std::move(trinions)),
      frames_(std::move(frames)),
      gluings_(std::move(gluings)) {}

Mat2 RepresentationPoint::gluing(std::size_t edge, double offset) const {
  const EdgeGluing& gl = gluings_.at(edge);
  if (!gl.internal) throw Error(ErrorCode::InvalidInput, "gluing requested on an external edge");
  const Mat2 f0 = frame(gl.trinion[0], gl.slot[0]).matrix();
  const Mat2 f1 = frame(gl.trinion[1], gl.slot[1]).matrix();
  return f0 * quarter_turn() * phase_diag(2.0 * kPi * (twists_.theta[edge] + offset)) * f1.adjoint();
}

bool RepresentationPoint::central(std::size_t edge) const {
  const double a = angles_.a.at(edge);
  return std::min(a, kPi - a) < kCentralTolerance;
}

std::vector<std::size_t> RepresentationPoint::degenerate_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < gluings_.size(); ++e) {
    if (gluings_[e].internal && central(e)) out.push_back(e);
  }
  return out;
}

RepresentationPoint RepresentationPoint::with_twists(TwistVector twists) const {
  RepresentationPoint out = *this;
  out.twists_ = std::move(twists);
  return out;
}

double reduce_unit(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;
  return r;
}

RepresentationPoint build_representation(const PantsGraph& g, const AngleVector& alpha,
                                         const TwistVector& theta) {
  require_valid(g);
  check_sizes(g, alpha);
  if (theta.theta.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidInput, "twist vector has " + std::to_string(theta.theta.size()) +
                                             " entries for " + std::to_string(g.edge_count()) + " edges");
  }
  if (in_delta(g, alpha) == DeltaRegion::Outside) {
    throw Error(ErrorCode::OutsideDelta, "angle vector lies outside the moment polytope");
  }

  std::vector<TrinionHolonomy> trinions;
  std::vector<std::array<EigenFrame, 3>> frames;
  trinions.reserve(g.trinion_count());
  frames.reserve(g.trinion_count());
  for (std::size_t tr = 0; tr < g.trinion_count(); ++tr) {
    const auto a = trinion_angles(g, alpha, tr);
    // Degenerate tilt (a central slot 1 or 2 holonomy) commutes with X: take n = e_z.
    const double nz = std::clamp(tilt_cosine(a[0], a[1], a[2]).value_or(1.0), -1.0, 1.0);
    const double nx = std::sqrt(std::max(0.0, 1.0 - nz * nz));
    const Complex i_sin(0.0, std::sin(a[1]));
    Mat2 y;
    y << std::cos(a[1]) + i_sin * nz, i_sin * nx, i_sin * nx, std::cos(a[1]) - i_sin * nz;

    TrinionHolonomy h{phase_diag(a[0]), y};
    frames.push_back({eigenframe(h.slot_loop(1), a[0]), eigenframe(h.slot_loop(2), a[1]),
                      eigenframe(h.slot_loop(3), a[2])});
    trinions.push_back(h);
  }

  std::vector<EdgeGluing> gluings(g.edge_count());
  TwistVector twists{std::vector<double>(g.edge_count(), 0.0)};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    EdgeGluing& gl = gluings[e];
    gl.internal = g.is_internal(e);
    gl.reversed = g.edge(e).reversed;
    for (int side = 0; side < 2; ++side) {
      const Attachment at = g.attachment(e, side);
      gl.trinion[side] = at.trinion.value_or(0);
      gl.slot[side] = at.slot;
    }
    if (gl.internal) twists.theta[e] = reduce_unit(theta.theta[e]);
  }
  return RepresentationPoint(alpha, std::move(twists), std::move(trinions), std::move(frames),
                             std::move(gluings));
}

RepresentationPoint act(const PantsGraph& g, const RepresentationPoint& rep, const TorusPoint& t) {
  if (t.t.size() != g.edge_count() || rep.edge_count() != g.edge_count()) {
    throw Error(ErrorCode::InvalidInput, "torus point size does not match the graph");
  }
  TwistVector twists = rep.twists();
  for (std::size_t e : g.internal_edges()) {
    const double shift = reduce_unit(t.t[e]);
    if (shift == 0.0) continue;
    if (rep.central(e)) {
      throw Error(ErrorCode::CentralHolonomy,
                  "torus action undefined on edge '" + g.edge(e).id + "': central holonomy");
    }
    double v = twists.theta[e] + shift;
    if (v >= 1.0) v -= 1.0;
    twists.theta[e] = v;
  }
  return rep.with_twists(std::move(twists));
}

InteriorSample sample_interior(const PantsGraph& g, double margin, std::uint64_t seed,
                               std::size_t max_draws) {
  require_valid(g);
  if (!(margin > 0.0)) throw Error(ErrorCode::InvalidInput, "margin must be positive");
  std::mt19937_64 rng(seed);
  AngleVector alpha{std::vector<double>(g.edge_count(), 0.0)};
  for (std::size_t draw = 1; draw <= max_draws; ++draw) {
    for (double& a : alpha.a) a = kPi * unit_uniform(rng);
    if (face_distance_unchecked(g, alpha) >= margin && region_unchecked(g, alpha) == DeltaRegion::Interior) {
      TwistVector twists{std::vector<double>(g.edge_count(), 0.0)};
      for (std::size_t e : g.internal_edges()) twists.theta[e] = unit_uniform(rng);
      return InteriorSample{alpha, twists, seed, draw};
    }
  }
  throw Error(ErrorCode::EmptyInterior, "no interior point at margin " + std::to_string(margin) + " after " +
                                            std::to_string(max_draws) + " draws");
}

}  // namespace curvetrace

#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "curvetrace/dehn.hpp"
#include "curvetrace/moduli.hpp"
#include "curvetrace/route.hpp"

namespace curvetrace {

inline constexpr double kVanishTolerance = 1e-8;
inline constexpr double kNonVanishThreshold = 1e-6;

/// Fourier coefficients of a trace function along the torus orbit through
/// a base point, on the box prod_j [-N_j, N_j] over the internal edges.
///
/// Coefficients are stored densely; axis 0 (the first internal edge) is
/// the most significant index.
struct IsotypeTable {
  std::vector<std::size_t> edges;  // graph edge index of each axis
  std::vector<int> grid;           // N_j per axis; sample count is 2 N_j + 1
  std::vector<Complex> coefficients;
  double reconstruction_error = 0.0;  // max |inverse DFT - samples|

  std::size_t size() const { return coefficients.size(); }
  /// Multi-index of the flat position `i`.
  std::vector<int> key(std::size_t i) const;
  /// Coefficient at k; zero outside the stored box.
  Complex at(const std::vector<int>& k) const;
};

/// Samples T(t . base) on the odd grid t_j = n / (2 N_j + 1) and applies the
/// exact inverse DFT. `grid` holds N_j for each internal edge in graph
/// order; all N_j >= 1. Throws CentralHolonomy if any internal edge of the
/// base point has central holonomy.
IsotypeTable isotypes(const PantsGraph& g, const RepresentationPoint& rep, const CurveRoute& r,
                      const std::vector<int>& grid);

/// Isotypes for the circle action of a single internal edge: entry n is
/// the coefficient of k = n - N, for k in [-N, N].
std::vector<Complex> circle_isotypes(const PantsGraph& g, const RepresentationPoint& rep,
                                     const CurveRoute& r, std::size_t edge, int N);

struct SupportReport {
  bool pass = true;
  double max_violation = 0.0;   // largest |c_k| with some |k_j| > m_j
  std::vector<int> worst_key;   // where it occurs (empty if none)
  std::size_t checked = 0;      // number of coefficients outside the support
};

/// Checks that every coefficient with some |k_j| > m_j is <= 1e-8.
/// Requires N_j >= m_j + 1 on every axis.
SupportReport support_check(const IsotypeTable& table, const DehnParameter& d);

struct TopIsotypes {
  std::vector<std::pair<std::vector<int>, Complex>> entries;  // |k_j| = m_j on every axis
  double min_modulus = 0.0;
};

/// The extremal coefficients of T_{C(m,t)}. Throws NotInterior when the
/// base angles are not interior, CentralHolonomy as in isotypes.
TopIsotypes top_isotype(const PantsGraph& g, const RepresentationPoint& rep, const DehnParameter& d);

/// Orientation of the twist on an edge relative to its circle action:
/// +1, or -1 when the annulus is glued with the conjugate parametrization.
int twist_orientation(const PantsGraph& g, std::size_t edge);

/// max over the two signs of
/// |Pi_{+-k}(T_{twist(d, j, ell)}) - (-1)^{ell (k-1)} e^{+-i s ell a_j} Pi_{+-k}(T_d)|
/// with k = m_j and s = twist_orientation(g, j).
double twist_phase_check(const PantsGraph& g, const RepresentationPoint& rep, const DehnParameter& d,
                         std::size_t edge, int ell);

/// Largest k <= k_max with |Pi_{k delta_j}(T_r)| > 1e-6 (0 if none).
/// Throws NotInterior and CentralHolonomy.
int intersection_number(const PantsGraph& g, const RepresentationPoint& rep, std::size_t edge,
                        const CurveRoute& r, int k_max);

/// phi_{k,l}(a) = (-1)^{l(k-1)} e^{i l a} for k != 0 and (2 cos a)^l for k = 0.
/// Throws InvalidInput for k < 0, or k = 0 with l < 0.
Complex phi(int k, int ell, double alpha);

/// Sign convention for the k = 0 factor in the factorized phase law.
enum class CoreFactor {
  Quoted,   // (2 cos a)^l, as phi returns it
  Trace,    // (-2 cos a)^l, the factor of l core copies under chi = -tr
};

struct PhaseLawReport {
  Complex ratio;      // Pi_M(T_{C(M,t)}) / Pi_M(T_{C(M,0)})
  Complex predicted;  // prod_j of the per-edge factors
  double residual = 0.0;
};

/// Compares the top coefficient ratio with the product of per-edge phase
/// factors. Edges with m_j >= 1 use phi with the twist orientation; edges
/// with m_j = 0 use the selected core factor.
PhaseLawReport phase_law_check(const PantsGraph& g, const RepresentationPoint& rep, const DehnParameter& d,
                               CoreFactor core = CoreFactor::Trace);

}  // namespace curvetrace

#include "curvetrace/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "curvetrace/error.hpp"
#include "curvetrace/parallel.hpp"
#include "curvetrace/trace.hpp"

namespace curvetrace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_noncentral(const PantsGraph& g, const RepresentationPoint& rep) {
  for (std::size_t e : g.internal_edges()) {
    if (rep.central(e)) {
      throw Error(ErrorCode::CentralHolonomy,
                  "edge '" + g.edge(e).id + "' has central holonomy; its circle action is undefined");
    }
  }
}

void require_interior(const PantsGraph& g, const RepresentationPoint& rep) {
  if (in_delta(g, rep.angles()) != DeltaRegion::Interior) {
    throw Error(ErrorCode::NotInterior, "base point angles are not in the interior of the polytope");
  }
}

// In-place DFT along one axis of a dense row-major array. Forward maps
// samples n = 0..L-1 to coefficients k = -N..N stored at k + N, with the
// 1/L normalization; inverse maps back.
void dft_axis(std::vector<Complex>& data, const std::vector<int>& lengths, std::size_t axis, bool forward) {
  const std::size_t L = static_cast<std::size_t>(lengths[axis]);
  const int N = static_cast<int>(L / 2);
  std::size_t stride = 1;
  for (std::size_t a = axis + 1; a < lengths.size(); ++a) stride *= static_cast<std::size_t>(lengths[a]);
  const std::size_t block = stride * L;

  std::vector<Complex> twiddle(L);
  for (std::size_t r = 0; r < L; ++r) {
    twiddle[r] = std::polar(1.0, (forward ? -kTwoPi : kTwoPi) * static_cast<double>(r) / static_cast<double>(L));
  }
  std::vector<Complex> line(L), out(L);
  for (std::size_t base = 0; base < data.size(); base += block) {
    for (std::size_t s = 0; s < stride; ++s) {
      for (std::size_t i = 0; i < L; ++i) line[i] = data[base + s + i * stride];
      for (std::size_t o = 0; o < L; ++o) {
        Complex acc = 0.0;
        if (forward) {
          const long k = static_cast<long>(o) - N;
          for (std::size_t n = 0; n < L; ++n) {
            const long r = ((k * static_cast<long>(n)) % static_cast<long>(L) + static_cast<long>(L)) %
                           static_cast<long>(L);
            acc += line[n] * twiddle[static_cast<std::size_t>(r)];
          }
          out[o] = acc / static_cast<double>(L);
        } else {
          for (std::size_t c = 0; c < L; ++c) {
            const long k = static_cast<long>(c) - N;
            const long r = ((k * static_cast<long>(o)) % static_cast<long>(L) + static_cast<long>(L)) %
                           static_cast<long>(L);
            acc += line[c] * twiddle[static_cast<std::size_t>(r)];
          }
          out[o] = acc;
        }
      }
      for (std::size_t i = 0; i < L; ++i) data[base + s + i * stride] = out[i];
    }
  }
}

std::vector<Complex> transform(const std::vector<double>& samples, const std::vector<int>& lengths,
                               double* reconstruction_error) {
  std::vector<Complex> coeffs(samples.begin(), samples.end());
  for (std::size_t a = 0; a < lengths.size(); ++a) dft_axis(coeffs, lengths, a, true);
  if (reconstruction_error != nullptr) {
    std::vector<Complex> back = coeffs;
    for (std::size_t a = 0; a < lengths.size(); ++a) dft_axis(back, lengths, a, false);
    double err = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) err = std::max(err, std::abs(back[i] - samples[i]));
    *reconstruction_error = err;
  }
  return coeffs;
}

}  // namespace

std::vector<int> IsotypeTable::key(std::size_t i) const {
  std::vector<int> k(grid.size());
  for (std::size_t a = grid.size(); a-- > 0;) {
    const std::size_t L = static_cast<std::size_t>(2 * grid[a] + 1);
    k[a] = static_cast<int>(i % L) - grid[a];
    i /= L;
  }
  return k;
}

Complex IsotypeTable::at(const std::vector<int>& k) const {
  if (k.size() != grid.size()) throw Error(ErrorCode::InvalidInput, "isotype key has the wrong length");
  std::size_t idx = 0;
  for (std::size_t a = 0; a < grid.size(); ++a) {
    if (std::abs(k[a]) > grid[a]) return Complex(0.0, 0.0);
    idx = idx * static_cast<std::size_t>(2 * grid[a] + 1) + static_cast<std::size_t>(k[a] + grid[a]);
  }
  return coefficients[idx];
}

IsotypeTable isotypes(const PantsGraph& g, const RepresentationPoint& rep, const CurveRoute& r,
                      const std::vector<int>& grid) {
  require_valid(g);
  const auto& axes = g.internal_edges();
  if (grid.size() != axes.size()) {
    throw Error(ErrorCode::InvalidInput, "grid needs one size per internal edge (" +
                                             std::to_string(axes.size()) + "), got " +
                                             std::to_string(grid.size()));
  }
  for (int n : grid) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "grid sizes must be >= 1");
  }
  require_noncentral(g, rep);

  std::vector<int> lengths(grid.size());
  std::size_t points = 1;
  for (std::size_t a = 0; a < grid.size(); ++a) {
    lengths[a] = 2 * grid[a] + 1;
    points *= static_cast<std::size_t>(lengths[a]);
  }

  const RouteEvaluator eval(rep, r);
  std::vector<double> samples(points);
  parallel_for(points, [&](std::size_t i) {
    std::vector<double> offsets(g.edge_count(), 0.0);
    std::size_t rest = i;
    for (std::size_t a = axes.size(); a-- > 0;) {
      const std::size_t L = static_cast<std::size_t>(lengths[a]);
      offsets[axes[a]] = static_cast<double>(rest % L) / static_cast<double>(L);
      rest /= L;
    }
    samples[i] = eval.value(offsets);
  });

  IsotypeTable table;
  table.edges = axes;
  table.grid = grid;
  table.coefficients = transform(samples, lengths, &table.reconstruction_error);
  return table;
}

std::vector<Complex> circle_isotypes(const PantsGraph& g, const RepresentationPoint& rep,
                                     const CurveRoute& r, std::size_t edge, int N) {
  require_valid(g);
  if (edge >= g.edge_count() || !g.is_internal(edge)) {
    throw Error(ErrorCode::InvalidInput, "circle action requires an internal edge");
  }
  if (N < 1) throw Error(ErrorCode::InvalidInput, "grid size must be >= 1");
  if (rep.central(edge)) {
    throw Error(ErrorCode::CentralHolonomy,
                "edge '" + g.edge(edge).id + "' has central holonomy; its circle action is undefined");
  }
  const RouteEvaluator eval(rep, r);
  const int L = 2 * N + 1;
  std::vector<double> samples(static_cast<std::size_t>(L));
  for (int n = 0; n < L; ++n) {
    samples[static_cast<std::size_t>(n)] = eval.value_on_edge(edge, static_cast<double>(n) / L);
  }
  return transform(samples, {L}, nullptr);
}

SupportReport support_check(const IsotypeTable& table, const DehnParameter& d) {
  for (std::size_t a = 0; a < table.edges.size(); ++a) {
    const std::size_t e = table.edges[a];
    if (e >= d.m.size()) throw Error(ErrorCode::InvalidInput, "Dehn parameter does not match the table");
    if (table.grid[a] < d.m[e] + 1) {
      throw Error(ErrorCode::InvalidInput, "grid too small for a support check: need N_j >= m_j + 1");
    }
  }
  SupportReport rep;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::vector<int> k = table.key(i);
    bool outside = false;
    for (std::size_t a = 0; a < k.size() && !outside; ++a) outside = std::abs(k[a]) > d.m[table.edges[a]];
    if (!outside) continue;
    ++rep.checked;
    const double mod = std::abs(table.coefficients[i]);
    if (rep.worst_key.empty() || mod > rep.max_violation) {
      rep.max_violation = mod;
      rep.worst_key = k;
    }
  }
  rep.pass = rep.max_violation <= kVanishTolerance;
  return rep;
}

TopIsotypes top_isotype(const PantsGraph& g, const RepresentationPoint& rep, const DehnParameter& d) {
  require_valid(g, d);
  require_interior(g, rep);
  const CurveRoute r = route(g, d);
  std::vector<int> grid;
  for (std::size_t e : g.internal_edges()) grid.push_back(d.m[e] + 1);
  const IsotypeTable table = isotypes(g, rep, r, grid);

  TopIsotypes out;
  const std::size_t n = grid.size();
  // Enumerate sign patterns; edges with m_j = 0 contribute the single k_j = 0.
  const std::size_t patterns = std::size_t{1} << n;
  out.min_modulus = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> seen;
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    std::vector<int> k(n);
    bool redundant = false;
    for (std::size_t a = 0; a < n; ++a) {
      const int m = d.m[table.edges[a]];
      const bool negative = (mask >> (n - 1 - a)) & 1U;
      if (m == 0 && negative) redundant = true;
      k[a] = negative ? -m : m;
    }
    if (redundant) continue;
    const Complex c = table.at(k);
    out.min_modulus = std::min(out.min_modulus, std::abs(c));
    out.entries.emplace_back(std::move(k), c);
  }
  return out;
}

int twist_orientation(const PantsGraph& g, std::size_t edge) { return g.edge(edge).reversed ? -1 : 1; }

double twist_phase_check(const PantsGraph& g, const RepresentationPoint& rep, const DehnParameter& d,
                         std::size_t edge, int ell) {
  require_valid(g, d);
  const DehnParameter twisted = twist(g, d, edge, ell);
  const int k = d.m[edge];
  const int N = k + 1;
  const std::vector<Complex> before = circle_isotypes(g, rep, route(g, d), edge, N);
  const std::vector<Complex> after = circle_isotypes(g, rep, route(g, twisted), edge, N);
  const double sign = (static_cast<long>(ell) * (k - 1)) % 2 == 0 ? 1.0 : -1.0;
  const double arg = twist_orientation(g, edge) * ell * rep.angle(edge);
  double residual = 0.0;
  for (int pm : {1, -1}) {
    const std::size_t idx = static_cast<std::size_t>(pm * k + N);
    const Complex factor = sign * std::polar(1.0, pm * arg);
    residual = std::max(residual, std::abs(after[idx] - factor * before[idx]));
  }
  return residual;
}

int intersection_number(const PantsGraph& g, const RepresentationPoint& rep, std::size_t edge,
                        const CurveRoute& r, int k_max) {
  require_valid(g);
  require_interior(g, rep);
  if (k_max < 0) throw Error(ErrorCode::InvalidInput, "k_max must be >= 0");
  // The trace is a trigonometric polynomial of degree at most the number of
  // crossings, so this grid aliases nothing.
  const int N = std::max(k_max, r.crossing_count(edge)) + 1;
  const std::vector<Complex> c = circle_isotypes(g, rep, r, edge, N);
  for (int k = k_max; k >= 1; --k) {
    if (std::abs(c[static_cast<std::size_t>(k + N)]) > kNonVanishThreshold) return k;
  }
  return 0;
}

Complex phi(int k, int ell, double alpha) {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "phi requires k >= 0");
  if (k == 0) {
    if (ell < 0) throw Error(ErrorCode::InvalidInput, "phi_{0,l} requires l >= 0");
    return Complex(std::pow(2.0 * std::cos(alpha), ell), 0.0);
  }
  const double sign = (static_cast<long>(ell) * (k - 1)) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::polar(1.0, ell * alpha);
}

PhaseLawReport phase_law_check(const PantsGraph& g, const RepresentationPoint& rep, const DehnParameter& d,
                               CoreFactor core) {
  require_valid(g, d);
  DehnParameter base = d;
  std::fill(base.t.begin(), base.t.end(), 0);
  std::vector<int> grid;
  std::vector<int> top;
  for (std::size_t e : g.internal_edges()) {
    grid.push_back(d.m[e] + 1);
    top.push_back(d.m[e]);
  }
  const Complex num = isotypes(g, rep, route(g, d), grid).at(top);
  const Complex den = isotypes(g, rep, route(g, base), grid).at(top);

  PhaseLawReport out;
  out.ratio = num / den;
  out.predicted = 1.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const int ell = d.t[e];
    if (ell == 0) continue;
    if (d.m[e] == 0) {
      const double c = 2.0 * std::cos(rep.angle(e));
      out.predicted *= core == CoreFactor::Quoted ? phi(0, ell, rep.angle(e)) : Complex(std::pow(-c, ell), 0.0);
    } else {
      out.predicted *= phi(d.m[e], ell, twist_orientation(g, e) * rep.angle(e));
    }
  }
  out.residual = std::abs(out.ratio - out.predicted);
  return out;
}

}  // namespace curvetrace

#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Core>
#include <Eigen/LU>

namespace curvetrace {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

inline Mat2 diag2(Complex a, Complex b) {
  Mat2 m;
  m << a, 0.0, 0.0, b;
  return m;
}

/// diag(e^{ix}, e^{-ix})
inline Mat2 phase_diag(double x) {
  return diag2(std::polar(1.0, x), std::polar(1.0, -x));
}

/// Quarter turn swapping the two eigenlines: [[0,-1],[1,0]].
inline Mat2 quarter_turn() {
  Mat2 m;
  m << 0.0, -1.0, 1.0, 0.0;
  return m;
}

/// Inverse of a special unitary matrix (its adjoint).
inline Mat2 su2_inverse(const Mat2& m) { return m.adjoint(); }

/// Integer power of a special unitary matrix, negative exponents allowed.
Mat2 su2_power(const Mat2& m, long exponent);

/// Max-entry deviation of m from special unitarity: max(|m m* - I|, |det m - 1|).
double su2_defect(const Mat2& m);

/// Uniform (Haar) random element of SU(2).
Mat2 random_su2(std::mt19937_64& rng);

/// Uniform double in [0, 1) using the top 53 bits of one draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// SplitMix64 finalizer, used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace curvetrace

#include "curvetrace/su2.hpp"
#include "curvetrace/error.hpp"

#include <algorithm>
#include <cmath>

namespace curvetrace {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::OutsideDelta: return "OutsideDelta";
    case ErrorCode::CentralHolonomy: return "CentralHolonomy";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::UnassignedGenerator: return "UnassignedGenerator";
    case ErrorCode::TooManyColumns: return "TooManyColumns";
  }
  return "Unknown";
}

Mat2 su2_power(const Mat2& m, long exponent) {
  Mat2 base = exponent < 0 ? su2_inverse(m) : m;
  unsigned long n = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                  : static_cast<unsigned long>(exponent);
  Mat2 result = Mat2::Identity();
  while (n > 0) {
    if (n & 1UL) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

double su2_defect(const Mat2& m) {
  const Mat2 gram = m * m.adjoint() - Mat2::Identity();
  return std::max(gram.cwiseAbs().maxCoeff(), std::abs(m.determinant() - 1.0));
}

Mat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  double q[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& x : q) {
      x = normal(rng);
      norm += x * x;
    }
  } while (norm < 1e-12);
  norm = std::sqrt(norm);
  const Complex a(q[0] / norm, q[1] / norm);
  const Complex b(q[2] / norm, q[3] / norm);
  Mat2 u;
  u << a, -std::conj(b), b, std::conj(a);
  return u;
}

}  // namespace curvetrace

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "curvetrace/dehn.hpp"
#include "curvetrace/moduli.hpp"

namespace curvetrace {

inline constexpr std::size_t kMaxColumns = 500;

/// Trace functions (columns) evaluated at sampled interior points (rows).
struct EvaluationMatrix {
  std::vector<DehnParameter> params;       // column order
  std::vector<std::uint64_t> row_seeds;    // sample_interior seed of each row
  std::vector<InteriorSample> rows;
  Eigen::MatrixXd values;                  // rows x columns
  std::vector<std::size_t> component_counts;  // per column
};

struct BuildOptions {
  double margin = 0.05;
  bool allow_many_columns = false;  // lift the kMaxColumns cap
};

/// Row r uses sample_interior(g, margin, mix_seed(seed, r)). Requires
/// n_samples >= params.size(). Throws TooManyColumns above the cap.
EvaluationMatrix build_matrix(const PantsGraph& g, const std::vector<DehnParameter>& params,
                              std::size_t n_samples, std::uint64_t seed, const BuildOptions& options = {});

/// Appends an extra column computed outside the Dehn-parameter family
/// (negative controls).
void append_column(EvaluationMatrix& m, const Eigen::VectorXd& column);

struct RankReport {
  std::size_t rank = 0;
  std::size_t columns = 0;
  double condition_ratio = 0.0;  // sigma_min / sigma_max
  std::vector<double> singular_values;
  bool independent = false;

  /// "independent" or "numerically dependent at this sample".
  std::string verdict() const;
};

/// rank = number of singular values > rel_tol * sigma_max.
RankReport rank_report(const Eigen::MatrixXd& values, double rel_tol = 1e-8);
inline RankReport rank_report(const EvaluationMatrix& m, double rel_tol = 1e-8) {
  return rank_report(m.values, rel_tol);
}

}  // namespace curvetrace

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvetrace/graph.hpp"

namespace curvetrace {

struct SuiteOptions {
  std::uint64_t seed = 1;
  double margin = 0.05;
  int sweep_m_max = 3;
  int sweep_t_max = 1;
  std::size_t polytope_draws = 10000;
  std::size_t word_pairs = 1000;
  int word_length = 6;
  std::size_t fourier_points = 5;       // interior base points for support and non-vanishing
  std::size_t intersection_points = 3;  // base points for intersection-number recovery
  int independence_max = -1;            // enumerate_dehn bound; -1 picks 2 or 1 by graph size
  std::size_t independence_seeds = 3;
  double oversampling = 3.0;
  double rel_tol = 1e-8;
  bool determinism_check = true;        // re-run a slice with 1 and several threads
};

struct CriterionResult {
  std::string id;    // "C1" ... "C9"
  std::string name;
  bool pass = false;
  double metric = 0.0;     // the headline number compared against the threshold
  double threshold = 0.0;
  std::string detail;      // deterministic free text (no timings)
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
  /// CSV table: id,name,status,metric,threshold,detail.
  std::string to_csv() const;
};

/// Runs every acceptance criterion on one surface. Output depends only on
/// (graph, options), never on the thread count.
SuiteReport run_suite(const PantsGraph& g, const SuiteOptions& options);

}  // namespace curvetrace

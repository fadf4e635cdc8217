#include "curvetrace/independence.hpp"

#include <Eigen/SVD>

#include "curvetrace/error.hpp"
#include "curvetrace/parallel.hpp"
#include "curvetrace/route.hpp"
#include "curvetrace/trace.hpp"

namespace curvetrace {

EvaluationMatrix build_matrix(const PantsGraph& g, const std::vector<DehnParameter>& params,
                              std::size_t n_samples, std::uint64_t seed, const BuildOptions& options) {
  require_valid(g);
  if (params.size() > kMaxColumns && !options.allow_many_columns) {
    throw Error(ErrorCode::TooManyColumns, std::to_string(params.size()) + " columns exceed the cap of " +
                                               std::to_string(kMaxColumns) + "; pass an explicit override");
  }
  if (n_samples < params.size()) {
    throw Error(ErrorCode::InvalidInput, "need at least as many samples as columns (" +
                                             std::to_string(params.size()) + ")");
  }

  EvaluationMatrix out;
  out.params = params;
  std::vector<CurveRoute> routes;
  routes.reserve(params.size());
  for (const DehnParameter& d : params) {
    routes.push_back(route(g, d));
    out.component_counts.push_back(routes.back().components.size());
  }

  out.row_seeds.resize(n_samples);
  out.rows.resize(n_samples);
  out.values.resize(static_cast<Eigen::Index>(n_samples), static_cast<Eigen::Index>(params.size()));
  parallel_for(n_samples, [&](std::size_t r) {
    const std::uint64_t s = mix_seed(seed, r);
    out.row_seeds[r] = s;
    out.rows[r] = sample_interior(g, options.margin, s);
    const RepresentationPoint rep = build_representation(g, out.rows[r].angles, out.rows[r].twists);
    for (std::size_t c = 0; c < routes.size(); ++c) {
      out.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = trace_of_route(rep, routes[c]).value;
    }
  });
  return out;
}

void append_column(EvaluationMatrix& m, const Eigen::VectorXd& column) {
  if (column.size() != m.values.rows()) throw Error(ErrorCode::InvalidInput, "column length mismatch");
  m.values.conservativeResize(Eigen::NoChange, m.values.cols() + 1);
  m.values.col(m.values.cols() - 1) = column;
}

std::string RankReport::verdict() const {
  return independent ? "independent" : "numerically dependent at this sample";
}

RankReport rank_report(const Eigen::MatrixXd& values, double rel_tol) {
  RankReport rep;
  rep.columns = static_cast<std::size_t>(values.cols());
  if (values.cols() == 0 || values.rows() == 0) {
    rep.independent = values.cols() == 0;
    return rep;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(values);
  const Eigen::VectorXd& s = svd.singularValues();
  rep.singular_values.assign(s.data(), s.data() + s.size());
  const double top = s.size() > 0 ? s(0) : 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * top) ++rep.rank;
  }
  rep.condition_ratio = top > 0.0 ? s(s.size() - 1) / top : 0.0;
  rep.independent = rep.rank == rep.columns;
  return rep;
}

}  // namespace curvetrace

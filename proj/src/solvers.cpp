#include "polyinv/solvers.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace polyinv {

std::string to_string(PenaltyFamily family) {
  switch (family) {
    case PenaltyFamily::None: return "none";
    case PenaltyFamily::Ridge: return "ridge";
    case PenaltyFamily::Lasso: return "lasso";
  }
  throw std::logic_error("unknown penalty family");
}

std::string to_string(GFunction g) {
  switch (g) {
    case GFunction::Identity: return "identity";
    case GFunction::Sqrt: return "sqrt";
    case GFunction::Log1p: return "log1p";
  }
  throw std::logic_error("unknown g function");
}

double apply_g(GFunction g, double value) {
  if (value < 0.0) throw std::invalid_argument("g is defined on non-negative values");
  switch (g) {
    case GFunction::Identity: return value;
    case GFunction::Sqrt: return std::sqrt(value);
    case GFunction::Log1p: return std::log1p(value);
  }
  throw std::logic_error("unknown g function");
}

PenaltySpec::PenaltySpec(PenaltyFamily family, IndexSet penalized, WeightMap weights)
    : family_(family), penalized_(std::move(penalized)), weights_(std::move(weights)) {
  if ((family_ == PenaltyFamily::None) != penalized_.empty()) {
    throw std::invalid_argument(
        "penalty family 'none' requires an empty penalized set, and vice versa");
  }
  if (weights_.size() != penalized_.size()) {
    throw std::invalid_argument("penalty weights must cover exactly the penalized set");
  }
  for (const Monomial& m : penalized_) {
    const auto it = weights_.find(m);
    if (it == weights_.end()) {
      throw std::invalid_argument("penalized monomial " + m.to_string() +
                                  " has no weight");
    }
    if (!(it->second > 0.0) || !std::isfinite(it->second)) {
      throw std::invalid_argument("penalty weight for " + m.to_string() +
                                  " must be strictly positive and finite");
    }
  }
}

PenaltySpec PenaltySpec::none(int arity) {
  return PenaltySpec(PenaltyFamily::None, IndexSet(arity, {}), {});
}

PenaltySpec PenaltySpec::uniform(PenaltyFamily family, IndexSet penalized,
                                 double lambda) {
  WeightMap weights;
  for (const Monomial& m : penalized) weights.emplace(m, lambda);
  return PenaltySpec(family, std::move(penalized), std::move(weights));
}

double PenaltySpec::weight(const Monomial& m) const {
  const auto it = weights_.find(m);
  if (it == weights_.end()) {
    throw std::invalid_argument("monomial " + m.to_string() + " is not penalized");
  }
  return it->second;
}

double penalty_value(const PenaltySpec& penalty, const Polynomial& f) {
  double total = 0.0;
  for (const Monomial& m : penalty.penalized()) {
    const double a = f.coefficient(m);
    const double lambda = penalty.weight(m);
    if (penalty.family() == PenaltyFamily::Ridge) {
      total += lambda * a * a;
    } else if (penalty.family() == PenaltyFamily::Lasso) {
      total += lambda * std::abs(a);
    }
  }
  return total;
}

double loss_value(const Polynomial& f, const Dataset& data, const LossSpec& spec) {
  return apply_g(spec.g, ssr(f, data)) + penalty_value(spec.penalty, f);
}

namespace {

void require_penalized_in_model(const PenaltySpec& penalty, const IndexSet& model) {
  for (const Monomial& m : penalty.penalized()) {
    if (!model.contains(m)) {
      throw std::invalid_argument("penalized monomial " + m.to_string() +
                                  " is not in the model index set");
    }
  }
}

Polynomial coefficients_to_polynomial(const IndexSet& model,
                                      const Eigen::VectorXd& coefficients) {
  Polynomial f(model.arity());
  Eigen::Index c = 0;
  for (const Monomial& m : model) f.set_coefficient(m, coefficients(c++));
  return f;
}

struct SvdSolve {
  Eigen::VectorXd solution;
  double condition;
};

/// Least-squares solve with the rank check of the uniqueness assumption.
SvdSolve solve_least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                             const std::string& context) {
  if (A.rows() < A.cols()) {
    throw NoUniqueSolutionError("no unique solution: " + context + " has " +
                                std::to_string(A.rows()) + " rows for " +
                                std::to_string(A.cols()) + " coefficients");
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma(0);
  const double sigma_min = sigma(sigma.size() - 1);
  if (!(sigma_min > kRankTolerance * sigma_max)) {
    throw NoUniqueSolutionError("no unique solution: " + context +
                                " is rank deficient (singular value ratio " +
                                std::to_string(sigma_min / sigma_max) + ")");
  }
  return SvdSolve{svd.solve(b), sigma_max / sigma_min};
}

std::optional<std::string> condition_warning(double condition) {
  if (condition > kConditionWarning) {
    std::ostringstream out;
    out << "ill-conditioned design (condition estimate " << condition << ")";
    return out.str();
  }
  return std::nullopt;
}

double soft_threshold(double value, double threshold) {
  if (value > threshold) return value - threshold;
  if (value < -threshold) return value + threshold;
  return 0.0;
}

}  // namespace

FitResult fit_ols(const Dataset& data, const IndexSet& model) {
  const DesignMatrix design = design_matrix(data.predictors(), model);
  const SvdSolve solve =
      solve_least_squares(design.values, data.response(), "design matrix");
  FitResult result{coefficients_to_polynomial(model, solve.solution), 0.0, 0.0, 1, true,
                   condition_warning(solve.condition)};
  result.ssr = (data.response() - design.values * solve.solution).squaredNorm();
  result.loss = result.ssr;
  return result;
}

FitResult fit_ridge_selective(const Dataset& data, const IndexSet& model,
                              const PenaltySpec& penalty) {
  if (penalty.family() == PenaltyFamily::None) return fit_ols(data, model);
  if (penalty.family() != PenaltyFamily::Ridge) {
    throw std::invalid_argument("fit_ridge_selective requires a ridge penalty");
  }
  require_penalized_in_model(penalty, model);

  const DesignMatrix design = design_matrix(data.predictors(), model);
  const Eigen::Index n = design.values.rows();
  const Eigen::Index m = design.values.cols();
  const Eigen::Index q = static_cast<Eigen::Index>(penalty.penalized().size());

  Eigen::MatrixXd augmented = Eigen::MatrixXd::Zero(n + q, m);
  augmented.topRows(n) = design.values;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + q);
  rhs.head(n) = data.response();
  Eigen::Index row = n;
  for (const Monomial& pm : penalty.penalized()) {
    augmented(row, static_cast<Eigen::Index>(model.index_of(pm))) =
        std::sqrt(penalty.weight(pm));
    ++row;
  }

  const SvdSolve solve = solve_least_squares(augmented, rhs, "augmented design");
  FitResult result{coefficients_to_polynomial(model, solve.solution), 0.0, 0.0, 1, true,
                   condition_warning(solve.condition)};
  result.ssr = (data.response() - design.values * solve.solution).squaredNorm();
  result.loss = result.ssr + penalty_value(penalty, result.model);
  return result;
}

FitResult fit_lasso_selective(const Dataset& data, const IndexSet& model,
                              const PenaltySpec& penalty,
                              std::vector<double>* sweep_objectives) {
  if (penalty.family() == PenaltyFamily::None) return fit_ols(data, model);
  if (penalty.family() != PenaltyFamily::Lasso) {
    throw std::invalid_argument("fit_lasso_selective requires a lasso penalty");
  }
  require_penalized_in_model(penalty, model);

  const DesignMatrix design = design_matrix(data.predictors(), model);
  const Eigen::MatrixXd& Z = design.values;
  const Eigen::VectorXd& y = data.response();
  const Eigen::Index m = Z.cols();

  Eigen::VectorXd column_norms(m);
  std::vector<double> lambdas(static_cast<std::size_t>(m), 0.0);
  std::vector<bool> is_penalized(static_cast<std::size_t>(m), false);
  Eigen::Index unpenalized_count = 0;
  for (Eigen::Index j = 0; j < m; ++j) {
    column_norms(j) = Z.col(j).squaredNorm();
    if (column_norms(j) == 0.0) {
      throw NoUniqueSolutionError("no unique solution: design column for " +
                                  model.members()[static_cast<std::size_t>(j)].to_string() +
                                  " is identically zero");
    }
    const Monomial& column = model.members()[static_cast<std::size_t>(j)];
    if (penalty.penalized().contains(column)) {
      is_penalized[static_cast<std::size_t>(j)] = true;
      lambdas[static_cast<std::size_t>(j)] = penalty.weight(column);
    } else {
      ++unpenalized_count;
    }
  }

  // Uniqueness needs the unpenalized block to have full column rank.
  if (unpenalized_count > 0) {
    Eigen::MatrixXd unpenalized(Z.rows(), unpenalized_count);
    Eigen::Index c = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (!is_penalized[static_cast<std::size_t>(j)]) unpenalized.col(c++) = Z.col(j);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(unpenalized);
    const auto& sigma = svd.singularValues();
    if (unpenalized.rows() < unpenalized.cols() ||
        !(sigma(sigma.size() - 1) > kRankTolerance * sigma(0))) {
      throw NoUniqueSolutionError(
          "no unique solution: unpenalized design columns are rank deficient");
    }
  }

  Eigen::VectorXd a = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd residual = y;
  int sweeps = 0;
  bool converged = false;
  for (; sweeps < kLassoMaxSweeps;) {
    ++sweeps;
    double max_change = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      const double rho = Z.col(j).dot(residual) + column_norms(j) * a(j);
      double updated;
      if (is_penalized[static_cast<std::size_t>(j)]) {
        updated = soft_threshold(rho, lambdas[static_cast<std::size_t>(j)] / 2.0) /
                  column_norms(j);
      } else {
        updated = rho / column_norms(j);
      }
      const double change = updated - a(j);
      if (change != 0.0) {
        residual -= change * Z.col(j);
        a(j) = updated;
      }
      max_change = std::max(max_change, std::abs(change));
    }
    // Re-sync the residual occasionally to limit incremental drift.
    if (sweeps % 1024 == 0) residual = y - Z * a;
    if (sweep_objectives) {
      double l1 = 0.0;
      for (Eigen::Index j = 0; j < m; ++j) {
        l1 += lambdas[static_cast<std::size_t>(j)] * std::abs(a(j));
      }
      sweep_objectives->push_back((y - Z * a).squaredNorm() + l1);
    }
    if (max_change == 0.0) {
      converged = true;
      break;
    }
    if (max_change < kLassoSweepTolerance) {
      // Sweep movement has stalled; accept once the stationarity residual is
      // tight as well, otherwise keep polishing.
      Eigen::VectorXd gradient = 2.0 * (Z.transpose() * (Z * a - y));
      double violation = 0.0;
      for (Eigen::Index j = 0; j < m; ++j) {
        const double lambda = lambdas[static_cast<std::size_t>(j)];
        double v;
        if (!is_penalized[static_cast<std::size_t>(j)]) {
          v = std::abs(gradient(j));
        } else if (a(j) != 0.0) {
          v = std::abs(gradient(j) + lambda * (a(j) > 0.0 ? 1.0 : -1.0));
        } else {
          v = std::max(0.0, std::abs(gradient(j)) - lambda);
        }
        violation = std::max(violation, v);
      }
      if (violation <= kKktTarget) {
        converged = true;
        break;
      }
    }
  }

  FitResult result{coefficients_to_polynomial(model, a), 0.0, 0.0, sweeps, converged,
                   std::nullopt};
  result.ssr = (y - Z * a).squaredNorm();
  result.loss = result.ssr + penalty_value(penalty, result.model);
  if (!converged) {
    result.condition_warning = "coordinate descent stopped after " +
                               std::to_string(sweeps) + " sweeps without meeting the " +
                               "convergence criteria";
  }
  return result;
}

FitResult fit(const Dataset& data, const IndexSet& model, const PenaltySpec& penalty) {
  switch (penalty.family()) {
    case PenaltyFamily::None: return fit_ols(data, model);
    case PenaltyFamily::Ridge: return fit_ridge_selective(data, model, penalty);
    case PenaltyFamily::Lasso: return fit_lasso_selective(data, model, penalty);
  }
  throw std::logic_error("unknown penalty family");
}

double lasso_kkt_violation(const Dataset& data, const IndexSet& model,
                           const PenaltySpec& penalty, const Polynomial& candidate) {
  if (penalty.family() != PenaltyFamily::Lasso) {
    throw std::invalid_argument("lasso_kkt_violation requires a lasso penalty");
  }
  require_penalized_in_model(penalty, model);
  const DesignMatrix design = design_matrix(data.predictors(), model);
  Eigen::VectorXd a(static_cast<Eigen::Index>(model.size()));
  Eigen::Index c = 0;
  for (const Monomial& m : model) a(c++) = candidate.coefficient(m);
  const Eigen::VectorXd gradient =
      2.0 * (design.values.transpose() * (design.values * a - data.response()));
  double violation = 0.0;
  c = 0;
  for (const Monomial& m : model) {
    double v;
    if (!penalty.penalized().contains(m)) {
      v = std::abs(gradient(c));
    } else if (a(c) != 0.0) {
      v = std::abs(gradient(c) + penalty.weight(m) * (a(c) > 0.0 ? 1.0 : -1.0));
    } else {
      v = std::max(0.0, std::abs(gradient(c)) - penalty.weight(m));
    }
    violation = std::max(violation, v);
    ++c;
  }
  return violation;
}

}  // namespace polyinv

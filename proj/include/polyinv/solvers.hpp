#ifndef POLYINV_SOLVERS_HPP
#define POLYINV_SOLVERS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyinv/dataset.hpp"
#include "polyinv/monomial.hpp"
#include "polyinv/polynomial.hpp"

namespace polyinv {

/// The standing uniqueness assumption failed: the (augmented) design is rank
/// deficient, so the minimizer is not unique.
struct NoUniqueSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PenaltyFamily { None, Ridge, Lasso };
std::string to_string(PenaltyFamily family);

/// Which coefficients are penalized and how strongly. The penalized set must
/// be a subset of the model index set; that containment is checked where the
/// model is available (fitting, loss evaluation against a model).
class PenaltySpec {
 public:
  using WeightMap = std::map<Monomial, double, GradedLexLess>;

  static PenaltySpec none(int arity);
  /// One lambda for every penalized monomial.
  static PenaltySpec uniform(PenaltyFamily family, IndexSet penalized, double lambda);
  PenaltySpec(PenaltyFamily family, IndexSet penalized, WeightMap weights);

  PenaltyFamily family() const noexcept { return family_; }
  const IndexSet& penalized() const noexcept { return penalized_; }
  const WeightMap& weights() const noexcept { return weights_; }
  double weight(const Monomial& m) const;
  int arity() const noexcept { return penalized_.arity(); }

 private:
  PenaltyFamily family_;
  IndexSet penalized_;
  WeightMap weights_;
};

/// Transform applied to the SSR inside the loss. All three map R+ to R+.
enum class GFunction { Identity, Sqrt, Log1p };
std::string to_string(GFunction g);
double apply_g(GFunction g, double value);

struct LossSpec {
  GFunction g = GFunction::Identity;
  PenaltySpec penalty;
};

struct FitResult {
  Polynomial model;
  double ssr = 0.0;
  double loss = 0.0;
  int iterations = 0;
  bool converged = false;
  std::optional<std::string> condition_warning;
};

// Solver constants. The lasso objective is ||y - Z a||^2 + sum lambda_m |a_m|
// with no 1/(2n) factor; users comparing against that convention rescale
// lambda by 2n.
inline constexpr double kRankTolerance = 1e-10;       // sigma_min / sigma_max cut
inline constexpr double kConditionWarning = 1e8;      // warn above this cond
inline constexpr double kLassoSweepTolerance = 1e-10; // max |delta a| per sweep
inline constexpr int kLassoMaxSweeps = 100000;
inline constexpr double kKktTolerance = 1e-7;         // contract bound
inline constexpr double kKktTarget = 1e-8;            // internal polish target

/// sum lambda_m * a_m^2 (ridge) or sum lambda_m * |a_m| (lasso); 0 for none.
double penalty_value(const PenaltySpec& penalty, const Polynomial& f);

/// g(SSR) + PEN.
double loss_value(const Polynomial& f, const Dataset& data, const LossSpec& spec);

/// Ordinary least squares over the model. Orthogonal (SVD) solve; rejects
/// rank-deficient designs with NoUniqueSolutionError.
FitResult fit_ols(const Dataset& data, const IndexSet& model);

/// Minimizes ||y - Z a||^2 + sum_{penalized} lambda_m a_m^2 via the augmented
/// least-squares stacking [Z; sqrt(Lambda)] -> [y; 0]. A PenaltyFamily::None
/// spec falls through to fit_ols.
FitResult fit_ridge_selective(const Dataset& data, const IndexSet& model,
                              const PenaltySpec& penalty);

/// Minimizes ||y - Z a||^2 + sum_{penalized} lambda_m |a_m| by cyclic
/// coordinate descent from a = 0. Unpenalized coordinates take the exact
/// coordinate minimum; penalized ones soft-threshold at lambda_m / 2.
/// Declared converged once the per-sweep coefficient change drops below
/// kLassoSweepTolerance and the subgradient residual is below kKktTarget;
/// hitting kLassoMaxSweeps returns converged = false with diagnostics.
/// If sweep_objectives is given it receives the objective after every sweep.
FitResult fit_lasso_selective(const Dataset& data, const IndexSet& model,
                              const PenaltySpec& penalty,
                              std::vector<double>* sweep_objectives = nullptr);

/// Dispatch on the penalty family.
FitResult fit(const Dataset& data, const IndexSet& model, const PenaltySpec& penalty);

/// Max subgradient-stationarity violation of a lasso candidate:
///   unpenalized j:            |2 z_j^T (Z a - y)|
///   penalized j, a_j != 0:    |2 z_j^T (Z a - y) + lambda_j sign(a_j)|
///   penalized j, a_j == 0:    max(0, |2 z_j^T (Z a - y)| - lambda_j)
double lasso_kkt_violation(const Dataset& data, const IndexSet& model,
                           const PenaltySpec& penalty, const Polynomial& candidate);

}  // namespace polyinv

#endif  // POLYINV_SOLVERS_HPP

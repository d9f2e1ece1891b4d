#ifndef POLYINV_DATASET_HPP
#define POLYINV_DATASET_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "polyinv/monomial.hpp"
#include "polyinv/polynomial.hpp"

namespace polyinv {

/// Closed interval [lo, hi]; lo == hi is a point, lo > hi is rejected where
/// the interval is consumed.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Observed data: n x p predictor matrix (rows are observations) and the
/// length-n response. Entries are validated finite at construction.
class Dataset {
 public:
  Dataset(Eigen::MatrixXd predictors, Eigen::VectorXd response);

  const Eigen::MatrixXd& predictors() const noexcept { return predictors_; }
  const Eigen::VectorXd& response() const noexcept { return response_; }
  Eigen::Index n_observations() const noexcept { return predictors_.rows(); }
  int arity() const noexcept { return static_cast<int>(predictors_.cols()); }

 private:
  Eigen::MatrixXd predictors_;
  Eigen::VectorXd response_;
};

struct NoiseSpec {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Adds the shift to every row: result[j,.] = predictors[j,.] + shift.
Eigen::MatrixXd translate_data(const Eigen::MatrixXd& predictors,
                               const ShiftVector& shift);

/// Regressor matrix for a model: one column per monomial, canonical order.
struct DesignMatrix {
  Eigen::MatrixXd values;  // n x |model|
  IndexSet columns;
};

/// values(j, c) = product over l of predictors(j, l) ^ columns[c][l], with
/// 0^0 = 1, so the (0,...,0) monomial yields an all-ones intercept column.
/// Rejects non-finite entries, naming the offending monomial.
DesignMatrix design_matrix(const Eigen::MatrixXd& predictors, const IndexSet& model);

/// Sum of squared residuals of f on the data, evaluated row-wise.
double ssr(const Polynomial& f, const Dataset& data);

/// Seeded synthetic draw: predictors i.i.d. uniform on x_range (filled row by
/// row, column within row), response = truth(row) + sigma * gaussian. The
/// noise draw is consumed even when sigma = 0 so the stream layout does not
/// depend on sigma.
Dataset generate_synthetic(const IndexSet& model, const Polynomial& truth, int n,
                           Interval x_range, const NoiseSpec& noise);

/// CSV with a header row naming columns x1..xp and y (any column order),
/// comma-separated, decimal point. Missing or non-numeric fields are
/// rejected.
Dataset read_csv(std::istream& in);
Dataset load_csv(const std::string& path);

}  // namespace polyinv

#endif  // POLYINV_DATASET_HPP

#include "polyinv/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "polyinv/rng.hpp"

namespace polyinv {

namespace {

void require_interval(const Interval& range, const char* what) {
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || range.lo > range.hi) {
    throw std::invalid_argument(std::string(what) + " is not a valid interval");
  }
}

}  // namespace

Dataset::Dataset(Eigen::MatrixXd predictors, Eigen::VectorXd response)
    : predictors_(std::move(predictors)), response_(std::move(response)) {
  if (predictors_.rows() < 1 || predictors_.cols() < 1) {
    throw std::invalid_argument("dataset needs at least one row and one predictor");
  }
  if (predictors_.rows() != response_.size()) {
    throw std::invalid_argument("predictor rows (" + std::to_string(predictors_.rows()) +
                                ") do not match response length (" +
                                std::to_string(response_.size()) + ")");
  }
  if (!predictors_.allFinite() || !response_.allFinite()) {
    throw std::invalid_argument("dataset entries must be finite");
  }
}

Eigen::MatrixXd translate_data(const Eigen::MatrixXd& predictors,
                               const ShiftVector& shift) {
  if (predictors.cols() != shift.arity()) {
    throw std::invalid_argument("shift arity " + std::to_string(shift.arity()) +
                                " does not match predictor count " +
                                std::to_string(predictors.cols()));
  }
  Eigen::MatrixXd result = predictors;
  for (int l = 0; l < shift.arity(); ++l) {
    result.col(l).array() += shift[l];
  }
  return result;
}

DesignMatrix design_matrix(const Eigen::MatrixXd& predictors, const IndexSet& model) {
  if (model.empty()) {
    throw std::invalid_argument("design_matrix requires a non-empty model");
  }
  if (predictors.cols() != model.arity()) {
    throw std::invalid_argument("model arity " + std::to_string(model.arity()) +
                                " does not match predictor count " +
                                std::to_string(predictors.cols()));
  }
  const Eigen::Index n = predictors.rows();
  Eigen::MatrixXd values(n, static_cast<Eigen::Index>(model.size()));
  Eigen::Index column = 0;
  for (const Monomial& m : model) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double v = 1.0;
      for (int l = 0; l < model.arity(); ++l) {
        for (int d = 0; d < m.exponents()[l]; ++d) v *= predictors(j, l);
      }
      if (!std::isfinite(v)) {
        throw std::runtime_error("design matrix entry overflows at monomial " +
                                 m.to_string() + ", row " + std::to_string(j));
      }
      values(j, column) = v;
    }
    ++column;
  }
  return DesignMatrix{std::move(values), model};
}

double ssr(const Polynomial& f, const Dataset& data) {
  if (f.arity() != data.arity()) {
    throw std::invalid_argument("polynomial arity " + std::to_string(f.arity()) +
                                " does not match dataset arity " +
                                std::to_string(data.arity()));
  }
  double total = 0.0;
  Eigen::RowVectorXd row(data.arity());
  for (Eigen::Index j = 0; j < data.n_observations(); ++j) {
    row = data.predictors().row(j);
    const double residual =
        data.response()(j) -
        evaluate(f, std::span<const double>(row.data(), static_cast<std::size_t>(row.size())));
    total += residual * residual;
  }
  return total;
}

Dataset generate_synthetic(const IndexSet& model, const Polynomial& truth, int n,
                           Interval x_range, const NoiseSpec& noise) {
  if (n < 1) throw std::invalid_argument("sample count must be at least 1");
  require_interval(x_range, "x_range");
  if (noise.sigma < 0.0 || !std::isfinite(noise.sigma)) {
    throw std::invalid_argument("noise sigma must be finite and non-negative");
  }
  if (truth.arity() != model.arity()) {
    throw std::invalid_argument("truth arity does not match model arity");
  }
  const IndexSet truth_support = truth.support();
  for (const Monomial& m : truth_support) {
    if (!model.contains(m)) {
      throw std::invalid_argument("truth term " + m.to_string() +
                                  " is outside the model index set");
    }
  }

  const int p = model.arity();
  SplitMix64 rng(noise.seed);
  Eigen::MatrixXd predictors(n, p);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < p; ++l) {
      predictors(j, l) = rng.uniform(x_range.lo, x_range.hi);
    }
  }
  Eigen::VectorXd response(n);
  Eigen::RowVectorXd row(p);
  for (int j = 0; j < n; ++j) {
    row = predictors.row(j);
    const double mean =
        evaluate(truth, std::span<const double>(row.data(), static_cast<std::size_t>(p)));
    response(j) = mean + noise.sigma * rng.normal();
  }
  return Dataset(std::move(predictors), std::move(response));
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_value(const std::string& field, std::size_t line_number) {
  const std::string token = trim(field);
  if (token.empty()) {
    throw std::invalid_argument("missing value on CSV line " +
                                std::to_string(line_number));
  }
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("non-numeric value '" + token + "' on CSV line " +
                                std::to_string(line_number));
  }
  if (consumed != token.size() || !std::isfinite(value)) {
    throw std::invalid_argument("non-numeric value '" + token + "' on CSV line " +
                                std::to_string(line_number));
  }
  return value;
}

}  // namespace

Dataset read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("CSV input is empty");
  }
  // Strip a UTF-8 byte-order mark if present.
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);

  const std::vector<std::string> header = split_line(line);
  const int columns = static_cast<int>(header.size());
  if (columns < 2) {
    throw std::invalid_argument("CSV header must contain x1..xp and y");
  }
  const int p = columns - 1;
  std::vector<int> field_to_slot(header.size());  // 0..p-1 predictors, p response
  std::vector<bool> seen(static_cast<std::size_t>(columns), false);
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string name = trim(header[c]);
    int slot = -1;
    if (name == "y") {
      slot = p;
    } else if (name.size() >= 2 && name[0] == 'x') {
      try {
        const int index = std::stoi(name.substr(1));
        if (index >= 1 && index <= p &&
            name.substr(1) == std::to_string(index)) {
          slot = index - 1;
        }
      } catch (const std::exception&) {
      }
    }
    if (slot < 0 || seen[static_cast<std::size_t>(slot)]) {
      throw std::invalid_argument("CSV header must name columns x1..x" +
                                  std::to_string(p) + " and y; got '" + name + "'");
    }
    seen[static_cast<std::size_t>(slot)] = true;
    field_to_slot[c] = slot;
  }

  std::vector<std::vector<double>> rows;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_line(line);
    if (static_cast<int>(fields.size()) != columns) {
      throw std::invalid_argument("CSV line " + std::to_string(line_number) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(columns));
    }
    std::vector<double> row(static_cast<std::size_t>(columns));
    for (std::size_t c = 0; c < fields.size(); ++c) {
      row[static_cast<std::size_t>(field_to_slot[c])] = parse_value(fields[c], line_number);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::invalid_argument("CSV contains no data rows");
  }

  Eigen::MatrixXd predictors(static_cast<Eigen::Index>(rows.size()), p);
  Eigen::VectorXd response(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (int l = 0; l < p; ++l) {
      predictors(static_cast<Eigen::Index>(j), l) = rows[j][static_cast<std::size_t>(l)];
    }
    response(static_cast<Eigen::Index>(j)) = rows[j][static_cast<std::size_t>(p)];
  }
  return Dataset(std::move(predictors), std::move(response));
}

Dataset load_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot open CSV file: " + path);
  }
  return read_csv(file);
}

}  // namespace polyinv

#include "polyinv/polynomial.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace polyinv {

namespace {

constexpr int kTableSize = kMaxTotalDegree + 1;

using BinomialTable = std::array<std::array<std::int64_t, kTableSize>, kTableSize>;

BinomialTable build_pascal_table() {
  BinomialTable table{};
  for (int n = 0; n < kTableSize; ++n) {
    table[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      table[n][k] = table[n - 1][k - 1] + (k <= n - 1 ? table[n - 1][k] : 0);
    }
  }
  return table;
}

double int_pow(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;  // exponent 0 yields 1, also for base 0
}

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

std::int64_t binomial_coefficient(int n, int k) {
  static const BinomialTable table = build_pascal_table();
  if (n < 0 || n > kMaxTotalDegree) {
    throw std::invalid_argument("binomial_coefficient: n out of range");
  }
  if (k < 0 || k > n) return 0;
  return table[n][k];
}

ShiftVector::ShiftVector(std::vector<double> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("shift vector arity must be at least 1");
  }
  for (double c : components_) require_finite(c, "shift vector entry");
}

ShiftVector ShiftVector::zero(int arity) {
  if (arity < 1) throw std::invalid_argument("shift vector arity must be at least 1");
  return ShiftVector(std::vector<double>(static_cast<std::size_t>(arity), 0.0));
}

ShiftVector ShiftVector::negated() const {
  std::vector<double> flipped(components_);
  for (double& c : flipped) c = -c;
  return ShiftVector(std::move(flipped));
}

Polynomial::Polynomial(int arity) : arity_(arity) {
  if (arity_ < 1) throw std::invalid_argument("polynomial arity must be at least 1");
}

Polynomial::Polynomial(int arity, std::vector<std::pair<std::vector<int>, double>> terms)
    : Polynomial(arity) {
  for (auto& [exponents, coefficient] : terms) {
    set_coefficient(Monomial(std::move(exponents)), coefficient);
  }
}

void Polynomial::set_coefficient(const Monomial& m, double value) {
  if (m.arity() != arity_) {
    throw std::invalid_argument("term " + m.to_string() + " does not have arity " +
                                std::to_string(arity_));
  }
  require_finite(value, "coefficient");
  terms_.insert_or_assign(m, value);
}

void Polynomial::add_to_coefficient(const Monomial& m, double delta) {
  if (m.arity() != arity_) {
    throw std::invalid_argument("term " + m.to_string() + " does not have arity " +
                                std::to_string(arity_));
  }
  require_finite(delta, "coefficient");
  terms_[m] += delta;
}

double Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

IndexSet Polynomial::support() const {
  std::vector<Monomial> nonzero;
  for (const auto& [m, c] : terms_) {
    if (c != 0.0) nonzero.push_back(m);
  }
  return IndexSet(arity_, std::move(nonzero));
}

bool Polynomial::is_zero() const {
  for (const auto& [m, c] : terms_) {
    if (c != 0.0) return false;
  }
  return true;
}

double evaluate(const Polynomial& f, std::span<const double> point) {
  if (static_cast<int>(point.size()) != f.arity()) {
    throw std::invalid_argument("evaluation point has dimension " +
                                std::to_string(point.size()) + ", expected " +
                                std::to_string(f.arity()));
  }
  for (double x : point) require_finite(x, "evaluation point entry");
  double sum = 0.0;
  for (const auto& [m, c] : f.terms()) {
    double term = c;
    for (int l = 0; l < f.arity(); ++l) {
      term *= int_pow(point[l], m.exponents()[l]);
    }
    sum += term;
  }
  return sum;
}

Polynomial translate(const Polynomial& f, const ShiftVector& shift) {
  if (shift.arity() != f.arity()) {
    throw std::invalid_argument("shift vector has arity " +
                                std::to_string(shift.arity()) + ", expected " +
                                std::to_string(f.arity()));
  }
  const int p = f.arity();
  Polynomial result(p);
  std::vector<int> k(static_cast<std::size_t>(p));
  for (const auto& [source, a] : f.terms()) {
    const std::vector<int>& i = source.exponents();
    // Per-variable powers of the shift, up to the source exponent.
    std::vector<std::vector<double>> powers(static_cast<std::size_t>(p));
    for (int l = 0; l < p; ++l) {
      powers[l].resize(static_cast<std::size_t>(i[l]) + 1);
      powers[l][0] = 1.0;
      for (int d = 1; d <= i[l]; ++d) powers[l][d] = powers[l][d - 1] * shift[l];
    }
    // Odometer over all k componentwise <= i.
    std::fill(k.begin(), k.end(), 0);
    while (true) {
      std::int64_t binomial_product = 1;
      double shift_power = 1.0;
      for (int l = 0; l < p; ++l) {
        binomial_product *= binomial_coefficient(i[l], k[l]);
        shift_power *= powers[l][i[l] - k[l]];
      }
      result.add_to_coefficient(Monomial(k),
                                a * static_cast<double>(binomial_product) * shift_power);
      int l = 0;
      while (l < p && k[l] == i[l]) {
        k[l] = 0;
        ++l;
      }
      if (l == p) break;
      ++k[l];
    }
  }
  return result;
}

IndexSet greatest_monomials_of_poly(const Polynomial& f) {
  if (f.is_zero()) {
    throw std::invalid_argument(
        "greatest_monomials_of_poly requires a nonzero polynomial");
  }
  return greatest_monomials(f.support());
}

Polynomial prune(const Polynomial& f, double eps) {
  if (eps < 0.0 || !std::isfinite(eps)) {
    throw std::invalid_argument("prune threshold must be finite and non-negative");
  }
  Polynomial result(f.arity());
  for (const auto& [m, c] : f.terms()) {
    if (std::abs(c) > eps) result.set_coefficient(m, c);
  }
  return result;
}

}  // namespace polyinv

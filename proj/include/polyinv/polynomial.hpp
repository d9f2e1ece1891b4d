#ifndef POLYINV_POLYNOMIAL_HPP
#define POLYINV_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "polyinv/monomial.hpp"

namespace polyinv {

/// Exact binomial coefficient, table-backed; n <= kMaxTotalDegree.
std::int64_t binomial_coefficient(int n, int k);

/// A translation of the predictor coordinates: one offset per variable.
class ShiftVector {
 public:
  explicit ShiftVector(std::vector<double> components);
  static ShiftVector zero(int arity);

  int arity() const noexcept { return static_cast<int>(components_.size()); }
  double operator[](int i) const { return components_.at(i); }
  const std::vector<double>& components() const noexcept { return components_; }
  ShiftVector negated() const;

 private:
  std::vector<double> components_;
};

/// Sparse multivariate polynomial: a finite map from monomials to real
/// coefficients. Explicit zero coefficients may be stored; prune() removes
/// them. Terms iterate in graded-lex order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, double, GradedLexLess>;

  explicit Polynomial(int arity);
  /// Fixture convenience: Polynomial(2, {{{1,1}, 3.0}, {{0,0}, 2.0}}).
  Polynomial(int arity, std::vector<std::pair<std::vector<int>, double>> terms);

  int arity() const noexcept { return arity_; }

  void set_coefficient(const Monomial& m, double value);
  void add_to_coefficient(const Monomial& m, double delta);

  /// Stored coefficient, or 0 when the monomial is absent.
  double coefficient(const Monomial& m) const;

  /// All stored terms, including explicit zeros.
  const TermMap& terms() const noexcept { return terms_; }

  /// Monomials with a nonzero stored coefficient. May be empty.
  IndexSet support() const;
  bool is_zero() const;

 private:
  int arity_;
  TermMap terms_;
};

/// Value at a point, with the 0^0 = 1 convention.
double evaluate(const Polynomial& f, std::span<const double> point);

/// The polynomial g with g(x) = f(x + shift) for all x.
///
/// Coefficients come from the multivariate binomial expansion
///   b_k = sum over stored terms i >= k of
///         a_i * prod_l C(i_l, k_l) * shift_l^(i_l - k_l),
/// with the binomial products computed in exact 64-bit integers. The result
/// stores every componentwise divisor of the stored support, including exact
/// zeros; callers prune if they want a minimal representation.
Polynomial translate(const Polynomial& f, const ShiftVector& shift);

/// Maximal elements of the nonzero support. Throws on the zero polynomial.
IndexSet greatest_monomials_of_poly(const Polynomial& f);

/// Drops terms with |coefficient| <= eps. eps = 0 removes exact zeros only.
Polynomial prune(const Polynomial& f, double eps);

}  // namespace polyinv

#endif  // POLYINV_POLYNOMIAL_HPP

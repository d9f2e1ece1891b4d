#ifndef POLYINV_MONOMIAL_HPP
#define POLYINV_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyinv {

// Exponent caps. Per-variable <= 16 and total degree <= 32 keep every
// binomial coefficient product in translate() exactly representable in
// 64-bit integers (max is C(32,16) = 601080390).
inline constexpr int kMaxExponent = 16;
inline constexpr int kMaxTotalDegree = 32;

// Downward closures grow multiplicatively; cap index-set size.
inline constexpr std::size_t kMaxIndexSetSize = 100000;

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Result of comparing two monomials under componentwise dominance.
/// Not all pairs are comparable.
enum class PartialOrdering { Less, Equal, Greater, Incomparable };

/// A monomial x_1^{e_1} ... x_p^{e_p}, identified with its exponent tuple.
/// Immutable after construction; construction enforces the exponent caps.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);

  int arity() const noexcept { return static_cast<int>(exponents_.size()); }
  int exponent(int variable) const { return exponents_.at(variable); }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  int total_degree() const noexcept;
  bool is_constant() const noexcept { return total_degree() == 0; }

  /// "(1,2)" -- used in error messages and reports.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
};

/// Canonical total order used for iteration and serialization:
/// ascending total degree, ties broken lexicographically on the exponents.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Componentwise comparison of lhs against rhs: Less means every exponent of
/// lhs is <= the matching exponent of rhs (and the tuples differ).
/// Throws std::invalid_argument on arity mismatch.
PartialOrdering compare(const Monomial& lhs, const Monomial& rhs);

/// True iff every exponent of outer is >= the matching exponent of inner.
bool dominates(const Monomial& outer, const Monomial& inner);

/// A finite set of monomials of one arity. Members are kept deduplicated and
/// sorted in graded-lex order, so iteration is deterministic.
class IndexSet {
 public:
  IndexSet(int arity, std::vector<Monomial> members);

  /// All monomials with total degree <= degree (the full simplex model).
  static IndexSet total_degree_model(int arity, int degree);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const Monomial& m) const;

  /// Position of m in canonical order, or npos if absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const Monomial& m) const;

  const std::vector<Monomial>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int arity_;
  std::vector<Monomial> members_;
};

/// Maximal elements of the set under componentwise dominance. The result is
/// non-empty and pairwise incomparable. Throws on an empty set.
IndexSet greatest_monomials(const IndexSet& set);

/// True iff the set contains every componentwise divisor of each member.
bool is_downward_closed(const IndexSet& set);

/// Smallest downward-closed superset. Idempotent. Throws CapacityError if the
/// closure would exceed kMaxIndexSetSize members.
IndexSet downward_closure(const IndexSet& set);

/// Members attaining the maximal total degree. Always a subset of
/// greatest_monomials(set); the containment can be strict.
IndexSet highest_total_degree_monomials(const IndexSet& set);

}  // namespace polyinv

#endif  // POLYINV_MONOMIAL_HPP

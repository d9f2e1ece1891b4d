#include "polyinv/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace polyinv {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) {
    throw std::invalid_argument("monomial arity must be at least 1");
  }
  int total = 0;
  for (int e : exponents_) {
    if (e < 0) {
      throw std::invalid_argument("monomial exponents must be non-negative");
    }
    if (e > kMaxExponent) {
      throw std::invalid_argument("monomial exponent " + std::to_string(e) +
                                  " exceeds the per-variable cap " +
                                  std::to_string(kMaxExponent));
    }
    total += e;
  }
  if (total > kMaxTotalDegree) {
    throw std::invalid_argument("monomial total degree " + std::to_string(total) +
                                " exceeds the cap " + std::to_string(kMaxTotalDegree));
  }
}

int Monomial::total_degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i > 0) out << ',';
    out << exponents_[i];
  }
  out << ')';
  return out.str();
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

PartialOrdering compare(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.arity() != rhs.arity()) {
    throw std::invalid_argument("cannot compare monomials of arity " +
                                std::to_string(lhs.arity()) + " and " +
                                std::to_string(rhs.arity()));
  }
  bool all_le = true;
  bool all_ge = true;
  for (int i = 0; i < lhs.arity(); ++i) {
    const int a = lhs.exponents()[i];
    const int b = rhs.exponents()[i];
    if (a < b) all_ge = false;
    if (a > b) all_le = false;
  }
  if (all_le && all_ge) return PartialOrdering::Equal;
  if (all_le) return PartialOrdering::Less;
  if (all_ge) return PartialOrdering::Greater;
  return PartialOrdering::Incomparable;
}

bool dominates(const Monomial& outer, const Monomial& inner) {
  if (outer.arity() != inner.arity()) {
    throw std::invalid_argument("cannot compare monomials of different arity");
  }
  for (int i = 0; i < outer.arity(); ++i) {
    if (outer.exponents()[i] < inner.exponents()[i]) return false;
  }
  return true;
}

IndexSet::IndexSet(int arity, std::vector<Monomial> members)
    : arity_(arity), members_(std::move(members)) {
  if (arity_ < 1) {
    throw std::invalid_argument("index set arity must be at least 1");
  }
  for (const Monomial& m : members_) {
    if (m.arity() != arity_) {
      throw std::invalid_argument("index set member " + m.to_string() +
                                  " does not have arity " + std::to_string(arity_));
    }
  }
  std::sort(members_.begin(), members_.end(), GradedLexLess{});
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.size() > kMaxIndexSetSize) {
    throw CapacityError("index set exceeds " + std::to_string(kMaxIndexSetSize) +
                        " monomials");
  }
}

namespace {

void enumerate_simplex(int arity, int degree_left, std::vector<int>& current,
                       std::vector<Monomial>& out) {
  if (static_cast<int>(current.size()) == arity) {
    out.emplace_back(current);
    return;
  }
  for (int e = 0; e <= degree_left; ++e) {
    current.push_back(e);
    enumerate_simplex(arity, degree_left - e, current, out);
    current.pop_back();
  }
}

}  // namespace

IndexSet IndexSet::total_degree_model(int arity, int degree) {
  if (arity < 1 || degree < 0) {
    throw std::invalid_argument("total_degree_model requires arity >= 1, degree >= 0");
  }
  std::vector<Monomial> members;
  std::vector<int> current;
  enumerate_simplex(arity, degree, current, members);
  return IndexSet(arity, std::move(members));
}

bool IndexSet::contains(const Monomial& m) const {
  return index_of(m) != npos;
}

std::size_t IndexSet::index_of(const Monomial& m) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), m, GradedLexLess{});
  if (it == members_.end() || !(*it == m)) return npos;
  return static_cast<std::size_t>(it - members_.begin());
}

IndexSet greatest_monomials(const IndexSet& set) {
  if (set.empty()) {
    throw std::invalid_argument("greatest_monomials requires a non-empty index set");
  }
  const std::vector<Monomial>& members = set.members();
  std::vector<Monomial> maximal;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool dominated = false;
    // A strict dominator has strictly greater total degree, hence sorts after
    // members[i] in graded-lex order.
    for (std::size_t j = i + 1; j < members.size() && !dominated; ++j) {
      dominated = dominates(members[j], members[i]);
    }
    if (!dominated) maximal.push_back(members[i]);
  }
  return IndexSet(set.arity(), std::move(maximal));
}

bool is_downward_closed(const IndexSet& set) {
  if (set.empty()) {
    throw std::invalid_argument("is_downward_closed requires a non-empty index set");
  }
  // Divisibility is generated by single-exponent decrements, so checking the
  // immediate predecessors of each member suffices.
  for (const Monomial& m : set) {
    std::vector<int> exps = m.exponents();
    for (int i = 0; i < m.arity(); ++i) {
      if (exps[i] == 0) continue;
      --exps[i];
      if (!set.contains(Monomial(exps))) return false;
      ++exps[i];
    }
  }
  return true;
}

IndexSet downward_closure(const IndexSet& set) {
  if (set.empty()) {
    throw std::invalid_argument("downward_closure requires a non-empty index set");
  }
  std::set<Monomial, GradedLexLess> seen(set.begin(), set.end());
  std::queue<Monomial> pending;
  for (const Monomial& m : set) pending.push(m);
  while (!pending.empty()) {
    const Monomial m = pending.front();
    pending.pop();
    std::vector<int> exps = m.exponents();
    for (int i = 0; i < m.arity(); ++i) {
      if (exps[i] == 0) continue;
      --exps[i];
      Monomial child(exps);
      ++exps[i];
      if (seen.insert(child).second) {
        if (seen.size() > kMaxIndexSetSize) {
          throw CapacityError("downward closure exceeds " +
                              std::to_string(kMaxIndexSetSize) + " monomials");
        }
        pending.push(std::move(child));
      }
    }
  }
  return IndexSet(set.arity(), std::vector<Monomial>(seen.begin(), seen.end()));
}

IndexSet highest_total_degree_monomials(const IndexSet& set) {
  if (set.empty()) {
    throw std::invalid_argument(
        "highest_total_degree_monomials requires a non-empty index set");
  }
  int max_degree = 0;
  for (const Monomial& m : set) max_degree = std::max(max_degree, m.total_degree());
  std::vector<Monomial> top;
  for (const Monomial& m : set) {
    if (m.total_degree() == max_degree) top.push_back(m);
  }
  return IndexSet(set.arity(), std::move(top));
}

}  // namespace polyinv

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qaffine {

/// Exponent vector of a monomial in x_1..x_n.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  int n() const { return static_cast<int>(exponents.size()); }
  bool is_one() const;
  int total_degree() const;
  bool divides(const Monomial& other) const;
  /// componentwise difference; caller guarantees divisibility
  Monomial quotient_into(const Monomial& numerator) const;
  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;
  bool operator<(const Monomial& other) const { return exponents < other.exponents; }

  std::string str() const;
};

/// Strictly increasing 1-based generator indices; membership in I_s for s = size.
using IndexSet = std::vector<int>;

std::string index_set_str(const IndexSet& s);

/// Monomial ideal with order-significant generator list.
struct MonomialIdeal {
  int n = 0;
  std::vector<Monomial> generators;

  MonomialIdeal() = default;
  MonomialIdeal(int n_, std::vector<Monomial> gens);

  int t() const { return static_cast<int>(generators.size()); }

  /// True when every generator is x_i x_j with i != j (the pair-set case).
  bool is_squarefree_quadratic() const;
  /// Extract the pair set P; requires is_squarefree_quadratic().
  std::vector<std::pair<int, int>> pair_set() const;

  static MonomialIdeal from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
};

/// LCM of a nonempty list of monomials (componentwise max).
Monomial lcm_monomials(const std::vector<Monomial>& ms);

}  // namespace qaffine

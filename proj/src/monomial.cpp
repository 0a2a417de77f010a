#include "qaffine/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace qaffine {

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](int e) { return e == 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (exponents.size() != other.exponents.size()) return false;
  for (size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial Monomial::quotient_into(const Monomial& numerator) const {
  Monomial out = numerator;
  for (size_t i = 0; i < exponents.size(); ++i) out.exponents[i] -= exponents[i];
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (size_t i = 0; i < exponents.size(); ++i)
    out.exponents[i] += other.exponents[i];
  return out;
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (any) os << "*";
    any = true;
    os << "x" << (i + 1);
    if (exponents[i] > 1) os << "^" << exponents[i];
  }
  if (!any) os << "1";
  return os.str();
}

std::string index_set_str(const IndexSet& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << "}";
  return os.str();
}

MonomialIdeal::MonomialIdeal(int n_, std::vector<Monomial> gens)
    : n(n_), generators(std::move(gens)) {
  for (const auto& g : generators) {
    if (g.n() != n)
      throw std::invalid_argument("MonomialIdeal: generator arity mismatch");
    if (g.is_one())
      throw std::invalid_argument("MonomialIdeal: unit generator not allowed");
  }
}

bool MonomialIdeal::is_squarefree_quadratic() const {
  for (const auto& g : generators) {
    int ones = 0, others = 0;
    for (int e : g.exponents) {
      if (e == 1) ++ones;
      else if (e != 0) ++others;
    }
    if (ones != 2 || others != 0) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> MonomialIdeal::pair_set() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& g : generators) {
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      if (g.exponents[i] == 1) {
        if (a < 0) a = i + 1;
        else b = i + 1;
      }
    }
    if (b < 0) throw std::logic_error("pair_set: not squarefree quadratic");
    out.emplace_back(a, b);
  }
  return out;
}

MonomialIdeal MonomialIdeal::from_pairs(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Monomial> gens;
  for (auto [i, j] : pairs) {
    std::vector<int> e(n, 0);
    e[i - 1] += 1;
    e[j - 1] += 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

Monomial lcm_monomials(const std::vector<Monomial>& ms) {
  if (ms.empty()) throw std::invalid_argument("lcm_monomials: empty input");
  Monomial out = ms[0];
  for (size_t k = 1; k < ms.size(); ++k) {
    if (ms[k].n() != out.n())
      throw std::invalid_argument("lcm_monomials: arity mismatch");
    for (size_t i = 0; i < out.exponents.size(); ++i)
      out.exponents[i] = std::max(out.exponents[i], ms[k].exponents[i]);
  }
  return out;
}

}  // namespace qaffine

#include "qaffine/yqseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaffine {

std::string multidegree_poly_str(const MultidegreePoly& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (a != 1 || constant) os << a.get_str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "y" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

std::map<int, Int> specialize_total_degree(const MultidegreePoly& p) {
  std::map<int, Int> out;
  for (const auto& [e, c] : p) {
    int d = 0;
    for (int x : e) d += x;
    out[d] += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

YQSeries::YQSeries(std::vector<int> y_bound, int q_order)
    : y_bound_(std::move(y_bound)), q_order_(q_order) {
  if (q_order_ < 0) throw std::invalid_argument("YQSeries: q_order < 0");
}

YQSeries YQSeries::one(std::vector<int> y_bound, int q_order) {
  YQSeries s(std::move(y_bound), q_order);
  s.add_term(std::vector<int>(s.n(), 0), 0, 1);
  return s;
}

bool YQSeries::in_bounds(const std::vector<int>& e) const {
  if (e.size() != y_bound_.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > y_bound_[i]) return false;
  return true;
}

QSeries YQSeries::coefficient(const std::vector<int>& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return QSeries::zero(q_order_);
  return it->second;
}

void YQSeries::add_term(const std::vector<int>& e, int k, const Int& c) {
  if (!in_bounds(e) || k > q_order_) return;
  auto [it, inserted] = terms_.try_emplace(e, QSeries::zero(q_order_));
  it->second.at(k) += c;
  prune(e);
}

void YQSeries::add_series(const std::vector<int>& e, const QSeries& s) {
  if (!in_bounds(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, QSeries::zero(q_order_));
  it->second += s.truncated(q_order_);
  prune(e);
}

void YQSeries::prune(const std::vector<int>& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

MultidegreePoly YQSeries::q_layer(int k) const {
  MultidegreePoly out;
  for (const auto& [e, s] : terms_)
    if (s[k] != 0) out[e] = s[k];
  return out;
}

YQSeries YQSeries::operator+(const YQSeries& other) const {
  std::vector<int> b(y_bound_.size());
  if (other.y_bound_.size() != y_bound_.size())
    throw std::invalid_argument("YQSeries: mismatched variable counts");
  for (size_t i = 0; i < b.size(); ++i)
    b[i] = std::min(y_bound_[i], other.y_bound_[i]);
  YQSeries out(b, std::min(q_order_, other.q_order_));
  for (const auto& [e, s] : terms_) out.add_series(e, s);
  for (const auto& [e, s] : other.terms_) out.add_series(e, s);
  return out;
}

YQSeries YQSeries::operator*(const YQSeries& other) const {
  std::vector<int> b(y_bound_.size());
  if (other.y_bound_.size() != y_bound_.size())
    throw std::invalid_argument("YQSeries: mismatched variable counts");
  for (size_t i = 0; i < b.size(); ++i)
    b[i] = std::min(y_bound_[i], other.y_bound_[i]);
  YQSeries out(b, std::min(q_order_, other.q_order_));
  std::vector<int> key(b.size());
  for (const auto& [e1, s1] : terms_) {
    for (const auto& [e2, s2] : other.terms_) {
      bool ok = true;
      for (size_t i = 0; i < key.size(); ++i) {
        key[i] = e1[i] + e2[i];
        if (key[i] > b[i]) { ok = false; break; }
      }
      if (!ok) continue;
      out.add_series(key, s1 * s2);
    }
  }
  return out;
}

std::string YQSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, s] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s.str() << ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*y" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

YQSeries y_pochhammer(const std::vector<int>& y_exponent, int N,
                      std::vector<int> y_bound, int q_order) {
  YQSeries out = YQSeries::one(y_bound, q_order);
  int count = (N < 0) ? q_order + 1 : N;
  for (int k = 1; k <= count; ++k) {
    if (k - 1 > q_order) break;
    YQSeries f = YQSeries::one(y_bound, q_order);
    f.add_term(y_exponent, k - 1, -1);
    out = out * f;
  }
  return out;
}

YQSeries inv_y_pochhammer(const std::vector<int>& y_exponent, int N,
                          std::vector<int> y_bound, int q_order) {
  // maximal useful power of y^e within the bounds
  int jmax = 0;
  {
    bool free = true;
    for (size_t i = 0; i < y_exponent.size(); ++i) {
      if (y_exponent[i] > 0) {
        int cap = y_bound[i] / y_exponent[i];
        jmax = free ? cap : std::min(jmax, cap);
        free = false;
      }
    }
    if (free) throw std::invalid_argument("inv_y_pochhammer: zero exponent");
  }
  YQSeries out = YQSeries::one(y_bound, q_order);
  int count = (N < 0) ? q_order + 1 : N;
  for (int k = 1; k <= count; ++k) {
    if (k - 1 > q_order) break;
    // 1/(1 - y^e q^{k-1}) = sum_j y^{je} q^{(k-1)j}
    YQSeries g(y_bound, q_order);
    for (int j = 0; j <= jmax && (k - 1) * j <= q_order; ++j) {
      std::vector<int> e(y_exponent.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = j * y_exponent[i];
      g.add_term(e, (k - 1) * j, 1);
    }
    out = out * g;
  }
  return out;
}

}  // namespace qaffine

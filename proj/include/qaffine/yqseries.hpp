#pragma once

#include <map>
#include <string>
#include <vector>

#include "qaffine/qseries.hpp"

namespace qaffine {

/// Signed polynomial in y_1..y_n, keyed by exponent tuple.
using MultidegreePoly = std::map<std::vector<int>, Int>;

std::string multidegree_poly_str(const MultidegreePoly& p);

/// Specialize y_i -> y for all i, giving a total-degree polynomial.
std::map<int, Int> specialize_total_degree(const MultidegreePoly& p);

/// Truncated series in y_1..y_n and q.  Sparse over y exponent tuples,
/// dense (QSeries) in q per tuple.  Keys outside the declared per-variable
/// bounds are never stored; a missing key is the zero series.
class YQSeries {
 public:
  YQSeries(std::vector<int> y_bound, int q_order);

  static YQSeries one(std::vector<int> y_bound, int q_order);

  int n() const { return static_cast<int>(y_bound_.size()); }
  const std::vector<int>& y_bound() const { return y_bound_; }
  int q_order() const { return q_order_; }
  const std::map<std::vector<int>, QSeries>& terms() const { return terms_; }

  bool in_bounds(const std::vector<int>& e) const;

  /// Coefficient series of y^e (zero series if absent).
  QSeries coefficient(const std::vector<int>& e) const;
  /// Add c * y^e * q^k.
  void add_term(const std::vector<int>& e, int k, const Int& c);
  /// Add s * y^e.
  void add_series(const std::vector<int>& e, const QSeries& s);

  /// The coefficient of q^k as a polynomial in y.
  MultidegreePoly q_layer(int k) const;

  YQSeries operator+(const YQSeries& other) const;
  YQSeries operator*(const YQSeries& other) const;

  bool operator==(const YQSeries& other) const = default;

  std::string str() const;

 private:
  std::vector<int> y_bound_;
  int q_order_;
  std::map<std::vector<int>, QSeries> terms_;
  void prune(const std::vector<int>& key);
};

/// (y^e; q)_N = prod_{k=1}^N (1 - y^e q^{k-1}) truncated.  N < 0 means the
/// infinite product; factors beyond q_order contribute only past truncation.
YQSeries y_pochhammer(const std::vector<int>& y_exponent, int N,
                      std::vector<int> y_bound, int q_order);

/// 1 / (y^e; q)_N, built from expanded geometric factors.
YQSeries inv_y_pochhammer(const std::vector<int>& y_exponent, int N,
                          std::vector<int> y_bound, int q_order);

}  // namespace qaffine

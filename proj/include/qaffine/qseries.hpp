#pragma once

#include <string>
#include <vector>

#include "qaffine/int.hpp"

namespace qaffine {

/// Exact truncated power series in q with integer coefficients.
///
/// A series carries an inclusive truncation order; coefficients beyond the
/// order are unknown, never silently zero.  Binary operations truncate to the
/// smaller order of the two operands.
class QSeries {
 public:
  QSeries() : order_(0), coeffs_(1) {}
  explicit QSeries(int order) : order_(order), coeffs_(order + 1) {}
  QSeries(int order, std::vector<Int> coeffs);

  static QSeries zero(int order) { return QSeries(order); }
  static QSeries one(int order);
  /// c * q^k, truncated (zero series if k > order).
  static QSeries monomial(int order, int k, const Int& c = 1);

  int order() const { return order_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& operator[](int k) const { return coeffs_[k]; }
  Int& at(int k) { return coeffs_[k]; }

  bool is_zero() const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries operator+(const QSeries& other) const;
  QSeries operator-(const QSeries& other) const;
  QSeries operator*(const QSeries& other) const;
  QSeries operator-() const;

  /// Multiply by q^k (drops coefficients pushed past the order).
  QSeries shifted(int k) const;
  /// Restrict to a smaller order.
  QSeries truncated(int order) const;

  /// Equality compares up to the smaller of the two orders.
  bool agrees_with(const QSeries& other) const;
  /// Strict equality: same order, same coefficients.
  bool operator==(const QSeries& other) const = default;

  /// First exponent where the two series differ (up to min order), or -1.
  int first_difference(const QSeries& other) const;

  std::string str() const;

 private:
  int order_;
  std::vector<Int> coeffs_;
};

}  // namespace qaffine

#include "qaffine/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaffine {

QSeries::QSeries(int order, std::vector<Int> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != order_ + 1)
    throw std::invalid_argument("QSeries: coefficient count must be order+1");
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::monomial(int order, int k, const Int& c) {
  QSeries s(order);
  if (k >= 0 && k <= order) s.coeffs_[k] = c;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Int& c) { return c == 0; });
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.order_ < order_) {
    order_ = other.order_;
    coeffs_.resize(order_ + 1);
  }
  for (int k = 0; k <= order_; ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  if (other.order_ < order_) {
    order_ = other.order_;
    coeffs_.resize(order_ + 1);
  }
  for (int k = 0; k <= order_; ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

QSeries QSeries::operator+(const QSeries& other) const {
  QSeries out = truncated(std::min(order_, other.order_));
  out += other;
  return out;
}

QSeries QSeries::operator-(const QSeries& other) const {
  QSeries out = truncated(std::min(order_, other.order_));
  out -= other;
  return out;
}

QSeries QSeries::operator*(const QSeries& other) const {
  const int n = std::min(order_, other.order_);
  QSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (other.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out(order_);
  for (int k = 0; k <= order_; ++k) out.coeffs_[k] = -coeffs_[k];
  return out;
}

QSeries QSeries::shifted(int k) const {
  QSeries out(order_);
  for (int i = 0; i + k <= order_; ++i)
    if (i + k >= 0) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

QSeries QSeries::truncated(int order) const {
  if (order >= order_) return *this;
  QSeries out(order);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, out.coeffs_.begin());
  return out;
}

bool QSeries::agrees_with(const QSeries& other) const {
  const int n = std::min(order_, other.order_);
  for (int k = 0; k <= n; ++k)
    if (coeffs_[k] != other.coeffs_[k]) return false;
  return true;
}

int QSeries::first_difference(const QSeries& other) const {
  const int n = std::min(order_, other.order_);
  for (int k = 0; k <= n; ++k)
    if (coeffs_[k] != other.coeffs_[k]) return k;
  return -1;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace qaffine

#include "qaffine/qfunctions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qaffine {

QSeries q_pochhammer_poly(int N, int order) {
  if (order < 0) throw std::invalid_argument("q_pochhammer_poly: order < 0");
  QSeries out = QSeries::one(order);
  for (int k = 1; k <= N; ++k) {
    if (k > order) break;  // further factors are 1 - O(q^{>order})
    QSeries f = QSeries::one(order);
    f.at(k) = -1;
    out = out * f;
  }
  return out;
}

namespace {

// inv_q_pochhammer is the innermost kernel of every identity evaluation;
// memoize it.  Values are immutable once inserted.
std::map<std::pair<int, int>, QSeries> g_invpoch_cache;
std::mutex g_invpoch_mutex;

QSeries geometric(int k, int order) {
  QSeries g(order);
  for (int j = 0; j * k <= order; ++j) {
    g.at(j * k) = 1;
    if (k == 0) break;
  }
  return g;
}

}  // namespace

QSeries inv_q_pochhammer(int m, int order) {
  if (order < 0) throw std::invalid_argument("inv_q_pochhammer: order < 0");
  if (m < 0) throw std::invalid_argument("inv_q_pochhammer: m < 0");
  {
    std::lock_guard<std::mutex> lock(g_invpoch_mutex);
    auto it = g_invpoch_cache.find({m, order});
    if (it != g_invpoch_cache.end()) return it->second;
  }
  QSeries out = QSeries::one(order);
  for (int k = 1; k <= m && k <= order; ++k) out = out * geometric(k, order);
  {
    std::lock_guard<std::mutex> lock(g_invpoch_mutex);
    g_invpoch_cache.emplace(std::make_pair(m, order), out);
  }
  return out;
}

QSeries gaussian_binomial(int m, int n, int order) {
  if (n < 0 || n > m) return QSeries::zero(order);
  return q_pochhammer_poly(m, order) * inv_q_pochhammer(n, order) *
         inv_q_pochhammer(m - n, order);
}

QSeries gaussian_binomial_pascal(int m, int n, int order) {
  if (n < 0 || n > m) return QSeries::zero(order);
  // row by row; only column values j <= n are needed
  std::vector<QSeries> row(n + 1, QSeries::zero(order));
  row[0] = QSeries::one(order);
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, n); j >= 1; --j) {
      // [i j] = [i-1 j-1] + q^j [i-1 j]
      row[j] = row[j - 1] + row[j].shifted(j);
    }
  }
  return row[n];
}

}  // namespace qaffine

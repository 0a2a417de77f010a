#pragma once

#include "qaffine/qseries.hpp"

namespace qaffine {

/// (q)_N = prod_{k=1}^N (1 - q^k), truncated.  N = 0 gives 1.
QSeries q_pochhammer_poly(int N, int order);

/// 1/(q)_m, the generating series of partitions into at most m parts.
/// Built by multiplying expanded geometric factors 1/(1-q^k); no division.
QSeries inv_q_pochhammer(int m, int order);

/// Gaussian polynomial [m n] = (q)_m / ((q)_n (q)_{m-n}), truncated.
/// Zero series when n < 0 or n > m.
QSeries gaussian_binomial(int m, int n, int order);

/// Independent route for tests: Pascal-type recursion
/// [m n] = [m-1 n-1] + q^n [m-1 n].
QSeries gaussian_binomial_pascal(int m, int n, int order);

}  // namespace qaffine

#pragma once

#include <gmpxx.h>

namespace qaffine {

// Exact integer coefficients everywhere; identity verification is zero-tolerance.
using Int = mpz_class;

}  // namespace qaffine

#pragma once

#include "mc2red/sparse_system.hpp"

#include <cstddef>
#include <random>

namespace mc2red {

using Rng = std::mt19937_64;

/// G system: 1..max_m rows, 1..max_n columns, nonzero entries in
/// [-max_abs, max_abs], no all-zero row or column, rhs zero.
SparseIntSystem random_g_system(Rng& rng, std::size_t max_m, std::size_t max_n, long max_abs);

struct Gz2Options {
  std::size_t max_m = 8;
  std::size_t max_n = 8;
  /// Every row's positive sum is 2^e with e <= max_w.
  std::size_t max_w = 6;
  /// Each row gets exactly one positive entry.
  bool single_positive = false;
};

/// Gz2 system passing the full validate_class check (no zero columns),
/// rhs zero. Needs max_n >= 2.
SparseIntSystem random_gz2_system(Rng& rng, const Gz2Options& opts);

/// G system with a row that repeats (up to sign) another row or equals the sum
/// of two others, and an rhs placing b outside the column span. Needs max_m >= 2.
SparseIntSystem random_unsolvable_g_system(Rng& rng, std::size_t max_m, std::size_t max_n, long max_abs);

/// Numerators in [-max_num, max_num], denominators in [1, max_den].
RationalVector random_rational_vector(Rng& rng, std::size_t n, long max_num, long max_den);

}  // namespace mc2red

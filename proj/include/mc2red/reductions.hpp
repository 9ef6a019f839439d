#pragma once

#include "mc2red/sparse_system.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace mc2red {

enum class Stage { GtoGz, GzToGz2 };

std::string_view to_string(Stage s);

/// Dimensions before and after one auxiliary reduction.
struct StageCert {
  Stage stage = Stage::GtoGz;
  std::size_t n_before = 0;
  std::size_t m_before = 0;
  std::size_t n_after = 0;
  std::size_t m_after = 0;
  /// Padding exponent: every row of the Gz2 output has positive sum 2^pad_k
  /// (the balancing row excepted). Only set for GzToGz2.
  std::optional<std::size_t> pad_k;

  friend bool operator==(const StageCert&, const StageCert&) = default;
};

struct StageResult {
  SparseIntSystem system;
  StageCert cert;
};

/// [A | -A 1]: appends one column holding the negated row sums. The new column
/// is kept even when every row sum is zero.
StageResult reduce_g_to_gz(const SparseIntSystem& sys);

/// x_i = x'_i - x'_{n+1}.
RationalVector recover_g_from_gz(const RationalVector& x_prime, const StageCert& cert);

/// Pads each row to positive sum 2^k with two columns (a_i, -a_i), a_i = 2^k - s_i,
/// where k is minimal with 2^k >= max_i s_i, then appends the balancing row
/// x_{n+1} - x_{n+2} = 0.
StageResult reduce_gz_to_gz2(const SparseIntSystem& sys);

/// First n coordinates.
RationalVector recover_gz_from_gz2(const RationalVector& x_dprime, const StageCert& cert);

}  // namespace mc2red

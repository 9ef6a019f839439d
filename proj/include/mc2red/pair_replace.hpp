#pragma once

#include "mc2red/gadget.hpp"
#include "mc2red/row_stats.hpp"
#include "mc2red/sparse_system.hpp"

#include <cstddef>
#include <vector>

namespace mc2red {

/// Identity of one gadget: which pair it replaced and where it came from.
struct GadgetDescriptor {
  /// 1-based creation rank.
  std::size_t ind = 0;
  Mc2Gadget gadget;
  std::size_t i_src = 0;
  std::size_t k_src = 0;
  Sign s_src = Sign::Plus;
  /// Rank within the (i_src, s_src, k_src) round, 1-based.
  std::size_t ell = 0;

  friend bool operator==(const GadgetDescriptor&, const GadgetDescriptor&) = default;
};

/// Layout of a completed Gz2 -> MC2 reduction.
///
/// X variables: originals 1..n, replacements n+1..n+n_repl, gadget-only
/// variables after those. The Y block mirrors X: y_v is column n_x + v.
struct ReductionTrace {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t n_repl = 0;
  std::size_t n_g = 0;
  std::size_t n_x = 0;
  std::size_t n_final = 0;
  std::size_t m_final = 0;
  std::vector<GadgetDescriptor> gadgets;
  std::vector<RowStats> per_row_stats;

  /// Gadgets the builder actually created for round (i, s, k).
  std::size_t gadgets_in_round(std::size_t i, Sign s, std::size_t k) const;
};

struct Mc2Reduction {
  SparseIntSystem system;
  ReductionTrace trace;
};

/// Pair-and-replace reduction of a Gz2 system to an MC2 system.
///
/// Rows are processed in order, + before -, bits ascending. In round k every
/// live entry of the current sign with bit k set is paired with its neighbour
/// in column order; each pair (j1, j2) loses 2^(k-1) from both coefficients and
/// a fresh replacement variable x_{n+ind} gains 2^k. The replacement count is
/// fixed up front from the row statistics so gadget-only variables can be
/// placed behind every replacement variable.
Mc2Reduction reduce_gz2_to_mc2(const SparseIntSystem& sys);

/// First n coordinates of an MC2 solution.
RationalVector recover_gz2_from_mc2(const RationalVector& x_star, const ReductionTrace& trace);

}  // namespace mc2red

#pragma once

#include "mc2red/sparse_system.hpp"

#include <cstddef>

namespace mc2red {

enum class SolveStatus { Solvable, Unsolvable };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unsolvable;
  /// A particular solution with every free variable set to zero; empty when
  /// unsolvable.
  RationalVector witness;
  std::size_t rank = 0;

  bool solvable() const noexcept { return status == SolveStatus::Solvable; }
};

/// Exact rational Gaussian elimination on the sparse system.
///
/// Pivots are chosen Markowitz-style (shortest remaining row, then the column
/// shared by the fewest rows, then the smallest column index) to limit fill-in
/// on the large, very sparse MC2 systems. `rank` is rank(A); the system is
/// unsolvable iff rank([A | b]) > rank(A).
SolveOutcome exact_solve(const SparseIntSystem& sys);

}  // namespace mc2red

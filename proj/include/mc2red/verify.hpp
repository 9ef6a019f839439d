#pragma once

#include "mc2red/exact_solve.hpp"
#include "mc2red/gadget.hpp"
#include "mc2red/pair_replace.hpp"
#include "mc2red/reductions.hpp"
#include "mc2red/sparse_system.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mc2red {

/// All three stages applied to a G system.
struct Pipeline {
  StageResult gz;
  StageResult gz2;
  Mc2Reduction mc2;

  /// MC2 solution -> solution of the original G system.
  RationalVector recover(const RationalVector& x_star) const;
};

/// Throws ValidationError if a stage's input is not in the stage's class.
Pipeline run_pipeline(const SparseIntSystem& g);

struct RoundtripReport {
  bool ok = false;
  std::string message;
  /// The seed was multiplied by this so that b = A x is integral.
  BigInt seed_scale = 1;
  std::array<std::size_t, 4> rows{};  // G, Gz, Gz2, MC2
  std::array<std::size_t, 4> cols{};
  std::size_t gadgets = 0;
  RationalVector recovered;
};

/// b = A x_seed, reduce through every stage, solve the MC2 system exactly,
/// recover, and check A x = b exactly.
RoundtripReport pipeline_roundtrip(const SparseIntSystem& g, const RationalVector& x_seed);

struct SolvabilityReport {
  /// G, Gz, Gz2, MC2.
  std::array<SolveStatus, 4> status{};
  /// Every stage agrees with the original.
  bool consistent = false;
};

SolvabilityReport solvability_chain(const SparseIntSystem& g);

/// True iff the rows sum to the row of 2 x_t - x_j1 - x_j2.
bool gadget_sum_check(const std::array<SparseRow, 8>& rows, const Mc2Gadget& g);

struct Mismatch {
  std::size_t row = 0;
  /// 0 denotes the right-hand side.
  std::size_t col = 0;
  BigInt expected;
  BigInt actual;

  std::string describe() const;
};

/// First entrywise difference, scanning every (i, j) in the larger shape.
std::optional<Mismatch> first_mismatch(const SparseIntSystem& expected, const SparseIntSystem& actual);

struct EquivalenceReport {
  bool ok = false;
  std::string message;
  std::size_t m_final = 0;
  std::size_t n_final = 0;
  std::size_t gadgets = 0;
  std::optional<Mismatch> mismatch;
};

/// Builds the MC2 system with the sequential builder and again entry by entry
/// with the local oracle, and compares dimensions (including the closed-form
/// m' = m + 8 S, n' = 2 n + 10 S), every gadget descriptor, every (i, j) and
/// every rhs entry.
EquivalenceReport oracle_equivalence_check(const SparseIntSystem& gz2, unsigned threads = 1);

/// The single Gz2 row 3 x1 + 5 x2 + x3 + 7 x4 - 16 x5 = 0.
SparseIntSystem golden_row_system();

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Golden checks plus `count` seeded random instances of each randomized suite.
std::vector<CheckResult> selftest(std::uint64_t seed, std::size_t count);

}  // namespace mc2red

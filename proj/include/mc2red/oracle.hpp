#pragma once

#include "mc2red/pair_replace.hpp"
#include "mc2red/row_stats.hpp"
#include "mc2red/sparse_system.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace mc2red {

/// Nonnegative fixed-point number raw / 2^frac_bits.
struct FixedPoint {
  BigInt raw;
  std::size_t frac_bits = 0;

  double to_double() const;
  /// Decimal rendering with `digits` digits after the point, rounded half up.
  std::string to_string(std::size_t digits = 6) const;
};

/// Per-entry access to the MC2 system that reduce_gz2_to_mc2 would build,
/// computed from the Gz2 input alone.
///
/// Gadgets are numbered in the builder's order: row, then sign (+ first),
/// then bit. For a round (i, s, k) the gadgets created before it number
///   PrefixSum_s[i, k] = sum_{i'' < i} SumNumG[i''] + [s = -] SumNumG_+[i]
///                       + sum_{k'' < k} NumGadget_s[i, k''],
/// and the replacement variable of rank r is column n + r.
///
/// Immutable after construction; all queries are pure and thread-safe.
class OracleContext {
 public:
  enum class Mode {
    /// Precomputed tables, binary search over gadget rounds.
    Indexed,
    /// Every query rebuilds the counting tables from the input and resolves
    /// the gadget by a linear comparison against all prefix sums.
    Recompute,
  };

  /// Throws ValidationError unless `gz2` is a Gz2 system (zero columns allowed).
  explicit OracleContext(SparseIntSystem gz2, Mode mode = Mode::Indexed);

  const SparseIntSystem& input() const noexcept { return sys_; }
  Mode mode() const noexcept { return mode_; }

  std::size_t m_final() const noexcept;
  std::size_t n_final() const noexcept;
  std::size_t n_x() const noexcept;
  std::size_t total_gadgets() const noexcept;

  const RowStats& stats(std::size_t i) const;
  std::size_t prefix_sum(Sign s, std::size_t i, std::size_t k) const;

  /// Gadget with creation rank ind in [1, total_gadgets()].
  GadgetDescriptor resolve_gadget(std::size_t ind) const;

  /// B[i, j]; zero outside [1, m_final] x [1, n_final]. Never throws.
  BigInt entry(std::size_t i, std::size_t j) const noexcept;
  /// d[i]; zero outside [1, m_final].
  BigInt rhs_entry(std::size_t i) const noexcept;

  /// Nonzeros of row i of B, derived from the same case analysis as entry().
  SparseRow row(std::size_t i) const;

  /// sqrt(10 * (SumNumG_+[i] + SumNumG_-[i])) truncated to `precision_bits`
  /// fractional bits.
  FixedPoint row_weight(std::size_t i, std::size_t precision_bits) const;

  struct Tables;

 private:
  SparseIntSystem sys_;
  Mode mode_;
  std::shared_ptr<const Tables> tables_;
};

/// Full B and d from entry()/rhs_entry(), splitting rows over `threads`
/// workers (0 = hardware concurrency). Output does not depend on `threads`.
SparseIntSystem materialize(const OracleContext& ctx, unsigned threads = 1);

}  // namespace mc2red

#pragma once

#include "mc2red/sparse_system.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace mc2red {

enum class Sign { Plus = 0, Minus = 1 };

inline constexpr std::array<Sign, 2> kSigns = {Sign::Plus, Sign::Minus};

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }
inline std::size_t sign_index(Sign s) { return static_cast<std::size_t>(s); }

/// Counting data for one sign of one Gz2 row.
///
/// Bit positions are 1-based with position k worth 2^(k-1). Arrays hold
/// positions 1..len; every position past len is zero because each entry is
/// bounded by the side's sum 2^(len-1).
struct SignStats {
  /// Bit length of the side's coefficient sum; the sum equals 2^(len-1).
  std::size_t len = 0;
  /// Number of entries with this sign.
  std::size_t entries = 0;
  std::vector<std::size_t> count_bit;
  std::vector<std::size_t> num_gadget;
  std::size_t sum_num_g = 0;

  std::size_t count_bit_at(std::size_t k) const;
  std::size_t num_gadget_at(std::size_t k) const;

  friend bool operator==(const SignStats&, const SignStats&) = default;
};

struct RowStats {
  std::array<SignStats, 2> sides;

  const SignStats& operator[](Sign s) const { return sides[sign_index(s)]; }
  SignStats& operator[](Sign s) { return sides[sign_index(s)]; }
  std::size_t total_gadgets() const { return sides[0].sum_num_g + sides[1].sum_num_g; }

  friend bool operator==(const RowStats&, const RowStats&) = default;
};

/// Statistics of row i of a Gz2 system. NumGadget uses the closed form
///   NumGadget[k] = 2^-(k+1) * sum_{k'<=k} 2^k' CountBit[k']   (1 <= k < len).
/// Throws ValidationError if the row is not a Gz2 row.
RowStats row_stats(const SparseIntSystem& sys, std::size_t i);

/// Closed-form gadget counts for positions 1..len. Throws ValidationError if a
/// value is not an integer (the parity condition fails).
std::vector<std::size_t> num_gadget_closed_form(std::span<const std::size_t> count_bit, std::size_t len);

/// Same counts via NumGadget[1] = CountBit[1]/2,
/// NumGadget[k] = (CountBit[k] + NumGadget[k-1])/2. Throws on odd operands.
std::vector<std::size_t> num_gadget_recurrence(std::span<const std::size_t> count_bit, std::size_t len);

}  // namespace mc2red

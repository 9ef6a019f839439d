#include "mc2red/row_stats.hpp"

#include "mc2red/errors.hpp"
#include "mc2red/validate.hpp"

#include <numeric>
#include <string>

namespace mc2red {

std::size_t SignStats::count_bit_at(std::size_t k) const {
  return (k >= 1 && k <= count_bit.size()) ? count_bit[k - 1] : 0;
}

std::size_t SignStats::num_gadget_at(std::size_t k) const {
  return (k >= 1 && k <= num_gadget.size()) ? num_gadget[k - 1] : 0;
}

std::vector<std::size_t> num_gadget_closed_form(std::span<const std::size_t> count_bit, std::size_t len) {
  std::vector<std::size_t> out(len, 0);
  BigInt weighted = 0;
  for (std::size_t k = 1; k + 1 <= len; ++k) {
    const std::size_t cb = k <= count_bit.size() ? count_bit[k - 1] : 0;
    weighted += pow2(k) * cb;
    const BigInt denom = pow2(k + 1);
    if (weighted % denom != 0) {
      throw ValidationError("parity violation at bit " + std::to_string(k) + ": gadget count not integral");
    }
    out[k - 1] = BigInt(weighted / denom).get_ui();
  }
  return out;
}

std::vector<std::size_t> num_gadget_recurrence(std::span<const std::size_t> count_bit, std::size_t len) {
  std::vector<std::size_t> out(len, 0);
  std::size_t carried = 0;
  for (std::size_t k = 1; k + 1 <= len; ++k) {
    const std::size_t cb = k <= count_bit.size() ? count_bit[k - 1] : 0;
    const std::size_t live = cb + carried;
    if (live % 2 != 0) {
      throw ValidationError("parity violation at bit " + std::to_string(k) + ": odd number of live entries");
    }
    out[k - 1] = live / 2;
    carried = out[k - 1];
  }
  return out;
}

RowStats row_stats(const SparseIntSystem& sys, std::size_t i) {
  const auto& row = sys.row(i);
  const BigInt pos = positive_sum(row);
  const BigInt neg = negative_sum(row);
  if (pos != neg) throw ValidationError("row " + std::to_string(i) + ": nonzero row sum", i);
  if (!is_power_of_two(pos)) {
    throw ValidationError("row " + std::to_string(i) + ": positive coefficient sum is not a power of 2", i);
  }

  RowStats stats;
  const std::size_t len = bit_length(pos);
  for (Sign s : kSigns) {
    auto& side = stats[s];
    side.len = len;
    side.count_bit.assign(len, 0);
    for (const auto& [j, v] : row) {
      if ((sgn(v) > 0) != (s == Sign::Plus)) continue;
      ++side.entries;
      for (std::size_t k = 1; k <= len; ++k) {
        if (bit_at(v, k)) ++side.count_bit[k - 1];
      }
    }
    try {
      side.num_gadget = num_gadget_closed_form(side.count_bit, len);
    } catch (const ValidationError& e) {
      throw ValidationError("row " + std::to_string(i) + ": " + e.what(), i);
    }
    side.sum_num_g = std::accumulate(side.num_gadget.begin(), side.num_gadget.end(), std::size_t{0});
  }
  return stats;
}

}  // namespace mc2red

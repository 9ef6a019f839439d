#include "mc2red/pair_replace.hpp"

#include "mc2red/validate.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace mc2red {

std::size_t ReductionTrace::gadgets_in_round(std::size_t i, Sign s, std::size_t k) const {
  std::size_t count = 0;
  for (const auto& g : gadgets) {
    if (g.i_src == i && g.s_src == s && g.k_src == k) ++count;
  }
  return count;
}

namespace {

struct LiveEntry {
  std::size_t col;
  BigInt magnitude;
};

}  // namespace

Mc2Reduction reduce_gz2_to_mc2(const SparseIntSystem& sys) {
  require_class(sys, MatrixClass::Gz2, {.check_columns = false});
  const std::size_t m = sys.rows();
  const std::size_t n = sys.cols();

  ReductionTrace trace;
  trace.n = n;
  trace.m = m;
  trace.per_row_stats.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    trace.per_row_stats.push_back(row_stats(sys, i));
    trace.n_repl += trace.per_row_stats.back().total_gadgets();
  }
  const std::size_t total = trace.n_repl;
  trace.n_g = 4 * total;
  trace.n_x = n + total + trace.n_g;
  trace.n_final = 2 * trace.n_x;
  trace.m_final = m + 8 * total;
  trace.gadgets.reserve(total);

  SparseIntSystem out(trace.m_final, trace.n_final, MatrixClass::MC2);
  std::size_t ind = 0;

  for (std::size_t i = 1; i <= m; ++i) {
    SparseRow transformed;
    for (Sign s : kSigns) {
      std::vector<LiveEntry> live;
      for (const auto& [j, v] : sys.row(i)) {
        if ((sgn(v) > 0) == (s == Sign::Plus)) live.push_back({j, abs(v)});
      }

      for (std::size_t k = 1; live.size() > 1; ++k) {
        // Replacement columns exceed every original column and are created in
        // increasing order, so `live` stays sorted by column.
        std::vector<std::size_t> with_bit;
        for (std::size_t p = 0; p < live.size(); ++p) {
          if (bit_at(live[p].magnitude, k)) with_bit.push_back(p);
        }
        if (with_bit.size() % 2 != 0) {
          throw std::logic_error("row " + std::to_string(i) + ": odd number of live entries at bit " +
                                 std::to_string(k));
        }
        const BigInt half = pow2(k - 1);
        std::vector<LiveEntry> created;
        for (std::size_t p = 0; p + 1 < with_bit.size(); p += 2) {
          auto& a = live[with_bit[p]];
          auto& b = live[with_bit[p + 1]];
          ++ind;
          GadgetDescriptor d;
          d.ind = ind;
          d.gadget = {n + ind, n + total + 4 * (ind - 1), a.col, b.col};
          d.i_src = i;
          d.k_src = k;
          d.s_src = s;
          d.ell = p / 2 + 1;
          trace.gadgets.push_back(d);
          a.magnitude -= half;
          b.magnitude -= half;
          created.push_back({n + ind, pow2(k)});
        }
        std::erase_if(live, [](const LiveEntry& e) { return sgn(e.magnitude) == 0; });
        for (auto& e : created) live.push_back(std::move(e));
      }

      if (live.size() != 1) {
        throw std::logic_error("row " + std::to_string(i) + ": sign side did not collapse to one variable");
      }
      transformed[live.front().col] = s == Sign::Plus ? live.front().magnitude : BigInt(-live.front().magnitude);
    }
    out.set_row(i, std::move(transformed));
    out.set_rhs(i, sys.rhs(i));
  }

  if (ind != total) {
    throw std::logic_error("builder created " + std::to_string(ind) + " gadgets, counting formula predicts " +
                           std::to_string(total));
  }

  for (const auto& d : trace.gadgets) {
    const auto rows = emit_gadget(d.gadget, 1, trace.n_x);
    const std::size_t base = m + 8 * (d.ind - 1);
    for (std::size_t r = 0; r < 8; ++r) out.set_row(base + r + 1, rows[r]);
  }

  return {std::move(out), std::move(trace)};
}

RationalVector recover_gz2_from_mc2(const RationalVector& x_star, const ReductionTrace& trace) {
  if (x_star.size() != trace.n_final) {
    throw std::invalid_argument("solution length " + std::to_string(x_star.size()) + " does not match " +
                                std::to_string(trace.n_final) + " reduced columns");
  }
  return RationalVector(x_star.begin(), x_star.begin() + static_cast<std::ptrdiff_t>(trace.n));
}

}  // namespace mc2red

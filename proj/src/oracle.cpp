#include "mc2red/oracle.hpp"

#include "mc2red/validate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

namespace mc2red {

// One (row, sign, bit) round that creates at least one gadget.
struct Round {
  std::size_t i;
  Sign s;
  std::size_t k;
  /// Gadgets created before this round.
  std::size_t start;
  std::size_t count;
};

struct OracleContext::Tables {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t total = 0;
  std::vector<RowStats> stats;
  /// row_offset[i - 1] = gadgets created for rows before i; size m + 1.
  std::vector<std::size_t> row_offset;
  std::vector<Round> rounds;
  std::vector<std::size_t> round_ends;

  std::size_t n_x() const { return n + 5 * total; }
  std::size_t m_final() const { return m + 8 * total; }

  std::size_t prefix_sum(Sign s, std::size_t i, std::size_t k) const {
    const auto& st = stats[i - 1];
    std::size_t p = row_offset[i - 1];
    if (s == Sign::Minus) p += st[Sign::Plus].sum_num_g;
    for (std::size_t kk = 1; kk < k; ++kk) p += st[s].num_gadget_at(kk);
    return p;
  }
};

namespace {

using Tables = OracleContext::Tables;

Tables build_tables(const SparseIntSystem& sys, bool with_rounds) {
  Tables t;
  t.m = sys.rows();
  t.n = sys.cols();
  t.stats.reserve(t.m);
  t.row_offset.assign(t.m + 1, 0);
  for (std::size_t i = 1; i <= t.m; ++i) {
    t.stats.push_back(row_stats(sys, i));
    t.row_offset[i] = t.row_offset[i - 1] + t.stats.back().total_gadgets();
  }
  t.total = t.row_offset[t.m];
  if (!with_rounds) return t;

  std::size_t running = 0;
  for (std::size_t i = 1; i <= t.m; ++i) {
    for (Sign s : kSigns) {
      const auto& side = t.stats[i - 1][s];
      for (std::size_t k = 1; k <= side.num_gadget.size(); ++k) {
        const std::size_t c = side.num_gadget_at(k);
        if (c == 0) continue;
        t.rounds.push_back({i, s, k, running, c});
        running += c;
        t.round_ends.push_back(running);
      }
    }
  }
  return t;
}

bool has_sign(const BigInt& v, Sign s) { return (sgn(v) > 0) == (s == Sign::Plus); }

/// Column of the q-th (1-based) sign-s entry of row i with bit k set.
std::size_t nth_bit_column(const SparseIntSystem& sys, std::size_t i, Sign s, std::size_t k, std::size_t q) {
  std::size_t seen = 0;
  for (const auto& [j, v] : sys.row(i)) {
    if (has_sign(v, s) && bit_at(v, k) && ++seen == q) return j;
  }
  throw std::logic_error("row " + std::to_string(i) + " has fewer than " + std::to_string(q) +
                         " entries with bit " + std::to_string(k));
}

/// Round containing gadget ind, by scanning every (i, s, k) against its prefix sum.
Round scan_round(const Tables& t, std::size_t ind) {
  for (std::size_t i = 1; i <= t.m; ++i) {
    for (Sign s : kSigns) {
      const auto& side = t.stats[i - 1][s];
      for (std::size_t k = 1; k <= side.num_gadget.size(); ++k) {
        const std::size_t start = t.prefix_sum(s, i, k);
        const std::size_t count = side.num_gadget_at(k);
        if (start < ind && ind <= start + count) return {i, s, k, start, count};
      }
    }
  }
  throw std::logic_error("no round contains gadget " + std::to_string(ind));
}

Round indexed_round(const Tables& t, std::size_t ind) {
  // First round whose end reaches ind.
  auto it = std::lower_bound(t.round_ends.begin(), t.round_ends.end(), ind);
  return t.rounds[static_cast<std::size_t>(it - t.round_ends.begin())];
}

GadgetDescriptor describe(const SparseIntSystem& sys, const Tables& t, const Round& r, std::size_t ind) {
  GadgetDescriptor d;
  d.ind = ind;
  d.i_src = r.i;
  d.s_src = r.s;
  d.k_src = r.k;
  d.ell = ind - r.start;
  d.gadget.t = t.n + ind;
  d.gadget.t_prime = t.n + t.total + 4 * (ind - 1);

  const std::size_t count_bit = t.stats[r.i - 1][r.s].count_bit_at(r.k);
  const std::size_t pairs = count_bit / 2;
  const bool odd = count_bit % 2 != 0;
  const std::size_t ell = d.ell;
  if (ell <= pairs) {
    d.gadget.j1 = nth_bit_column(sys, r.i, r.s, r.k, 2 * ell - 1);
    d.gadget.j2 = nth_bit_column(sys, r.i, r.s, r.k, 2 * ell);
    return d;
  }
  // Previous round's replacement variables follow at n + PrefixSum_s[i, k-1] + 1, ...
  const std::size_t carried_base = t.n + t.prefix_sum(r.s, r.i, r.k - 1);
  if (odd && ell == pairs + 1) {
    d.gadget.j1 = nth_bit_column(sys, r.i, r.s, r.k, count_bit);
    d.gadget.j2 = carried_base + 1;
  } else {
    d.gadget.j1 = carried_base + 2 * (ell - pairs) - 1 - (odd ? 1 : 0);
    d.gadget.j2 = d.gadget.j1 + 1;
  }
  return d;
}

/// Column of the single variable left on side s of transformed row i.
std::size_t surviving_column(const SparseIntSystem& sys, const Tables& t, std::size_t i, Sign s) {
  const auto& st = t.stats[i - 1];
  if (st[s].sum_num_g == 0) {
    for (const auto& [j, v] : sys.row(i)) {
      if (has_sign(v, s)) return j;
    }
    throw std::logic_error("row " + std::to_string(i) + " has no entry of sign " + sign_char(s));
  }
  // Last replacement variable created for side s of row i.
  if (s == Sign::Plus) return t.n + t.row_offset[i - 1] + st[Sign::Plus].sum_num_g;
  return t.n + t.row_offset[i];
}

/// Everything needed to evaluate row i at any column.
struct ResolvedRow {
  enum class Kind { Zero, Original, Gadget } kind = Kind::Zero;
  std::size_t j_plus = 0;
  std::size_t j_minus = 0;
  BigInt scale;
  Mc2Gadget gadget;
  std::size_t equation = 0;
};

ResolvedRow resolve_row(const SparseIntSystem& sys, const Tables& t, std::size_t i, bool scan) {
  ResolvedRow r;
  if (i == 0 || i > t.m_final()) return r;
  if (i <= t.m) {
    r.kind = ResolvedRow::Kind::Original;
    r.j_plus = surviving_column(sys, t, i, Sign::Plus);
    r.j_minus = surviving_column(sys, t, i, Sign::Minus);
    r.scale = pow2(t.stats[i - 1][Sign::Plus].len - 1);
    return r;
  }
  const std::size_t ind = (i - t.m - 1) / 8 + 1;
  const Round round = scan ? scan_round(t, ind) : indexed_round(t, ind);
  r.kind = ResolvedRow::Kind::Gadget;
  r.gadget = describe(sys, t, round, ind).gadget;
  r.equation = (i - t.m - 1) % 8;
  return r;
}

/// Writes B[i, j] into `out` and returns true when it is nonzero.
bool evaluate(const ResolvedRow& r, const Tables& t, std::size_t j, BigInt& out) {
  switch (r.kind) {
    case ResolvedRow::Kind::Zero:
      return false;
    case ResolvedRow::Kind::Original:
      if (j == r.j_plus) {
        out = r.scale;
        return true;
      }
      if (j == r.j_minus) {
        out = -r.scale;
        return true;
      }
      return false;
    case ResolvedRow::Kind::Gadget: {
      const auto& eq = kGadgetEquations[r.equation];
      long c = 0;
      for (std::size_t k = 0; k < eq.size; ++k) {
        if (term_column(r.gadget, eq.terms[k], t.n_x()) == j) c += eq.terms[k].coeff;
      }
      if (c == 0) return false;
      out = c;
      return true;
    }
  }
  return false;
}

}  // namespace

double FixedPoint::to_double() const {
  return std::ldexp(raw.get_d(), -static_cast<int>(frac_bits));
}

std::string FixedPoint::to_string(std::size_t digits) const {
  // Round half up to `digits` decimals.
  BigInt scale = 1;
  for (std::size_t d = 0; d < digits; ++d) scale *= 10;
  const BigInt one = pow2(frac_bits);
  const BigInt scaled = (raw * scale * 2 + one) / (one * 2);
  std::string out = mc2red::to_string(BigInt(scaled / scale));
  if (digits == 0) return out;
  std::string frac = mc2red::to_string(BigInt(scaled % scale));
  out.push_back('.');
  out.append(digits - frac.size(), '0');
  return out + frac;
}

OracleContext::OracleContext(SparseIntSystem gz2, Mode mode) : sys_(std::move(gz2)), mode_(mode) {
  require_class(sys_, MatrixClass::Gz2, {.check_columns = false});
  tables_ = std::make_shared<const Tables>(build_tables(sys_, mode_ == Mode::Indexed));
}

std::size_t OracleContext::m_final() const noexcept { return tables_->m_final(); }
std::size_t OracleContext::n_final() const noexcept { return 2 * tables_->n_x(); }
std::size_t OracleContext::n_x() const noexcept { return tables_->n_x(); }
std::size_t OracleContext::total_gadgets() const noexcept { return tables_->total; }

const RowStats& OracleContext::stats(std::size_t i) const {
  if (i == 0 || i > tables_->m) throw std::out_of_range("row " + std::to_string(i) + " out of range");
  return tables_->stats[i - 1];
}

std::size_t OracleContext::prefix_sum(Sign s, std::size_t i, std::size_t k) const {
  if (i == 0 || i > tables_->m) throw std::out_of_range("row " + std::to_string(i) + " out of range");
  return tables_->prefix_sum(s, i, k);
}

GadgetDescriptor OracleContext::resolve_gadget(std::size_t ind) const {
  if (ind == 0 || ind > tables_->total) {
    throw std::out_of_range("gadget " + std::to_string(ind) + " out of range");
  }
  if (mode_ == Mode::Recompute) {
    const Tables fresh = build_tables(sys_, false);
    return describe(sys_, fresh, scan_round(fresh, ind), ind);
  }
  return describe(sys_, *tables_, indexed_round(*tables_, ind), ind);
}

BigInt OracleContext::entry(std::size_t i, std::size_t j) const noexcept {
  if (j == 0 || j > n_final()) return 0;
  BigInt out = 0;
  if (mode_ == Mode::Recompute) {
    const Tables fresh = build_tables(sys_, false);
    evaluate(resolve_row(sys_, fresh, i, true), fresh, j, out);
  } else {
    evaluate(resolve_row(sys_, *tables_, i, false), *tables_, j, out);
  }
  return out;
}

BigInt OracleContext::rhs_entry(std::size_t i) const noexcept {
  if (i >= 1 && i <= tables_->m) return sys_.rhs(i);
  return 0;
}

SparseRow OracleContext::row(std::size_t i) const {
  SparseRow out;
  const Tables* t = tables_.get();
  std::optional<Tables> fresh;
  if (mode_ == Mode::Recompute) t = &fresh.emplace(build_tables(sys_, false));
  const auto r = resolve_row(sys_, *t, i, mode_ == Mode::Recompute);
  BigInt v;
  for (std::size_t j = 1; j <= n_final(); ++j) {
    if (evaluate(r, *t, j, v)) out.emplace(j, v);
  }
  return out;
}

FixedPoint OracleContext::row_weight(std::size_t i, std::size_t precision_bits) const {
  const BigInt radicand = BigInt(10 * stats(i).total_gadgets()) * pow2(2 * precision_bits);
  FixedPoint fp;
  mpz_sqrt(fp.raw.get_mpz_t(), radicand.get_mpz_t());
  fp.frac_bits = precision_bits;
  return fp;
}

SparseIntSystem materialize(const OracleContext& ctx, unsigned threads) {
  const std::size_t m = ctx.m_final();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(m, 1)));

  std::vector<SparseRow> rows(m);
  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) rows[i] = ctx.row(i + 1);
  };
  if (threads <= 1) {
    work(0, m);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (m + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t first = w * chunk;
      const std::size_t last = std::min(m, first + chunk);
      if (first < last) pool.emplace_back(work, first, last);
    }
  }

  SparseIntSystem out(m, ctx.n_final(), MatrixClass::MC2);
  for (std::size_t i = 1; i <= m; ++i) {
    out.set_row(i, std::move(rows[i - 1]));
    out.set_rhs(i, ctx.rhs_entry(i));
  }
  return out;
}

}  // namespace mc2red

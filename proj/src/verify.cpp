#include "mc2red/verify.hpp"

#include "mc2red/errors.hpp"
#include "mc2red/oracle.hpp"
#include "mc2red/random_instances.hpp"
#include "mc2red/row_stats.hpp"
#include "mc2red/validate.hpp"

#include <algorithm>
#include <sstream>

namespace mc2red {

RationalVector Pipeline::recover(const RationalVector& x_star) const {
  const auto x_gz2 = recover_gz2_from_mc2(x_star, mc2.trace);
  const auto x_gz = recover_gz_from_gz2(x_gz2, gz2.cert);
  return recover_g_from_gz(x_gz, gz.cert);
}

Pipeline run_pipeline(const SparseIntSystem& g) {
  auto gz = reduce_g_to_gz(g);
  auto gz2 = reduce_gz_to_gz2(gz.system);
  auto mc2 = reduce_gz2_to_mc2(gz2.system);
  return {std::move(gz), std::move(gz2), std::move(mc2)};
}

RoundtripReport pipeline_roundtrip(const SparseIntSystem& g, const RationalVector& x_seed) {
  RoundtripReport report;
  RationalVector x = x_seed;
  const auto ax = multiply(g, x);
  BigInt scale = 1;
  for (const auto& v : ax) scale = lcm(scale, BigInt(v.get_den()));
  for (auto& xi : x) xi *= scale;
  report.seed_scale = scale;

  SparseIntSystem sys = g;
  const auto b = multiply(g, x);
  for (std::size_t i = 1; i <= sys.rows(); ++i) sys.set_rhs(i, BigInt(b[i - 1].get_num()));

  const auto pipe = run_pipeline(sys);
  report.rows = {sys.rows(), pipe.gz.system.rows(), pipe.gz2.system.rows(), pipe.mc2.system.rows()};
  report.cols = {sys.cols(), pipe.gz.system.cols(), pipe.gz2.system.cols(), pipe.mc2.system.cols()};
  report.gadgets = pipe.mc2.trace.gadgets.size();

  const auto solved = exact_solve(pipe.mc2.system);
  if (!solved.solvable()) {
    report.message = "reduced system reported unsolvable for a planted solution";
    return report;
  }
  report.recovered = pipe.recover(solved.witness);
  if (!satisfies(sys, report.recovered)) {
    report.message = "recovered vector does not solve the original system";
    return report;
  }
  report.ok = true;
  report.message = "ok";
  return report;
}

SolvabilityReport solvability_chain(const SparseIntSystem& g) {
  const auto pipe = run_pipeline(g);
  SolvabilityReport r;
  r.status = {exact_solve(g).status, exact_solve(pipe.gz.system).status, exact_solve(pipe.gz2.system).status,
              exact_solve(pipe.mc2.system).status};
  r.consistent = std::all_of(r.status.begin(), r.status.end(), [&](SolveStatus s) { return s == r.status[0]; });
  return r;
}

bool gadget_sum_check(const std::array<SparseRow, 8>& rows, const Mc2Gadget& g) {
  SparseRow sum;
  for (const auto& row : rows) {
    for (const auto& [j, v] : row) sum[j] += v;
  }
  SparseRow expected;
  expected[g.t] += 2;
  expected[g.j1] -= 1;
  expected[g.j2] -= 1;
  std::erase_if(sum, [](const auto& kv) { return sgn(kv.second) == 0; });
  std::erase_if(expected, [](const auto& kv) { return sgn(kv.second) == 0; });
  return sum == expected;
}

std::string Mismatch::describe() const {
  std::ostringstream os;
  if (col == 0) {
    os << "rhs[" << row << "]";
  } else {
    os << "entry (" << row << ", " << col << ")";
  }
  os << ": expected " << to_string(expected) << ", got " << to_string(actual);
  return os.str();
}

std::optional<Mismatch> first_mismatch(const SparseIntSystem& expected, const SparseIntSystem& actual) {
  const std::size_t m = std::max(expected.rows(), actual.rows());
  static const SparseRow kEmpty;
  static const BigInt kZero = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const auto& er = i <= expected.rows() ? expected.row(i) : kEmpty;
    const auto& ar = i <= actual.rows() ? actual.row(i) : kEmpty;
    // Absent entries are zero, so walking the union of supports covers every j.
    auto e = er.begin();
    auto a = ar.begin();
    while (e != er.end() || a != ar.end()) {
      if (a == ar.end() || (e != er.end() && e->first < a->first)) return Mismatch{i, e->first, e->second, 0};
      if (e == er.end() || a->first < e->first) return Mismatch{i, a->first, 0, a->second};
      if (e->second != a->second) return Mismatch{i, e->first, e->second, a->second};
      ++e;
      ++a;
    }
    const BigInt& eb = i <= expected.rows() ? expected.rhs(i) : kZero;
    const BigInt& ab = i <= actual.rows() ? actual.rhs(i) : kZero;
    if (eb != ab) return Mismatch{i, 0, eb, ab};
  }
  return std::nullopt;
}

EquivalenceReport oracle_equivalence_check(const SparseIntSystem& gz2, unsigned threads) {
  EquivalenceReport report;
  const auto built = reduce_gz2_to_mc2(gz2);
  const OracleContext ctx(gz2);
  report.m_final = ctx.m_final();
  report.n_final = ctx.n_final();
  report.gadgets = ctx.total_gadgets();

  std::size_t sum_num_g = 0;
  for (std::size_t i = 1; i <= gz2.rows(); ++i) sum_num_g += ctx.stats(i).total_gadgets();
  const std::size_t m_formula = gz2.rows() + 8 * sum_num_g;
  const std::size_t n_formula = 2 * gz2.cols() + 10 * sum_num_g;
  if (ctx.m_final() != built.system.rows() || ctx.n_final() != built.system.cols() ||
      ctx.m_final() != m_formula || ctx.n_final() != n_formula || built.trace.m_final != m_formula ||
      built.trace.n_final != n_formula) {
    std::ostringstream os;
    os << "dimension mismatch: builder " << built.system.rows() << "x" << built.system.cols() << ", oracle "
       << ctx.m_final() << "x" << ctx.n_final() << ", formula " << m_formula << "x" << n_formula;
    report.message = os.str();
    return report;
  }
  for (const auto& d : built.trace.gadgets) {
    if (!(ctx.resolve_gadget(d.ind) == d)) {
      report.message = "gadget " + std::to_string(d.ind) + " resolves differently";
      return report;
    }
  }
  const auto oracle_matrix = materialize(ctx, threads);
  if (auto mm = first_mismatch(built.system, oracle_matrix)) {
    report.mismatch = mm;
    report.message = "mismatch at " + mm->describe();
    return report;
  }
  report.ok = true;
  report.message = "ok";
  return report;
}

SparseIntSystem golden_row_system() {
  SparseIntSystem sys(1, 5, MatrixClass::Gz2);
  const long coeffs[] = {3, 5, 1, 7, -16};
  for (std::size_t j = 1; j <= 5; ++j) sys.set_entry(1, j, coeffs[j - 1]);
  return sys;
}

namespace {

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, passed && detail.empty() ? "ok" : std::move(detail)};
}

CheckResult golden_gadgets() {
  const auto red = reduce_gz2_to_mc2(golden_row_system());
  // (t, j1, j2) for 2 x_t = x_j1 + x_j2.
  const std::array<std::array<std::size_t, 3>, 7> expected = {{
      {6, 1, 2}, {7, 3, 4}, {8, 1, 4}, {9, 6, 7}, {10, 2, 4}, {11, 8, 9}, {12, 10, 11}}};
  if (red.trace.gadgets.size() != expected.size()) {
    return check("golden gadgets", false, std::to_string(red.trace.gadgets.size()) + " gadgets");
  }
  for (std::size_t g = 0; g < expected.size(); ++g) {
    const auto& got = red.trace.gadgets[g].gadget;
    if (got.t != expected[g][0] || got.j1 != expected[g][1] || got.j2 != expected[g][2]) {
      return check("golden gadgets", false, "gadget " + std::to_string(g + 1) + " differs");
    }
  }
  const SparseRow row{{5, BigInt(-16)}, {12, BigInt(16)}};
  return check("golden gadgets", red.system.row(1) == row, "transformed row differs");
}

CheckResult golden_stats() {
  const auto st = row_stats(golden_row_system(), 1);
  const std::vector<std::size_t> cb{4, 2, 2, 0, 0};
  const std::vector<std::size_t> ng{2, 2, 2, 1, 0};
  const bool ok = st[Sign::Plus].len == 5 && st[Sign::Plus].count_bit == cb && st[Sign::Plus].num_gadget == ng;
  return check("golden row statistics", ok, "CountBit/NumGadget differ");
}

CheckResult golden_oracle() {
  const OracleContext ctx(golden_row_system());
  const bool ok = ctx.m_final() == 57 && ctx.n_final() == 80 && ctx.entry(1, 12) == 16 && ctx.entry(1, 5) == -16 &&
                  ctx.entry(1, 3) == 0 && ctx.entry(2, 6) == 1 && ctx.entry(1000, 1) == 0;
  return check("golden oracle entries", ok, "unexpected oracle value");
}

}  // namespace

std::vector<CheckResult> selftest(std::uint64_t seed, std::size_t count) {
  std::vector<CheckResult> out;
  out.push_back(golden_gadgets());
  out.push_back(golden_stats());
  out.push_back(golden_oracle());
  {
    const auto rep = oracle_equivalence_check(golden_row_system());
    out.push_back(check("golden oracle equivalence", rep.ok, rep.message));
  }

  Rng rng(seed);
  {
    std::string detail;
    for (std::size_t c = 0; c < count && detail.empty(); ++c) {
      const auto sys = random_gz2_system(rng, {.max_m = 1, .max_n = 12, .max_w = 8});
      const auto red = reduce_gz2_to_mc2(sys);
      for (Sign s : kSigns) {
        const auto& side = red.trace.per_row_stats[0][s];
        const auto rec = num_gadget_recurrence(side.count_bit, side.len);
        for (std::size_t k = 1; k <= side.len; ++k) {
          if (rec[k - 1] != side.num_gadget_at(k) || red.trace.gadgets_in_round(1, s, k) != side.num_gadget_at(k)) {
            detail = "instance " + std::to_string(c) + ": counts disagree at bit " + std::to_string(k);
          }
        }
      }
    }
    out.push_back(check("gadget counts: closed form = recurrence = builder", detail.empty(), detail));
  }
  {
    std::string detail;
    for (std::size_t c = 0; c < count && detail.empty(); ++c) {
      const auto sys = random_gz2_system(rng, {});
      const auto rep = oracle_equivalence_check(sys);
      if (!rep.ok) detail = "instance " + std::to_string(c) + ": " + rep.message;
    }
    out.push_back(check("oracle equals builder", detail.empty(), detail));
  }
  {
    std::string detail;
    for (std::size_t c = 0; c < count && detail.empty(); ++c) {
      const auto g = random_g_system(rng, 6, 6, 31);
      const auto x = random_rational_vector(rng, g.cols(), 20, 6);
      const auto rep = pipeline_roundtrip(g, x);
      if (!rep.ok) {
        detail = "instance " + std::to_string(c) + ": " + rep.message;
        continue;
      }
      const auto pipe = run_pipeline(g);
      if (auto v = validate_class(pipe.mc2.system, MatrixClass::MC2); !v.ok) {
        detail = "instance " + std::to_string(c) + ": MC2 output invalid, " + v.message;
      }
      for (const auto& d : pipe.mc2.trace.gadgets) {
        if (!gadget_sum_check(emit_gadget(d.gadget, 1, pipe.mc2.trace.n_x), d.gadget)) {
          detail = "instance " + std::to_string(c) + ": gadget sum identity fails";
        }
      }
    }
    out.push_back(check("planted round-trip, MC2 validity, gadget sums", detail.empty(), detail));
  }
  {
    std::string detail;
    for (std::size_t c = 0; c < count && detail.empty(); ++c) {
      const auto g = random_unsolvable_g_system(rng, 6, 6, 31);
      const auto rep = solvability_chain(g);
      if (!rep.consistent || rep.status[0] != SolveStatus::Unsolvable) {
        detail = "instance " + std::to_string(c) + ": solvability not preserved";
      }
    }
    out.push_back(check("unsolvable instances stay unsolvable", detail.empty(), detail));
  }
  return out;
}

}  // namespace mc2red

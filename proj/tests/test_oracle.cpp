#include "mc2red/errors.hpp"
#include "mc2red/oracle.hpp"
#include "mc2red/random_instances.hpp"
#include "mc2red/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace mc2red;

TEST_CASE("dims") {
  const OracleContext ex(golden_row_system());
  CHECK(ex.m_final() == 57);
  CHECK(ex.n_final() == 80);

  SparseIntSystem small(1, 3, MatrixClass::Gz2);
  small.set_entry(1, 1, 1);
  small.set_entry(1, 2, 1);
  small.set_entry(1, 3, -2);
  const OracleContext s(small);
  CHECK(s.m_final() == 9);
  CHECK(s.n_final() == 16);

  SparseIntSystem flat(1, 2, MatrixClass::Gz2);
  flat.set_entry(1, 1, 4);
  flat.set_entry(1, 2, -4);
  const OracleContext f(flat);
  CHECK(f.m_final() == 1);
  CHECK(f.n_final() == 4);
  CHECK(f.total_gadgets() == 0);
}

TEST_CASE("entries of the five-term row") {
  const OracleContext ctx(golden_row_system());
  CHECK(ctx.entry(1, 12) == 16);
  CHECK(ctx.entry(1, 5) == -16);
  CHECK(ctx.entry(1, 3) == 0);
  CHECK(ctx.entry(2, 6) == 1);
  CHECK(ctx.entry(2, 13) == -1);

  const auto g6 = ctx.resolve_gadget(6);
  CHECK(g6.i_src == 1);
  CHECK(g6.k_src == 3);
  CHECK(g6.s_src == Sign::Plus);
  CHECK(g6.ell == 2);
  CHECK(g6.gadget.j1 == 8);
  CHECK(g6.gadget.j2 == 9);
  CHECK(g6.gadget.t == 11);

  const auto g4 = ctx.resolve_gadget(4);
  CHECK(g4.k_src == 2);
  CHECK(g4.ell == 2);
  CHECK(ctx.prefix_sum(Sign::Plus, 1, 1) == 0);
  CHECK(ctx.prefix_sum(Sign::Plus, 1, 2) == 2);
  CHECK(g4.gadget.j1 == 6);
  CHECK(g4.gadget.j2 == 7);

  // Rows 42..49 hold gadget 6.
  CHECK(ctx.entry(42, 11) == 1);
  CHECK(ctx.entry(43, 9) == -1);
  CHECK(ctx.entry(46, 8) == -1);

  CHECK_THROWS_AS(ctx.resolve_gadget(0), std::out_of_range);
  CHECK_THROWS_AS(ctx.resolve_gadget(8), std::out_of_range);
}

TEST_CASE("entry and rhs are total") {
  auto sys = golden_row_system();
  sys.set_rhs(1, 5);
  const OracleContext ctx(sys);
  CHECK(ctx.rhs_entry(1) == 5);
  CHECK(ctx.rhs_entry(30) == 0);
  CHECK(ctx.rhs_entry(ctx.m_final() + 5) == 0);
  CHECK(ctx.rhs_entry(0) == 0);
  CHECK(ctx.entry(1000, 1) == 0);
  CHECK(ctx.entry(0, 1) == 0);
  CHECK(ctx.entry(1, 0) == 0);
  CHECK(ctx.entry(1, 81) == 0);
  CHECK(ctx.entry(57, 80) == 0);
  CHECK(ctx.entry(static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)) == 0);
}

TEST_CASE("context rejects non-Gz2 input") {
  SparseIntSystem sys(1, 2);
  sys.set_entry(1, 1, 3);
  sys.set_entry(1, 2, -3);
  CHECK_THROWS_AS(OracleContext{sys}, ValidationError);
}

TEST_CASE("oracle equals the sequential builder on every entry") {
  Rng rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const auto sys = random_gz2_system(rng, {.single_positive = trial % 7 == 0});
    const auto built = reduce_gz2_to_mc2(sys);
    const OracleContext ctx(sys);
    CAPTURE(trial);
    REQUIRE(ctx.m_final() == built.system.rows());
    REQUIRE(ctx.n_final() == built.system.cols());
    for (std::size_t i = 1; i <= ctx.m_final() + 1; ++i) {
      for (std::size_t j = 1; j <= ctx.n_final() + 1; ++j) {
        const BigInt expect = (i <= built.system.rows() && j <= built.system.cols()) ? built.system.entry(i, j) : 0;
        if (ctx.entry(i, j) != expect) {
          FAIL("entry (" << i << ", " << j << ")");
        }
      }
    }
    for (const auto& d : built.trace.gadgets) CHECK(ctx.resolve_gadget(d.ind) == d);
  }
}

TEST_CASE("prefix-sum bracket is unique for every gadget") {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sys = random_gz2_system(rng, {});
    const OracleContext ctx(sys);
    for (std::size_t ind = 1; ind <= ctx.total_gadgets(); ++ind) {
      std::size_t hits = 0;
      for (std::size_t i = 1; i <= sys.rows(); ++i) {
        for (Sign s : kSigns) {
          const auto& side = ctx.stats(i)[s];
          for (std::size_t k = 1; k <= side.len; ++k) {
            const std::size_t p = ctx.prefix_sum(s, i, k);
            if (p < ind && ind <= p + side.num_gadget_at(k)) ++hits;
          }
        }
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("evaluation order, threading and recompute mode do not change results") {
  Rng rng(5150);
  for (int trial = 0; trial < 8; ++trial) {
    const auto sys = random_gz2_system(rng, {.max_m = 4, .max_n = 6, .max_w = 5});
    const OracleContext indexed(sys);
    const OracleContext recompute(sys, OracleContext::Mode::Recompute);

    const auto sequential = materialize(indexed, 1);
    CHECK(materialize(indexed, 4) == sequential);
    CHECK(materialize(recompute, 2) == sequential);

    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i <= indexed.m_final(); ++i) {
      for (std::size_t j = 1; j <= indexed.n_final(); ++j) cells.emplace_back(i, j);
    }
    std::shuffle(cells.begin(), cells.end(), rng);
    SparseIntSystem shuffled(indexed.m_final(), indexed.n_final(), MatrixClass::MC2);
    for (const auto& [i, j] : cells) {
      shuffled.set_entry(i, j, recompute.entry(i, j));
      if (j == 1) shuffled.set_rhs(i, recompute.rhs_entry(i));
    }
    CHECK(shuffled == sequential);
  }
}

TEST_CASE("row weight") {
  const OracleContext ctx(golden_row_system());
  const auto w = ctx.row_weight(1, 16);
  CHECK(w.raw == testing::isqrt_bisect(BigInt(70) << 32));
  CHECK(w.raw == 548313);
  CHECK(w.to_string(4) == "8.3666");

  SparseIntSystem flat(1, 2, MatrixClass::Gz2);
  flat.set_entry(1, 1, 4);
  flat.set_entry(1, 2, -4);
  CHECK(OracleContext(flat).row_weight(1, 16).raw == 0);

  // Eleven single-bit positive entries summing to 16 need ten gadgets.
  SparseIntSystem ten(1, 12, MatrixClass::Gz2);
  for (std::size_t j = 1; j <= 8; ++j) ten.set_entry(1, j, 1);
  ten.set_entry(1, 9, 2);
  ten.set_entry(1, 10, 2);
  ten.set_entry(1, 11, 4);
  ten.set_entry(1, 12, -16);
  const OracleContext tctx(ten);
  REQUIRE(tctx.stats(1).total_gadgets() == 10);
  const auto exact = tctx.row_weight(1, 20);
  CHECK(exact.raw == BigInt(10) << 20);
  CHECK(exact.to_string(3) == "10.000");
}

TEST_CASE("row weight stays within the fixed-point error bound") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sys = random_gz2_system(rng, {});
    const OracleContext ctx(sys);
    for (std::size_t i = 1; i <= sys.rows(); ++i) {
      for (std::size_t p : {0u, 8u, 30u}) {
        const auto w = ctx.row_weight(i, p);
        const BigInt target = BigInt(10 * ctx.stats(i).total_gadgets()) << static_cast<mp_bitcnt_t>(2 * p);
        CHECK(w.raw * w.raw <= target);
        CHECK((w.raw + 1) * (w.raw + 1) > target);
      }
    }
  }
}

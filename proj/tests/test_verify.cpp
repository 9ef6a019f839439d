#include "mc2red/oracle.hpp"
#include "mc2red/random_instances.hpp"
#include "mc2red/validate.hpp"
#include "mc2red/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mc2red;

TEST_CASE("pipeline round-trip on [[2]] with seed 3") {
  SparseIntSystem a(1, 1, MatrixClass::G);
  a.set_entry(1, 1, 2);
  const auto rep = pipeline_roundtrip(a, {Rational(3)});
  CHECK(rep.ok);
  CHECK(rep.seed_scale == 1);
  REQUIRE(rep.recovered.size() == 1);
  CHECK(rep.recovered[0] * 2 == 6);
  CHECK(rep.rows[3] == rep.rows[2] + 8 * rep.gadgets);
}

TEST_CASE("rational seeds are scaled to an integral rhs") {
  SparseIntSystem a(2, 2, MatrixClass::G);
  a.set_entry(1, 1, 1);
  a.set_entry(1, 2, 1);
  a.set_entry(2, 2, 3);
  const auto rep = pipeline_roundtrip(a, {Rational(1, 2), Rational(1, 3)});
  CHECK(rep.ok);
  CHECK(rep.seed_scale == 6);
}

TEST_CASE("random round-trips and unsolvable chains") {
  Rng rng(2718);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_g_system(rng, 4, 5, 31);
    const auto rep = pipeline_roundtrip(g, random_rational_vector(rng, g.cols(), 10, 4));
    CHECK_MESSAGE(rep.ok, rep.message);

    const auto bad = random_unsolvable_g_system(rng, 4, 5, 31);
    REQUIRE_FALSE(testing::dense_ranks(bad).solvable());
    const auto chain = solvability_chain(bad);
    CHECK(chain.consistent);
    CHECK(chain.status[3] == SolveStatus::Unsolvable);
  }
}

TEST_CASE("homogeneous kernel: all-ones survives on the original X block") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sys = random_gz2_system(rng, {.max_m = 4, .max_n = 6});
    const auto red = reduce_gz2_to_mc2(sys);
    // Every original and replacement variable equal to 1, gadget variables
    // x_{t'+r} = 1 and y = 0, solves the reduced homogeneous system.
    RationalVector x(red.trace.n_final, Rational(0));
    for (std::size_t v = 0; v < red.trace.n_x; ++v) x[v] = 1;
    CHECK(satisfies(red.system, x));
    CHECK(recover_gz2_from_mc2(x, red.trace) == RationalVector(sys.cols(), Rational(1)));
  }
}

TEST_CASE("oracle equivalence check passes and detects corruption") {
  const auto rep = oracle_equivalence_check(golden_row_system());
  CHECK(rep.ok);
  CHECK(rep.m_final == 57);
  CHECK(rep.n_final == 80);
  CHECK(rep.gadgets == 7);

  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(oracle_equivalence_check(random_gz2_system(rng, {}), 2).ok);
    CHECK(oracle_equivalence_check(random_gz2_system(rng, {.single_positive = true})).ok);
  }

  const OracleContext ctx(golden_row_system());
  auto tampered = materialize(ctx);
  tampered.set_entry(20, 3, 1);
  const auto mm = first_mismatch(materialize(ctx), tampered);
  REQUIRE(mm.has_value());
  CHECK(mm->row == 20);
  CHECK(mm->col == 3);
  CHECK(mm->describe() == "entry (20, 3): expected 0, got 1");

  auto rhs_changed = materialize(ctx);
  rhs_changed.set_rhs(9, 2);
  const auto rm = first_mismatch(materialize(ctx), rhs_changed);
  REQUIRE(rm.has_value());
  CHECK(rm->col == 0);
}

TEST_CASE("selftest passes") {
  for (const auto& r : selftest(7, 10)) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
}

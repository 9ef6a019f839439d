#include "mc2red/exact_solve.hpp"
#include "mc2red/pair_replace.hpp"
#include "mc2red/random_instances.hpp"
#include "mc2red/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mc2red;

TEST_CASE("exact_solve small cases") {
  SparseIntSystem a(1, 2);
  a.set_entry(1, 1, 2);
  a.set_entry(1, 2, -2);
  a.set_rhs(1, 2);
  const auto s = exact_solve(a);
  REQUIRE(s.solvable());
  CHECK(s.rank == 1);
  CHECK(s.witness == RationalVector{Rational(1), Rational(0)});

  SparseIntSystem bad(2, 2);
  bad.set_entry(1, 1, 1);
  bad.set_entry(1, 2, -1);
  bad.set_entry(2, 1, 1);
  bad.set_entry(2, 2, -1);
  bad.set_rhs(2, 1);
  const auto u = exact_solve(bad);
  CHECK_FALSE(u.solvable());
  CHECK(u.rank == 1);
  CHECK(u.witness.empty());

  SparseIntSystem frac(2, 2);
  frac.set_entry(1, 1, 3);
  frac.set_entry(1, 2, 1);
  frac.set_entry(2, 1, 1);
  frac.set_entry(2, 2, 2);
  frac.set_rhs(1, 1);
  frac.set_rhs(2, 0);
  const auto f = exact_solve(frac);
  REQUIRE(f.solvable());
  CHECK(f.witness == RationalVector{Rational(2, 5), Rational(-1, 5)});
}

TEST_CASE("homogeneous reduced five-term system has the zero witness") {
  const auto red = reduce_gz2_to_mc2(golden_row_system());
  const auto s = exact_solve(red.system);
  REQUIRE(s.solvable());
  CHECK(s.witness == RationalVector(80, Rational(0)));
}

TEST_CASE("exact_solve agrees with dense rank and leaves zero residual") {
  Rng rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    SparseIntSystem sys = trial % 2 ? random_unsolvable_g_system(rng, 7, 7, 20) : random_g_system(rng, 7, 7, 20);
    if (trial % 4 == 0) {
      for (std::size_t i = 1; i <= sys.rows(); ++i) sys.set_rhs(i, static_cast<long>(rng() % 11) - 5);
    }
    const auto ranks = testing::dense_ranks(sys);
    const auto s = exact_solve(sys);
    CHECK(s.rank == ranks.matrix);
    CHECK(s.solvable() == ranks.solvable());
    if (s.solvable()) CHECK(satisfies(sys, s.witness));
  }
}

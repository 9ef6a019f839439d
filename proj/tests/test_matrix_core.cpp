#include "mc2red/errors.hpp"
#include "mc2red/random_instances.hpp"
#include "mc2red/sign_magnitude.hpp"
#include "mc2red/sparse_system.hpp"
#include "mc2red/validate.hpp"

#include <doctest.h>

#include <initializer_list>
#include <vector>

using namespace mc2red;

namespace {

SparseIntSystem dense(std::initializer_list<std::initializer_list<long>> rows, MatrixClass tag = MatrixClass::Unchecked) {
  const std::size_t m = rows.size();
  const std::size_t n = rows.begin()->size();
  SparseIntSystem sys(m, n, tag);
  std::size_t i = 1;
  for (const auto& r : rows) {
    std::size_t j = 1;
    for (long v : r) sys.set_entry(i, j++, v);
    ++i;
  }
  return sys;
}

}  // namespace

TEST_CASE("sign-magnitude encoding") {
  auto five = encode_sign_magnitude(5, 4);
  CHECK_FALSE(five.negative);
  CHECK(five.to_string() == "0 0101");

  auto zero = encode_sign_magnitude(0, 4);
  CHECK(zero.to_string() == "0 0000");
  SignMagnitude negative_zero{true, {false, false, false, false}};
  CHECK(decode_sign_magnitude(negative_zero) == 0);

  auto m16 = encode_sign_magnitude(-16, 5);
  CHECK(m16.to_string() == "1 10000");
  CHECK(decode_sign_magnitude(m16) == -16);

  CHECK_THROWS_AS(encode_sign_magnitude(16, 4), std::overflow_error);
  CHECK_THROWS_AS(encode_sign_magnitude(-16, 4), std::overflow_error);
  CHECK_NOTHROW(encode_sign_magnitude(15, 4));
}

TEST_CASE("sign-magnitude round-trip property") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t w = std::uniform_int_distribution<std::size_t>(1, 80)(rng);
    BigInt z = 0;
    for (std::size_t b = 0; b < w; ++b) z = 2 * z + static_cast<long>(rng() & 1);
    if (rng() & 1) z = -z;
    const auto sm = encode_sign_magnitude(z, w);
    CHECK(sm.width() == w);
    CHECK(decode_sign_magnitude(sm) == z);
  }
}

TEST_CASE("sparse system strips zeros and checks bounds") {
  SparseIntSystem sys(2, 3);
  sys.set_entry(1, 2, 7);
  sys.set_entry(1, 3, 0);
  CHECK(sys.nonzeros() == 1);
  sys.add_to_entry(1, 2, -7);
  CHECK(sys.nonzeros() == 0);
  CHECK(sys.entry(1, 2) == 0);
  CHECK_THROWS_AS(sys.entry(0, 1), std::out_of_range);
  CHECK_THROWS_AS(sys.entry(3, 1), std::out_of_range);
  CHECK_THROWS_AS(sys.set_entry(1, 4, 1), std::out_of_range);
  CHECK(sys.rhs().size() == 2);
}

TEST_CASE("validate_class examples") {
  CHECK(validate_class(dense({{1, 2, -3}}), MatrixClass::Gz));
  CHECK(validate_class(dense({{3, 5, 1, 7, -16}}), MatrixClass::Gz2));
  CHECK(validate_class(dense({{1, -1, 0, 0}, {0, 0, 2, -2}}), MatrixClass::MC2));
}

TEST_CASE("validate_class diagnostics") {
  SUBCASE("zero row and zero column") {
    auto v = validate_class(dense({{1, 0}, {0, 0}}), MatrixClass::G);
    CHECK_FALSE(v.ok);
    CHECK(v.message == "row 2: all-zero row");
    CHECK(v.row == 2u);

    auto c = validate_class(dense({{1, 0}}), MatrixClass::G);
    CHECK_FALSE(c.ok);
    CHECK(c.message == "column 2: all-zero column");
    CHECK(validate_class(dense({{1, 0}}), MatrixClass::G, {.check_columns = false}));
  }
  SUBCASE("row sums") {
    auto v = validate_class(dense({{1, -1}, {2, 1}}), MatrixClass::Gz);
    CHECK(v.message == "row 2: nonzero row sum");
    auto p = validate_class(dense({{3, -3}}), MatrixClass::Gz2);
    CHECK_FALSE(p.ok);
    CHECK(p.row == 1u);
  }
  SUBCASE("MC2 patterns") {
    // (x1 - y1) - (x2 - y2), scaled by -3.
    CHECK(validate_class(dense({{-3, 3, 3, -3}}), MatrixClass::MC2));
    CHECK_FALSE(validate_class(dense({{1, -1, 0}}), MatrixClass::MC2));
    // mixed X/Y pair
    CHECK_FALSE(validate_class(dense({{1, 0, -1, 0}}), MatrixClass::MC2));
    // unequal magnitudes
    CHECK_FALSE(validate_class(dense({{2, -1, 0, 0}}), MatrixClass::MC2));
    // wrong sign pattern in the 4-term form
    CHECK_FALSE(validate_class(dense({{1, -1, 1, -1}}), MatrixClass::MC2));
    // y columns not aligned with x columns
    CHECK_FALSE(validate_class(dense({{1, -1, 0, 0, 0, -1, 1, 0}}), MatrixClass::MC2));
    CHECK_FALSE(validate_class(dense({{1, 1, 1}}), MatrixClass::MC2));
  }
  CHECK(validate_class(dense({{0}}), MatrixClass::Unchecked));
}

TEST_CASE("require_class throws with the row") {
  try {
    require_class(dense({{1, -1}, {2, 1}}), MatrixClass::Gz);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.row() == 2u);
  }
}

TEST_CASE("validators are monotone along the pipeline") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sys = random_gz2_system(rng, {});
    REQUIRE(validate_class(sys, MatrixClass::Gz2));
    CHECK(validate_class(sys, MatrixClass::Gz));
    CHECK(validate_class(sys, MatrixClass::G));
  }
}

TEST_CASE("multiply and satisfies") {
  auto sys = dense({{1, 2}, {3, -1}});
  sys.set_rhs(1, 5);
  sys.set_rhs(2, 1);
  RationalVector x{Rational(1), Rational(2)};
  CHECK(satisfies(sys, x));
  x[1] = Rational(3, 2);
  CHECK_FALSE(satisfies(sys, x));
  CHECK_THROWS_AS(multiply(sys, RationalVector(3)), std::invalid_argument);
}

TEST_CASE("big integer helpers") {
  CHECK(bit_length(0) == 0);
  CHECK(bit_length(16) == 5);
  CHECK(bit_length(-16) == 5);
  CHECK(bit_at(5, 1));
  CHECK_FALSE(bit_at(5, 2));
  CHECK(bit_at(-5, 3));
  CHECK(is_power_of_two(1));
  CHECK_FALSE(is_power_of_two(0));
  CHECK_FALSE(is_power_of_two(-4));
  CHECK(parse_big_int("+12") == 12);
  CHECK(parse_big_int("-123456789012345678901234567890") == BigInt("-123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_big_int("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_big_int("-"), std::invalid_argument);
}

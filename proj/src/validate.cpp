#include "mc2red/validate.hpp"

#include "mc2red/errors.hpp"

#include <vector>

namespace mc2red {

namespace {

Validation fail(std::size_t row, const std::string& what) {
  return {false, "row " + std::to_string(row) + ": " + what, row};
}

Validation fail_global(const std::string& what) { return {false, what, std::nullopt}; }

bool is_mc2_row(const SparseRow& row, std::size_t half) {
  auto in_x = [half](std::size_t c) { return c <= half; };
  if (row.size() == 2) {
    auto a = row.begin();
    auto b = std::next(a);
    if (a->second != -b->second) return false;
    // Both in X or both in Y; distinct columns are guaranteed by the map.
    return in_x(a->first) == in_x(b->first);
  }
  if (row.size() == 4) {
    // Columns sorted: x_a < x_b <= half < y_a = half + a < y_b = half + b.
    auto it = row.begin();
    const auto& [xa, cxa] = *it++;
    const auto& [xb, cxb] = *it++;
    const auto& [ya, cya] = *it++;
    const auto& [yb, cyb] = *it;
    if (!in_x(xa) || !in_x(xb) || in_x(ya) || in_x(yb)) return false;
    if (ya != half + xa || yb != half + xb) return false;
    // c * ((x_a - y_a) - (x_b - y_b)).
    return cya == -cxa && cxb == -cxa && cyb == cxa;
  }
  return false;
}

}  // namespace

BigInt positive_sum(const SparseRow& row) {
  BigInt s = 0;
  for (const auto& [j, v] : row) {
    if (sgn(v) > 0) s += v;
  }
  return s;
}

BigInt negative_sum(const SparseRow& row) {
  BigInt s = 0;
  for (const auto& [j, v] : row) {
    if (sgn(v) < 0) s -= v;
  }
  return s;
}

Validation validate_class(const SparseIntSystem& sys, MatrixClass tag, ValidationOptions opts) {
  if (tag == MatrixClass::Unchecked) return {};

  if (tag == MatrixClass::MC2) {
    if (sys.cols() % 2 != 0) return fail_global("MC2 requires an even column count");
    const std::size_t half = sys.cols() / 2;
    for (std::size_t i = 1; i <= sys.rows(); ++i) {
      if (!is_mc2_row(sys.row(i), half)) return fail(i, "not a scaled 2-commodity equation");
    }
    return {};
  }

  std::vector<bool> col_used(sys.cols() + 1, false);
  for (std::size_t i = 1; i <= sys.rows(); ++i) {
    const auto& row = sys.row(i);
    if (row.empty()) return fail(i, "all-zero row");
    for (const auto& [j, v] : row) col_used[j] = true;
  }
  if (opts.check_columns) {
    for (std::size_t j = 1; j <= sys.cols(); ++j) {
      if (!col_used[j]) return fail_global("column " + std::to_string(j) + ": all-zero column");
    }
  }
  if (tag == MatrixClass::G) return {};

  for (std::size_t i = 1; i <= sys.rows(); ++i) {
    const auto& row = sys.row(i);
    const BigInt pos = positive_sum(row);
    if (pos != negative_sum(row)) return fail(i, "nonzero row sum");
    if (tag == MatrixClass::Gz2 && !is_power_of_two(pos)) {
      return fail(i, "positive coefficient sum " + to_string(pos) + " is not a power of 2");
    }
  }
  return {};
}

void require_class(const SparseIntSystem& sys, MatrixClass tag, ValidationOptions opts) {
  auto v = validate_class(sys, tag, opts);
  if (!v.ok) {
    throw ValidationError("not " + std::string(to_string(tag)) + ": " + v.message, v.row);
  }
}

}  // namespace mc2red

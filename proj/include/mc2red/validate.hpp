#pragma once

#include "mc2red/sparse_system.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace mc2red {

struct Validation {
  bool ok = true;
  /// First violated condition, e.g. "row 2: nonzero row sum". Empty when ok.
  std::string message;
  std::optional<std::size_t> row;

  explicit operator bool() const noexcept { return ok; }
};

struct ValidationOptions {
  /// The class G forbids all-zero columns. Systems produced between pipeline
  /// stages may legitimately carry one (e.g. -A1 == 0), so intermediate
  /// stages skip the column check.
  bool check_columns = true;
};

/// Checks membership in `tag`. Unchecked always passes.
///
/// G: no all-zero row or column. Gz: plus zero row sums. Gz2: plus each row's
/// positive-coefficient sum is a power of two. MC2: even column count and each
/// row is a nonzero multiple of x_a - x_b, y_a - y_b or (x_a - y_a) - (x_b - y_b)
/// with a != b, where X is the first half of the columns and y_v is column n/2 + v.
Validation validate_class(const SparseIntSystem& sys, MatrixClass tag, ValidationOptions opts = {});

/// Throws ValidationError carrying the diagnostic when validation fails.
void require_class(const SparseIntSystem& sys, MatrixClass tag, ValidationOptions opts = {});

/// Sum of the positive entries of row i.
BigInt positive_sum(const SparseRow& row);
/// Sum of the magnitudes of the negative entries of row i.
BigInt negative_sum(const SparseRow& row);

}  // namespace mc2red

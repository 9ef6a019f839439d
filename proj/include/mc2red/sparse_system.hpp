#pragma once

#include "mc2red/big_int.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace mc2red {

/// Matrix classes along the reduction pipeline G -> Gz -> Gz2 -> MC2.
enum class MatrixClass { G, Gz, Gz2, MC2, Unchecked };

std::string_view to_string(MatrixClass c);
std::optional<MatrixClass> parse_matrix_class(std::string_view text);

/// Sparse row keyed by 1-based column. Never stores a zero.
using SparseRow = std::map<std::size_t, BigInt>;

/// An integer linear system A x = b with sparse A.
///
/// Row and column indices are 1-based. Stored entries are never zero:
/// writing a zero removes the entry.
class SparseIntSystem {
 public:
  SparseIntSystem() = default;
  SparseIntSystem(std::size_t rows, std::size_t cols, MatrixClass tag = MatrixClass::Unchecked);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  MatrixClass class_tag() const noexcept { return tag_; }
  void set_class_tag(MatrixClass tag) noexcept { tag_ = tag; }

  /// Entry A[i, j]; zero when absent. Throws std::out_of_range.
  BigInt entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, const BigInt& value);
  void add_to_entry(std::size_t i, std::size_t j, const BigInt& delta);

  const SparseRow& row(std::size_t i) const;
  /// Replaces row i wholesale; zero values are dropped.
  void set_row(std::size_t i, SparseRow row);

  const BigInt& rhs(std::size_t i) const;
  void set_rhs(std::size_t i, const BigInt& value);
  const std::vector<BigInt>& rhs() const noexcept { return rhs_; }

  /// Appends an empty row and returns its index.
  std::size_t append_row(const BigInt& rhs_value = 0);
  /// Grows the column count by `count`.
  void append_cols(std::size_t count) noexcept { cols_ += count; }

  std::size_t nonzeros() const noexcept;

  friend bool operator==(const SparseIntSystem& a, const SparseIntSystem& b) {
    return a.cols_ == b.cols_ && a.tag_ == b.tag_ && a.rows_ == b.rows_ && a.rhs_ == b.rhs_;
  }

 private:
  void check_index(std::size_t i, std::size_t j) const;
  void check_row(std::size_t i) const;

  std::size_t cols_ = 0;
  MatrixClass tag_ = MatrixClass::Unchecked;
  std::vector<SparseRow> rows_;
  std::vector<BigInt> rhs_;
};

/// A x for a rational vector x of length cols().
RationalVector multiply(const SparseIntSystem& sys, const RationalVector& x);

/// True iff A x == b exactly.
bool satisfies(const SparseIntSystem& sys, const RationalVector& x);

}  // namespace mc2red

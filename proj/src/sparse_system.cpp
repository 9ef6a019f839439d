#include "mc2red/sparse_system.hpp"

#include <stdexcept>
#include <string>

namespace mc2red {

std::string_view to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::G: return "G";
    case MatrixClass::Gz: return "Gz";
    case MatrixClass::Gz2: return "Gz2";
    case MatrixClass::MC2: return "MC2";
    case MatrixClass::Unchecked: return "Unchecked";
  }
  return "Unchecked";
}

std::optional<MatrixClass> parse_matrix_class(std::string_view text) {
  if (text == "G") return MatrixClass::G;
  if (text == "Gz") return MatrixClass::Gz;
  if (text == "Gz2") return MatrixClass::Gz2;
  if (text == "MC2") return MatrixClass::MC2;
  if (text == "Unchecked") return MatrixClass::Unchecked;
  return std::nullopt;
}

SparseIntSystem::SparseIntSystem(std::size_t rows, std::size_t cols, MatrixClass tag)
    : cols_(cols), tag_(tag), rows_(rows), rhs_(rows) {}

void SparseIntSystem::check_row(std::size_t i) const {
  if (i == 0 || i > rows_.size()) {
    throw std::out_of_range("row index " + std::to_string(i) + " outside [1, " +
                            std::to_string(rows_.size()) + "]");
  }
}

void SparseIntSystem::check_index(std::size_t i, std::size_t j) const {
  check_row(i);
  if (j == 0 || j > cols_) {
    throw std::out_of_range("column index " + std::to_string(j) + " outside [1, " +
                            std::to_string(cols_) + "]");
  }
}

BigInt SparseIntSystem::entry(std::size_t i, std::size_t j) const {
  check_index(i, j);
  const auto& r = rows_[i - 1];
  auto it = r.find(j);
  return it == r.end() ? BigInt(0) : it->second;
}

void SparseIntSystem::set_entry(std::size_t i, std::size_t j, const BigInt& value) {
  check_index(i, j);
  auto& r = rows_[i - 1];
  if (sgn(value) == 0) {
    r.erase(j);
  } else {
    r[j] = value;
  }
}

void SparseIntSystem::add_to_entry(std::size_t i, std::size_t j, const BigInt& delta) {
  check_index(i, j);
  auto& r = rows_[i - 1];
  auto [it, inserted] = r.try_emplace(j, 0);
  it->second += delta;
  if (sgn(it->second) == 0) r.erase(it);
}

const SparseRow& SparseIntSystem::row(std::size_t i) const {
  check_row(i);
  return rows_[i - 1];
}

void SparseIntSystem::set_row(std::size_t i, SparseRow row) {
  check_row(i);
  std::erase_if(row, [](const auto& kv) { return sgn(kv.second) == 0; });
  if (!row.empty() && (row.begin()->first == 0 || row.rbegin()->first > cols_)) {
    throw std::out_of_range("row " + std::to_string(i) + " has a column outside [1, " +
                            std::to_string(cols_) + "]");
  }
  rows_[i - 1] = std::move(row);
}

const BigInt& SparseIntSystem::rhs(std::size_t i) const {
  check_row(i);
  return rhs_[i - 1];
}

void SparseIntSystem::set_rhs(std::size_t i, const BigInt& value) {
  check_row(i);
  rhs_[i - 1] = value;
}

std::size_t SparseIntSystem::append_row(const BigInt& rhs_value) {
  rows_.emplace_back();
  rhs_.push_back(rhs_value);
  return rows_.size();
}

std::size_t SparseIntSystem::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

RationalVector multiply(const SparseIntSystem& sys, const RationalVector& x) {
  if (x.size() != sys.cols()) {
    throw std::invalid_argument("vector length " + std::to_string(x.size()) + " does not match " +
                                std::to_string(sys.cols()) + " columns");
  }
  RationalVector out(sys.rows());
  for (std::size_t i = 1; i <= sys.rows(); ++i) {
    Rational acc = 0;
    for (const auto& [j, v] : sys.row(i)) acc += Rational(v) * x[j - 1];
    out[i - 1] = acc;
  }
  return out;
}

bool satisfies(const SparseIntSystem& sys, const RationalVector& x) {
  const auto ax = multiply(sys, x);
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (ax[i] != Rational(sys.rhs()[i])) return false;
  }
  return true;
}

}  // namespace mc2red

#include "mc2red/reductions.hpp"

#include "mc2red/validate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mc2red {

std::string_view to_string(Stage s) { return s == Stage::GtoGz ? "GtoGz" : "GzToGz2"; }

namespace {

void check_recovery(const RationalVector& x, const StageCert& cert, Stage expected) {
  if (cert.stage != expected) {
    throw std::invalid_argument("certificate is for stage " + std::string(to_string(cert.stage)));
  }
  if (x.size() != cert.n_after) {
    throw std::invalid_argument("solution length " + std::to_string(x.size()) + " does not match " +
                                std::to_string(cert.n_after) + " reduced columns");
  }
}

}  // namespace

StageResult reduce_g_to_gz(const SparseIntSystem& sys) {
  // Zero columns are rejected on ingestion, not here.
  require_class(sys, MatrixClass::G, {.check_columns = false});
  const std::size_t m = sys.rows();
  const std::size_t n = sys.cols();

  SparseIntSystem out = sys;
  out.append_cols(1);
  out.set_class_tag(MatrixClass::Gz);
  for (std::size_t i = 1; i <= m; ++i) {
    BigInt row_sum = 0;
    for (const auto& [j, v] : sys.row(i)) row_sum += v;
    out.set_entry(i, n + 1, -row_sum);
  }
  StageCert cert{Stage::GtoGz, n, m, n + 1, m, std::nullopt};
  return {std::move(out), cert};
}

RationalVector recover_g_from_gz(const RationalVector& x_prime, const StageCert& cert) {
  check_recovery(x_prime, cert, Stage::GtoGz);
  const Rational& shift = x_prime.back();
  RationalVector x(cert.n_before);
  for (std::size_t i = 0; i < cert.n_before; ++i) x[i] = x_prime[i] - shift;
  return x;
}

StageResult reduce_gz_to_gz2(const SparseIntSystem& sys) {
  require_class(sys, MatrixClass::Gz, {.check_columns = false});
  const std::size_t m = sys.rows();
  const std::size_t n = sys.cols();

  std::vector<BigInt> sums(m);
  BigInt max_sum = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    sums[i - 1] = positive_sum(sys.row(i));
    max_sum = std::max(max_sum, sums[i - 1]);
  }
  // Minimal k with 2^k >= max_sum; rows are nonempty so max_sum >= 1.
  std::size_t k = 0;
  while (pow2(k) < max_sum) ++k;
  const BigInt target = pow2(k);

  SparseIntSystem out = sys;
  out.append_cols(2);
  out.set_class_tag(MatrixClass::Gz2);
  for (std::size_t i = 1; i <= m; ++i) {
    const BigInt pad = target - sums[i - 1];
    out.set_entry(i, n + 1, pad);
    out.set_entry(i, n + 2, -pad);
  }
  const std::size_t balance = out.append_row(0);
  out.set_entry(balance, n + 1, 1);
  out.set_entry(balance, n + 2, -1);

  StageCert cert{Stage::GzToGz2, n, m, n + 2, m + 1, k};
  return {std::move(out), cert};
}

RationalVector recover_gz_from_gz2(const RationalVector& x_dprime, const StageCert& cert) {
  check_recovery(x_dprime, cert, Stage::GzToGz2);
  return RationalVector(x_dprime.begin(), x_dprime.begin() + static_cast<std::ptrdiff_t>(cert.n_before));
}

}  // namespace mc2red

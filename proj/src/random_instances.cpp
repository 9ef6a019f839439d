#include "mc2red/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace mc2red {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

long nonzero(Rng& rng, long max_abs) {
  const long mag = std::uniform_int_distribution<long>(1, max_abs)(rng);
  return std::bernoulli_distribution(0.5)(rng) ? mag : -mag;
}

/// `parts` positive integers summing to `total` (total >= parts).
std::vector<BigInt> composition(Rng& rng, std::size_t total, std::size_t parts) {
  std::set<std::size_t> cuts;
  while (cuts.size() + 1 < parts) cuts.insert(uniform(rng, 1, total - 1));
  std::vector<BigInt> out;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    out.emplace_back(static_cast<unsigned long>(c - prev));
    prev = c;
  }
  out.emplace_back(static_cast<unsigned long>(total - prev));
  return out;
}

std::size_t ceil_log2(std::size_t x) {
  std::size_t e = 0;
  while ((std::size_t{1} << e) < x) ++e;
  return e;
}

}  // namespace

SparseIntSystem random_g_system(Rng& rng, std::size_t max_m, std::size_t max_n, long max_abs) {
  const std::size_t m = uniform(rng, 1, max_m);
  const std::size_t n = uniform(rng, 1, max_n);
  SparseIntSystem sys(m, n, MatrixClass::G);
  std::bernoulli_distribution present(0.6);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (present(rng)) sys.set_entry(i, j, nonzero(rng, max_abs));
    }
  }
  for (std::size_t i = 1; i <= m; ++i) {
    if (sys.row(i).empty()) sys.set_entry(i, uniform(rng, 1, n), nonzero(rng, max_abs));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    bool used = false;
    for (std::size_t i = 1; i <= m && !used; ++i) used = sys.row(i).count(j) > 0;
    if (!used) sys.set_entry(uniform(rng, 1, m), j, nonzero(rng, max_abs));
  }
  return sys;
}

SparseIntSystem random_gz2_system(Rng& rng, const Gz2Options& opts) {
  if (opts.max_n < 2) throw std::invalid_argument("Gz2 rows need at least two columns");
  const std::size_t m = uniform(rng, 1, std::max<std::size_t>(opts.max_m, 1));
  const std::size_t n = uniform(rng, 2, opts.max_n);

  std::vector<std::vector<std::size_t>> supports(m);
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 1);
  for (auto& support : supports) {
    std::shuffle(cols.begin(), cols.end(), rng);
    support.assign(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 2, n)));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    bool used = false;
    for (const auto& s : supports) used = used || std::find(s.begin(), s.end(), j) != s.end();
    if (!used) supports[uniform(rng, 0, m - 1)].push_back(j);
  }

  SparseIntSystem sys(m, n, MatrixClass::Gz2);
  for (std::size_t i = 1; i <= m; ++i) {
    auto& support = supports[i - 1];
    std::shuffle(support.begin(), support.end(), rng);
    const std::size_t k = support.size();
    const std::size_t n_pos = opts.single_positive ? 1 : uniform(rng, 1, k - 1);
    const std::size_t n_neg = k - n_pos;
    const std::size_t min_e = ceil_log2(std::max(n_pos, n_neg));
    const std::size_t e = uniform(rng, min_e, std::max(min_e, opts.max_w));
    const std::size_t total = std::size_t{1} << e;
    const auto pos = composition(rng, total, n_pos);
    const auto neg = composition(rng, total, n_neg);
    for (std::size_t p = 0; p < n_pos; ++p) sys.set_entry(i, support[p], pos[p]);
    for (std::size_t p = 0; p < n_neg; ++p) sys.set_entry(i, support[n_pos + p], -neg[p]);
  }
  return sys;
}

SparseIntSystem random_unsolvable_g_system(Rng& rng, std::size_t max_m, std::size_t max_n, long max_abs) {
  if (max_m < 2) throw std::invalid_argument("need room for a dependent row");
  SparseIntSystem base;
  do {
    base = random_g_system(rng, max_m - 1, max_n, max_abs);
  } while (base.rows() < 1);

  const std::size_t m = base.rows() + 1;
  const std::size_t n = base.cols();
  SparseIntSystem sys(m, n, MatrixClass::G);
  for (std::size_t i = 1; i < m; ++i) sys.set_row(i, base.row(i));

  const std::size_t a = uniform(rng, 1, m - 1);
  const std::size_t b = uniform(rng, 1, m - 1);
  SparseRow dependent;
  bool summed = false;
  if (a != b && std::bernoulli_distribution(0.5)(rng)) {
    dependent = sys.row(a);
    for (const auto& [j, v] : sys.row(b)) dependent[j] += v;
    std::erase_if(dependent, [](const auto& kv) { return sgn(kv.second) == 0; });
    summed = !dependent.empty() && std::all_of(dependent.begin(), dependent.end(), [&](const auto& kv) {
      return abs(kv.second) <= max_abs;
    });
  }
  const bool negate = !summed && std::bernoulli_distribution(0.5)(rng);
  if (!summed) {
    dependent = sys.row(a);
    if (negate) {
      for (auto& [j, v] : dependent) v = -v;
    }
  }
  sys.set_row(m, dependent);

  // b = A x for an integer x, then push the dependent row off its consistent value.
  std::vector<BigInt> x(n);
  for (auto& xi : x) xi = std::uniform_int_distribution<long>(-5, 5)(rng);
  for (std::size_t i = 1; i <= m; ++i) {
    BigInt acc = 0;
    for (const auto& [j, v] : sys.row(i)) acc += v * x[j - 1];
    sys.set_rhs(i, acc);
  }
  sys.set_rhs(m, sys.rhs(m) + static_cast<long>(uniform(rng, 1, 3)));
  return sys;
}

RationalVector random_rational_vector(Rng& rng, std::size_t n, long max_num, long max_den) {
  RationalVector x(n);
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  for (auto& xi : x) {
    xi = Rational(num(rng), den(rng));
    xi.canonicalize();
  }
  return x;
}

}  // namespace mc2red

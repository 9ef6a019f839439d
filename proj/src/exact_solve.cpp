#include "mc2red/exact_solve.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace mc2red {

namespace {

using RatRow = std::map<std::size_t, Rational>;

class Eliminator {
 public:
  explicit Eliminator(const SparseIntSystem& sys)
      : rows_(sys.rows()), rhs_(sys.rows()), col_rows_(sys.cols() + 1) {
    for (std::size_t i = 0; i < sys.rows(); ++i) {
      for (const auto& [j, v] : sys.row(i + 1)) {
        rows_[i].emplace(j, Rational(v));
        col_rows_[j].insert(i);
      }
      rhs_[i] = Rational(sys.rhs()[i]);
      queue_.emplace(rows_[i].size(), i);
    }
  }

  SolveOutcome run(std::size_t n) {
    bool consistent = true;
    while (!queue_.empty()) {
      const std::size_t r = queue_.begin()->second;
      queue_.erase(queue_.begin());
      if (rows_[r].empty()) {
        if (sgn(rhs_[r]) != 0) consistent = false;
        continue;
      }
      const std::size_t pc = choose_column(r);
      for (const auto& [j, v] : rows_[r]) col_rows_[j].erase(r);
      const std::vector<std::size_t> targets(col_rows_[pc].begin(), col_rows_[pc].end());
      for (std::size_t other : targets) eliminate(other, r, pc);
      pivots_.emplace_back(r, pc);
    }

    SolveOutcome out;
    out.rank = pivots_.size();
    if (!consistent) return out;
    out.status = SolveStatus::Solvable;
    out.witness.assign(n, Rational(0));
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const auto& [r, pc] = *it;
      Rational acc = rhs_[r];
      for (const auto& [j, v] : rows_[r]) {
        if (j != pc) acc -= v * out.witness[j - 1];
      }
      out.witness[pc - 1] = acc / rows_[r].at(pc);
    }
    return out;
  }

 private:
  std::size_t choose_column(std::size_t r) const {
    std::size_t best = 0;
    std::size_t best_count = 0;
    for (const auto& [j, v] : rows_[r]) {
      const std::size_t c = col_rows_[j].size();
      if (best == 0 || c < best_count) {
        best = j;
        best_count = c;
      }
    }
    return best;
  }

  // rows_[target] -= (a_target / a_pivot) * rows_[pivot]
  void eliminate(std::size_t target, std::size_t pivot, std::size_t pc) {
    auto& row = rows_[target];
    queue_.erase({row.size(), target});
    const Rational factor = row.at(pc) / rows_[pivot].at(pc);
    for (const auto& [j, v] : rows_[pivot]) {
      auto [it, inserted] = row.try_emplace(j, 0);
      it->second -= factor * v;
      if (sgn(it->second) == 0) {
        row.erase(it);
        col_rows_[j].erase(target);
      } else if (inserted) {
        col_rows_[j].insert(target);
      }
    }
    rhs_[target] -= factor * rhs_[pivot];
    queue_.emplace(row.size(), target);
  }

  std::vector<RatRow> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::set<std::pair<std::size_t, std::size_t>> queue_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
};

}  // namespace

SolveOutcome exact_solve(const SparseIntSystem& sys) { return Eliminator(sys).run(sys.cols()); }

}  // namespace mc2red

#include "mc2red/gadget.hpp"

#include <stdexcept>
#include <string>

namespace mc2red {

std::size_t resolve_slot(const Mc2Gadget& g, Slot slot) {
  switch (slot) {
    case Slot::T: return g.t;
    case Slot::T1: return g.t_prime + 1;
    case Slot::T2: return g.t_prime + 2;
    case Slot::T3: return g.t_prime + 3;
    case Slot::T4: return g.t_prime + 4;
    case Slot::J1: return g.j1;
    case Slot::J2: return g.j2;
  }
  return 0;
}

std::size_t term_column(const Mc2Gadget& g, const GadgetTerm& term, std::size_t n_x) {
  const std::size_t v = resolve_slot(g, term.slot);
  return term.block == Block::X ? v : n_x + v;
}

BigInt gadget_coefficient(const Mc2Gadget& g, std::size_t eq, std::size_t column, std::size_t n_x) {
  const auto& e = kGadgetEquations.at(eq);
  long coeff = 0;
  for (std::size_t k = 0; k < e.size; ++k) {
    if (term_column(g, e.terms[k], n_x) == column) coeff += e.terms[k].coeff;
  }
  return coeff;
}

std::array<SparseRow, 8> emit_gadget(const Mc2Gadget& g, const BigInt& scale, std::size_t n_x) {
  if (sgn(scale) == 0) throw std::invalid_argument("gadget scale must be nonzero");
  for (Slot s : {Slot::T, Slot::T4, Slot::J1, Slot::J2}) {
    const std::size_t v = resolve_slot(g, s);
    if (v == 0 || v > n_x) {
      throw std::out_of_range("gadget variable " + std::to_string(v) + " outside X block [1, " +
                              std::to_string(n_x) + "]");
    }
  }
  std::array<SparseRow, 8> rows;
  for (std::size_t eq = 0; eq < 8; ++eq) {
    const auto& e = kGadgetEquations[eq];
    for (std::size_t k = 0; k < e.size; ++k) {
      auto& slot = rows[eq][term_column(g, e.terms[k], n_x)];
      slot += scale * e.terms[k].coeff;
    }
    std::erase_if(rows[eq], [](const auto& kv) { return sgn(kv.second) == 0; });
  }
  return rows;
}

}  // namespace mc2red

#pragma once

#include "mc2red/sparse_system.hpp"

#include <array>
#include <cstddef>
#include <cstdint>

namespace mc2red {

/// Eight 2-commodity equations enforcing 2 x_t = x_j1 + x_j2, using the
/// gadget-only variables x_{t'+1..t'+4} and y_{t'+1..t'+4}.
struct Mc2Gadget {
  std::size_t t = 0;
  std::size_t t_prime = 0;
  std::size_t j1 = 0;
  std::size_t j2 = 0;

  friend bool operator==(const Mc2Gadget&, const Mc2Gadget&) = default;
};

enum class Block : std::uint8_t { X, Y };
enum class Slot : std::uint8_t { T, T1, T2, T3, T4, J1, J2 };

struct GadgetTerm {
  Block block;
  Slot slot;
  int coeff;
};

struct GadgetEquation {
  std::array<GadgetTerm, 4> terms;
  std::uint8_t size;
};

// T1..T4 stand for t'+1..t'+4.
inline constexpr std::array<GadgetEquation, 8> kGadgetEquations = {{
    {{{{Block::X, Slot::T, 1}, {Block::X, Slot::T1, -1}}}, 2},
    {{{{Block::X, Slot::T2, 1}, {Block::X, Slot::J2, -1}}}, 2},
    {{{{Block::Y, Slot::T1, 1}, {Block::Y, Slot::T3, -1}}}, 2},
    {{{{Block::Y, Slot::T4, 1}, {Block::Y, Slot::T2, -1}}}, 2},
    {{{{Block::X, Slot::T3, 1}, {Block::X, Slot::J1, -1}}}, 2},
    {{{{Block::X, Slot::T, 1}, {Block::X, Slot::T4, -1}}}, 2},
    {{{{Block::X, Slot::T4, 1}, {Block::Y, Slot::T4, -1}, {Block::X, Slot::T3, -1}, {Block::Y, Slot::T3, 1}}}, 4},
    {{{{Block::X, Slot::T1, 1}, {Block::Y, Slot::T1, -1}, {Block::X, Slot::T2, -1}, {Block::Y, Slot::T2, 1}}}, 4},
}};

/// X-block variable index named by `slot`.
std::size_t resolve_slot(const Mc2Gadget& g, Slot slot);

/// Column of a term in a system whose X block has width n_x (y_v is column n_x + v).
std::size_t term_column(const Mc2Gadget& g, const GadgetTerm& term, std::size_t n_x);

/// Coefficient of `column` in gadget equation `eq` (0-based, 0..7).
BigInt gadget_coefficient(const Mc2Gadget& g, std::size_t eq, std::size_t column, std::size_t n_x);

/// The eight rows, each multiplied by `scale`. Throws std::invalid_argument for
/// scale == 0 and std::out_of_range if an X index exceeds n_x.
std::array<SparseRow, 8> emit_gadget(const Mc2Gadget& g, const BigInt& scale, std::size_t n_x);

}  // namespace mc2red

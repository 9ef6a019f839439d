#pragma once

#include "mc2red/big_int.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mc2red {

/// Sign bit plus fixed-width magnitude. Zero has two encodings (sign 0 or 1);
/// both decode to zero, and encoding always produces sign 0.
struct SignMagnitude {
  bool negative = false;
  /// Magnitude bits, most significant first, exactly `width` digits.
  std::vector<bool> magnitude;

  std::size_t width() const noexcept { return magnitude.size(); }
  /// Rendered as "<sign> <bits>", e.g. "1 10000".
  std::string to_string() const;

  friend bool operator==(const SignMagnitude&, const SignMagnitude&) = default;
};

/// Throws std::overflow_error if |z| >= 2^width.
SignMagnitude encode_sign_magnitude(const BigInt& z, std::size_t width);
BigInt decode_sign_magnitude(const SignMagnitude& sm);

}  // namespace mc2red

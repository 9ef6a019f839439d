#include "mc2red/sign_magnitude.hpp"

#include <stdexcept>

namespace mc2red {

std::string SignMagnitude::to_string() const {
  std::string out = negative ? "1 " : "0 ";
  for (bool b : magnitude) out.push_back(b ? '1' : '0');
  return out;
}

SignMagnitude encode_sign_magnitude(const BigInt& z, std::size_t width) {
  if (bit_length(z) > width) {
    throw std::overflow_error(mc2red::to_string(z) + " does not fit in " + std::to_string(width) +
                              " magnitude bits");
  }
  SignMagnitude sm;
  sm.negative = sgn(z) < 0;
  sm.magnitude.resize(width);
  for (std::size_t k = 1; k <= width; ++k) sm.magnitude[width - k] = bit_at(z, k);
  return sm;
}

BigInt decode_sign_magnitude(const SignMagnitude& sm) {
  BigInt mag = 0;
  for (bool b : sm.magnitude) {
    mag *= 2;
    if (b) mag += 1;
  }
  return sm.negative ? BigInt(-mag) : mag;
}

}  // namespace mc2red

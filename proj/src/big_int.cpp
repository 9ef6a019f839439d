#include "mc2red/big_int.hpp"

#include <stdexcept>

namespace mc2red {

std::size_t bit_length(const BigInt& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

bool bit_at(const BigInt& x, std::size_t k) {
  if (k == 0) return false;
  BigInt mag = abs(x);
  return mpz_tstbit(mag.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 1)) != 0;
}

BigInt pow2(std::size_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

bool is_power_of_two(const BigInt& x) {
  if (sgn(x) <= 0) return false;
  return mpz_popcount(x.get_mpz_t()) == 1;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

BigInt parse_big_int(const std::string& text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  // mpz_set_str rejects a leading '+'.
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace mc2red

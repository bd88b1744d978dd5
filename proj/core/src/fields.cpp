#include "khovanov/fields.hpp"

#include <stdexcept>
#include <string>

namespace kh {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

}  // namespace kh

#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace kh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Field policy for ℚ. Exact, GMP-backed.
class RationalField {
 public:
  using value_type = Rational;

  value_type from_int(std::int64_t v) const { return value_type(static_cast<long>(v)); }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

/// Field policy for ℤ/p with p prime and p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  bool is_zero(value_type v) const { return v == 0; }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace kh

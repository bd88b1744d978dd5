#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace kh {

/// Gaussian integer, used for exact evaluation of q-polynomials at q = √−1.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// Integer-coefficient Laurent polynomial in one named variable.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(char var = 'q') : var_(var) {}
  LaurentPoly(char var, std::map<int, std::int64_t> terms);

  static LaurentPoly monomial(char var, int exponent, std::int64_t coeff = 1);
  static LaurentPoly constant(char var, std::int64_t c) { return monomial(var, 0, c); }

  char variable() const noexcept { return var_; }
  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coeff(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;

  void add_term(int exponent, std::int64_t coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(std::int64_t c, const LaurentPoly& a);
  LaurentPoly operator-() const { return (-1) * *this; }

  /// Multiply by var^k.
  LaurentPoly shifted(int k) const;
  /// Substitute var → var^factor (factor may be negative, e.g. −1 for mirror).
  LaurentPoly substitute_power(int factor) const;
  /// Exact division; throws ConsistencyError when the remainder is nonzero.
  LaurentPoly divided_exactly_by(const LaurentPoly& divisor) const;

  std::int64_t evaluate(std::int64_t x) const;  // requires x ∈ {±1} when negative exponents are present
  GaussianInt evaluate_at_i() const;
  std::int64_t sum_abs_coefficients() const;

  /// Renders as signed `c*v^e` terms in ascending exponent, e.g. `-1*t^-1+3*t^0-1*t^1`.
  std::string to_string() const;
  /// Conventional notation, e.g. `-t^-1 + 3 - t`.
  std::string to_pretty_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

 private:
  char var_;
  std::map<int, std::int64_t> terms_;
};

/// Parses the Laurent grammar: signed terms `c*v^e`, where the coefficient,
/// `*`, and `^e` are each optional (`t`, `-3`, `2*t^-1`, `t^(2)` all accepted).
/// The variable is the first letter found (default `var` if none appears).
LaurentPoly parse_laurent(std::string_view text, char var = 't');

}  // namespace kh

#pragma once

#include <cstdint>
#include <string>

namespace kh {

/// Coefficients for a chain complex: ℚ, ℤ, or ℤ/p.
class CoefficientRing {
 public:
  enum class Kind { Rationals, Integers, PrimeField };

  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static CoefficientRing prime_field(std::uint32_t p);
  /// "Q", "Z", "Z2", "Z3", ...
  static CoefficientRing parse(const std::string& name);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != Kind::Integers; }
  std::string name() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

}  // namespace kh

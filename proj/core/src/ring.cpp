#include "khovanov/ring.hpp"

#include <stdexcept>

#include "khovanov/fields.hpp"

namespace kh {

CoefficientRing CoefficientRing::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("coefficient ring: " + std::to_string(p) + " is not prime");
  return CoefficientRing(Kind::PrimeField, p);
}

CoefficientRing CoefficientRing::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name == "Z") return integers();
  if (name.size() > 1 && name[0] == 'Z') {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(name.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == name.size() - 1 && p < (1ul << 31)) return prime_field(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown coefficient ring '" + name + "' (expected Q, Z, or Zp)");
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Integers: return "Z";
    case Kind::PrimeField: return "Z" + std::to_string(p_);
  }
  return "?";
}

}  // namespace kh

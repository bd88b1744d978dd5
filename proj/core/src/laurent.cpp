#include "khovanov/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

#include "khovanov/errors.hpp"

namespace kh {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ConsistencyError("LaurentPoly: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ConsistencyError("LaurentPoly: coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(char var, std::map<int, std::int64_t> terms) : var_(var) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(char var, int exponent, std::int64_t coeff) {
  LaurentPoly p(var);
  p.add_term(exponent, coeff);
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw InputError("LaurentPoly: zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw InputError("LaurentPoly: zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.var_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
  }
  return r;
}

LaurentPoly operator*(std::int64_t c, const LaurentPoly& a) {
  LaurentPoly r(a.var_);
  for (const auto& [e, x] : a.terms_) r.add_term(e, checked_mul(c, x));
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int factor) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.add_term(e * factor, c);
  return r;
}

LaurentPoly LaurentPoly::divided_exactly_by(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw ConsistencyError("LaurentPoly: division by zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quot(var_);
  const int dlead = divisor.max_exponent();
  const std::int64_t dcoeff = divisor.coeff(dlead);
  const int dspan = dlead - divisor.min_exponent();
  while (!rem.is_zero() && rem.max_exponent() - rem.min_exponent() >= dspan) {
    const int e = rem.max_exponent();
    const std::int64_t c = rem.coeff(e);
    if (c % dcoeff != 0) break;
    LaurentPoly step = monomial(var_, e - dlead, c / dcoeff);
    quot += step;
    rem -= step * divisor;
  }
  if (!rem.is_zero()) {
    throw ConsistencyError("LaurentPoly: inexact division of " + to_string() + " by " + divisor.to_string());
  }
  return quot;
}

std::int64_t LaurentPoly::evaluate(std::int64_t x) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && x != 1 && x != -1) throw InputError("LaurentPoly::evaluate: negative exponent at non-unit point");
    std::int64_t p = 1;
    const int n = std::abs(e);
    for (int k = 0; k < n; ++k) p = checked_mul(p, x);
    total = checked_add(total, checked_mul(c, p));
  }
  return total;
}

GaussianInt LaurentPoly::evaluate_at_i() const {
  GaussianInt z;
  for (const auto& [e, c] : terms_) {
    switch (((e % 4) + 4) % 4) {
      case 0: z.re = checked_add(z.re, c); break;
      case 1: z.im = checked_add(z.im, c); break;
      case 2: z.re = checked_add(z.re, -c); break;
      case 3: z.im = checked_add(z.im, -c); break;
    }
  }
  return z;
}

std::int64_t LaurentPoly::sum_abs_coefficients() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c < 0 ? -c : c);
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    out += std::to_string(c < 0 ? -c : c);
    out += '*';
    out += var_;
    out += '^';
    out += std::to_string(e);
  }
  return out;
}

std::string LaurentPoly::to_pretty_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const std::int64_t a = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a);
    out += var_;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text, char var) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](std::int64_t& out) -> bool {
    const std::size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    std::int64_t v = 0;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = checked_add(checked_mul(v, 10), text[pos] - '0');
      ++pos;
    }
    if (pos == digits) {
      pos = start;
      return false;
    }
    out = neg ? -v : v;
    return true;
  };

  // Determine the variable up front so that `3 + t` and `t + 3` agree.
  for (char ch : text) {
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      var = ch;
      break;
    }
  }

  LaurentPoly poly(var);
  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    first = false;

    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      read_int(coeff);
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    int exponent = 0;
    if (pos < text.size() && text[pos] == var) {
      ++pos;
      exponent = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        const bool paren = pos < text.size() && text[pos] == '(';
        if (paren) ++pos;
        std::int64_t e = 0;
        if (!read_int(e)) throw ParseError("expected integer exponent", pos);
        if (paren) {
          if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
          ++pos;
        }
        if (e < std::numeric_limits<int>::min() || e > std::numeric_limits<int>::max()) {
          throw ParseError("exponent out of range", pos);
        }
        exponent = static_cast<int>(e);
      }
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or variable", pos);
    }
    poly.add_term(exponent, checked_mul(sign, coeff));
  }
  return poly;
}

}  // namespace kh

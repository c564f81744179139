#include "apexis/spatial/laurent.hpp"

#include <cstdlib>

#include "apexis/error.hpp"

namespace apexis {

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coefficient, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exponent, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  out += o;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (auto [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPolynomial LaurentPolynomial::divide_exponents(int divisor) const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) {
    if (e % divisor != 0) {
      throw PreconditionError("exponent " + std::to_string(e) + " not divisible by " + std::to_string(divisor));
    }
    out.add_term(e / divisor, c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::negate_exponents() const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::string LaurentPolynomial::to_string(const std::string& variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t mag = std::llabs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += variable;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace apexis

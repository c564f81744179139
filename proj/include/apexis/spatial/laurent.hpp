#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace apexis {

/// Integer Laurent polynomial in one variable; zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(std::int64_t coefficient, int exponent);
  static LaurentPolynomial constant(std::int64_t c) { return monomial(c, 0); }

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial&) const = default;

  /// Substitutes x -> x^(1/divisor); throws PreconditionError if an exponent is not divisible.
  LaurentPolynomial divide_exponents(int divisor) const;
  LaurentPolynomial negate_exponents() const;

  /// e.g. "-t^-4 + t^-3 + t^-1"; "0" when zero.
  std::string to_string(const std::string& variable = "t") const;

 private:
  void add_term(int exponent, std::int64_t c);
  std::map<int, std::int64_t> terms_;
};

}  // namespace apexis

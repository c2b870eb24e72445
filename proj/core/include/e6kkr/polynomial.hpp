#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace e6kkr {

/// Exact Laurent polynomial in q with integer coefficients. Zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, Coefficient coefficient = 1);
  static LaurentPolynomial constant(Coefficient c) { return monomial(0, c); }

  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;
  const std::map<int, Coefficient>& terms() const { return terms_; }

  int min_exponent() const;
  int max_exponent() const;

  /// Value at q = 1.
  Coefficient at_one() const;
  bool has_nonnegative_coefficients() const;

  void add_term(int exponent, Coefficient coefficient);
  LaurentPolynomial shifted(int by) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other) { return *this = *this * other; }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Ascending exponents joined by " + ": "q^-2 + 3*q^-1 + 1". Zero is "0".
  std::string to_string() const;

 private:
  std::map<int, Coefficient> terms_;
};

/// Gaussian binomial [n choose k]_q; zero unless 0 <= k <= n.
LaurentPolynomial qbinom(int n, int k);

}  // namespace e6kkr

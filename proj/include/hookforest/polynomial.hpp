#ifndef HOOKFOREST_POLYNOMIAL_HPP
#define HOOKFOREST_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "hookforest/rational.hpp"

namespace hookforest {

// Univariate polynomial with exact rational coefficients, stored dense from
// the constant term up. No trailing zero is ever stored; the zero polynomial
// is the empty coefficient vector and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rat& constant);
  explicit Polynomial(long constant);

  static Polynomial from_coeffs(std::vector<Rat> coeffs);
  // a*x + b
  static Polynomial linear(const Rat& a, const Rat& b);
  static Polynomial x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Zero for any index past the stored degree.
  const Rat& coeff(int power) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat leading_coeff() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  bool operator==(const Polynomial& other) const = default;

  Polynomial scaled(const Rat& factor) const;
  Rat eval(const Rat& point) const;

  // Coefficient list as "p/q" strings, constant term first; ["0"] for zero.
  std::vector<std::string> coeff_strings() const;
  static Polynomial from_coeff_strings(const std::vector<std::string>& strings);

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& p, const Rat& factor);
Rat poly_eval(const Polynomial& p, const Rat& point);

}  // namespace hookforest

#endif

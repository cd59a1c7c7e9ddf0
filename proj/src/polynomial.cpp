#include "hookforest/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hookforest {

namespace {
const Rat kZero(0);
}

Polynomial::Polynomial(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(long constant) : Polynomial(Rat(constant)) {}

Polynomial Polynomial::from_coeffs(std::vector<Rat> coeffs) {
  Polynomial p;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

Polynomial Polynomial::linear(const Rat& a, const Rat& b) {
  return from_coeffs({b, a});
}

Polynomial Polynomial::x() { return from_coeffs({Rat(0), Rat(1)}); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& Polynomial::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rat Polynomial::leading_coeff() const {
  return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return from_coeffs(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
  return from_coeffs(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return from_coeffs(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = *this + other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Rat& factor) const {
  if (factor == 0) return Polynomial();
  std::vector<Rat> out = coeffs_;
  for (Rat& c : out) c *= factor;
  return from_coeffs(std::move(out));
}

Rat Polynomial::eval(const Rat& point) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

std::vector<std::string> Polynomial::coeff_strings() const {
  if (coeffs_.empty()) return {"0"};
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const Rat& c : coeffs_) out.push_back(rat_to_string(c));
  return out;
}

Polynomial Polynomial::from_coeff_strings(const std::vector<std::string>& strings) {
  std::vector<Rat> coeffs;
  coeffs.reserve(strings.size());
  for (const std::string& s : strings) coeffs.push_back(rat_from_string(s));
  return from_coeffs(std::move(coeffs));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const Rat& c = coeff(p);
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    Rat mag = first ? c : Rat(abs(c));
    first = false;
    if (p == 0 || mag != 1) out << rat_to_string(mag);
    if (p > 0) {
      if (mag != 1) out << "*";
      out << "x";
      if (p > 1) out << "^" << p;
    }
  }
  return out.str();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial poly_scale(const Polynomial& p, const Rat& factor) { return p.scaled(factor); }
Rat poly_eval(const Polynomial& p, const Rat& point) { return p.eval(point); }

}  // namespace hookforest

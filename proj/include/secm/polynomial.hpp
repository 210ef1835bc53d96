#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace secm {

/// Real polynomial in the monomial basis, coefficients in ascending order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients);

  static Polynomial constant(double c) { return Polynomial({c}); }
  /// x - c
  static Polynomial shifted_x(double c) { return Polynomial({-c, 1.0}); }

  double operator()(double x) const;  // Horner
  int degree() const;                 // -1 for the zero polynomial
  double leading() const;
  const std::vector<double>& coefficients() const { return c_; }
  double coefficient(int k) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, double s) { return p *= s; }
  friend Polynomial operator*(double s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  std::string to_string() const;

 private:
  void trim();
  std::vector<double> c_;
};

using PolynomialSequence = std::vector<Polynomial>;

}  // namespace secm

#include "secm/polynomial.hpp"

#include <algorithm>
#include <cstdio>

namespace secm {

Polynomial::Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coefficients) : c_(coefficients) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Polynomial::degree() const { return static_cast<int>(c_.size()) - 1; }

double Polynomial::leading() const { return c_.empty() ? 0.0 : c_.back(); }

double Polynomial::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0.0;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& v : c_) v *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.c_.empty() || rhs.c_.empty()) return {};
  std::vector<double> out(lhs.c_.size() + rhs.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  char buf[64];
  for (int k = degree(); k >= 0; --k) {
    const double v = c_[k];
    if (v == 0.0) continue;
    std::snprintf(buf, sizeof buf, "%s%.17g", out.empty() ? "" : (v < 0 ? " - " : " + "),
                  out.empty() ? v : std::abs(v));
    out += buf;
    if (k >= 1) out += "*x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace secm

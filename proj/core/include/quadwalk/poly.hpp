#pragma once

#include <complex>
#include <vector>

namespace quadwalk {

using Complex = std::complex<double>;

// Dense real-coefficient polynomial, ascending order (c[k] multiplies x^k).
struct Poly {
  std::vector<double> c;

  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {}

  int degree(double tol = 0.0) const {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
      if (std::abs(c[k]) > tol) return k;
    return -1;
  }

  double operator()(double x) const {
    double v = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) v = v * x + c[k];
    return v;
  }

  Complex operator()(const Complex& x) const {
    Complex v = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) v = v * x + c[k];
    return v;
  }

  Poly derivative() const {
    if (c.size() <= 1) return Poly{{0.0}};
    std::vector<double> d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    return Poly(std::move(d));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    std::vector<double> r(a.c.size() + b.c.size() - 1, 0.0);
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
    for (size_t k = 0; k < r.size(); ++k) {
      if (k < a.c.size()) r[k] += a.c[k];
      if (k < b.c.size()) r[k] -= b.c[k];
    }
    return Poly(std::move(r));
  }

  Poly scaled(double s) const {
    Poly r = *this;
    for (double& v : r.c) v *= s;
    return r;
  }

  // Synthetic division by (x - root); the remainder is p(root).
  Poly deflate(double root, double* remainder = nullptr) const {
    if (c.empty()) return Poly{{0.0}};
    std::vector<double> q(c.size() > 1 ? c.size() - 1 : 1, 0.0);
    double carry = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
      carry = c[k] + carry * root;
      q[k - 1] = carry;
    }
    if (remainder) *remainder = c[0] + carry * root;
    return Poly(std::move(q));
  }
};

}  // namespace quadwalk

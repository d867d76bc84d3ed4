#include "bex/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bex {

QuadRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  QuadRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n(x) and P'_n(x)
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n >= 1 required");
  QuadRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  const int half = (n + 1) / 2;
  double x = 0.0;
  for (int i = 0; i < half; ++i) {
    // Standard initial guesses for the largest roots, then walk down.
    if (i == 0)
      x = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    else if (i == 1)
      x -= 1.14 * std::pow(static_cast<double>(n), 0.426) / x;
    else if (i == 2)
      x = 1.86 * x - 0.86 * rule.nodes[n - 1];
    else if (i == 3)
      x = 1.91 * x - 0.91 * rule.nodes[n - 2];
    else
      x = 2.0 * x - rule.nodes[n - i + 1];
    double pp = 0.0;
    for (int it = 0; it < 200; ++it) {
      // Orthonormal Hermite recurrence to avoid overflow.
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = x * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(j / (j + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    const double w = 2.0 / (pp * pp);
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

double integrate_dyadic(const std::function<double(double)>& f, double upper, int levels) {
  static const QuadRule gl = gauss_legendre(16);
  double total = 0.0;
  double hi = upper;
  for (int k = 0; k < levels; ++k) {
    const double lo = (k + 1 == levels) ? 0.0 : hi * 0.5;
    const double c = 0.5 * (hi + lo), h = 0.5 * (hi - lo);
    double s = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * f(c + h * gl.nodes[i]);
    total += s * h;
    hi = lo;
    if (hi == 0.0) break;
  }
  return total;
}

}  // namespace bex

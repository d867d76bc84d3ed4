#pragma once

#include <functional>

#include "bex/core.hpp"

namespace bex {

struct QuadRule {
  Vec nodes;
  Vec weights;
};

// Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadRule gauss_legendre(int n);

// Gauss-Hermite rule for weight exp(-x^2) on the real line.
QuadRule gauss_hermite(int n);

// Integral over [0, upper] on a dyadic mesh refined towards 0, 16-point
// Gauss-Legendre per cell. Near machine precision for integrands that are
// smooth away from the origin.
double integrate_dyadic(const std::function<double(double)>& f, double upper, int levels = 60);

}  // namespace bex

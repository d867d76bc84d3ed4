#include "bex/funcspace.hpp"

#include <cmath>
#include <stdexcept>

namespace bex {

double conjugate_exponent(double p) {
  if (p < 1.0) throw std::invalid_argument("conjugate_exponent: p < 1");
  if (p == 1.0) return kInfExponent;
  if (is_inf(p)) return 1.0;
  return p / (p - 1.0);
}

FunctionSpace::FunctionSpace(MeasureSpace space, double p) : space_(std::move(space)), p_(p) {
  if (!(p >= 1.0)) throw std::invalid_argument("FunctionSpace: exponent must satisfy p >= 1");
}

double norm(const FunctionSpace& E, const Vec& f) {
  if (f.size() != E.atoms()) throw std::invalid_argument("norm: dimension mismatch");
  const double p = E.p();
  if (is_inf(p)) {
    double m = 0.0;
    for (double x : f) m = std::max(m, std::abs(x));
    return m;
  }
  const Vec& mu = E.space().weights();
  double s = 0.0;
  if (p == 1.0) {
    for (std::size_t a = 0; a < f.size(); ++a) s += std::abs(f[a]) * mu[a];
    return s;
  }
  if (p == 2.0) {
    for (std::size_t a = 0; a < f.size(); ++a) s += f[a] * f[a] * mu[a];
    return std::sqrt(s);
  }
  for (std::size_t a = 0; a < f.size(); ++a) s += std::pow(std::abs(f[a]), p) * mu[a];
  return std::pow(s, 1.0 / p);
}

FunctionSpace kothe_dual(const FunctionSpace& E) {
  return FunctionSpace(E.space(), conjugate_exponent(E.p()));
}

double pairing(const MeasureSpace& space, const Vec& e, const Vec& f) {
  if (e.size() != space.atoms() || f.size() != space.atoms())
    throw std::invalid_argument("pairing: dimension mismatch");
  double s = 0.0;
  for (std::size_t a = 0; a < e.size(); ++a) s += e[a] * f[a] * space.weight(a);
  return s;
}

}  // namespace bex

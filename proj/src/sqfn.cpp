#include "bex/sqfn.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "bex/quadrature.hpp"

namespace bex {

double square_function(const FunctionSpace& E, const std::vector<Vec>& es) {
  if (es.empty()) throw std::invalid_argument("square_function: empty list");
  const std::size_t n = es.front().size();
  Vec sq(n, 0.0);
  for (const auto& e : es) {
    if (e.size() != n) throw std::invalid_argument("square_function: length mismatch");
    for (std::size_t a = 0; a < n; ++a) sq[a] += e[a] * e[a];
  }
  for (auto& x : sq) x = std::sqrt(x);
  return norm(E, sq);
}

double krivine_ratio(const MatrixOperator& S, const std::vector<Vec>& es) {
  if (es.empty()) throw std::invalid_argument("krivine_ratio: empty list");
  const double denom_sq = square_function(S.source(), es);
  if (denom_sq <= 0.0) throw std::invalid_argument("krivine_ratio: all inputs are zero");
  std::vector<Vec> mapped;
  mapped.reserve(es.size());
  for (const auto& e : es) mapped.push_back(apply(S, e));
  const double s_norm = operator_norm(S).value;
  if (s_norm <= 0.0) return 0.0;
  return square_function(S.target(), mapped) / (s_norm * denom_sq);
}

double gaussian_moment_quadrature(double p) {
  if (p < 1.0) throw std::invalid_argument("gaussian_moment_quadrature: p >= 1 required");
  // E|gamma|^p = 2/sqrt(2 pi) * int_0^inf x^p e^{-x^2/2} dx; tail beyond 40
  // is below 1e-300.
  const double integral = integrate_dyadic(
      [p](double x) { return std::pow(x, p) * std::exp(-0.5 * x * x); }, 40.0);
  const double moment = 2.0 * integral / std::sqrt(2.0 * std::numbers::pi);
  return std::pow(moment, 1.0 / p);
}

double gaussian_moment(double p) {
  if (p < 1.0) throw std::invalid_argument("gaussian_moment: p >= 1 required");
  static std::map<double, double> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  const double closed =
      std::sqrt(2.0) * std::exp((std::lgamma((p + 1.0) / 2.0) - 0.5 * std::log(std::numbers::pi)) / p);
  const double quad = gaussian_moment_quadrature(p);
  if (std::abs(closed - quad) > 1e-10 * std::max(1.0, closed))
    throw std::logic_error("gaussian_moment: closed form and quadrature disagree");
  cache[p] = closed;
  return closed;
}

double mz_constant(double p1, double p2) {
  return std::max(gaussian_moment(p1) / gaussian_moment(p2), 1.0);
}

MzCheck mz_ratio_check(const MatrixOperator& S, const std::vector<Vec>& es, double p1, double p2,
                       double tol) {
  if (S.source().p() != p1 || S.target().p() != p2)
    throw std::invalid_argument("mz_ratio_check: exponent mismatch with spaces");
  MzCheck check;
  check.lhs = [&] {
    std::vector<Vec> mapped;
    mapped.reserve(es.size());
    for (const auto& e : es) mapped.push_back(apply(S, e));
    return square_function(S.target(), mapped);
  }();
  check.rhs = mz_constant(p1, p2) * operator_norm(S).value * square_function(S.source(), es);
  check.pass = check.lhs <= check.rhs + tol;
  return check;
}

}  // namespace bex

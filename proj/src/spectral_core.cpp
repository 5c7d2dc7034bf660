#include "fracdiff/spectral_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracdiff/gauss_legendre.hpp"
#include "fracdiff/util.hpp"

namespace fracdiff {

DomainSpec::DomainSpec(double L) : length(L) {
  if (!std::isfinite(L) || !(L > 0.0))
    throw std::invalid_argument("DomainSpec: length must be positive, got " +
                                std::to_string(L));
}

EigenSystem::EigenSystem(DomainSpec domain, int count) : domain_(domain) {
  if (count < 1)
    throw std::invalid_argument("EigenSystem: need at least one mode");
  lambda_.resize(count);
  for (int n = 1; n <= count; ++n) {
    double k = n * M_PI / domain_.length;
    lambda_[n - 1] = k * k;
  }
}

double EigenSystem::eigenvalue(int n) const {
  if (n < 1 || n > count())
    throw std::out_of_range("EigenSystem::eigenvalue: mode index " +
                            std::to_string(n));
  return lambda_[n - 1];
}

double EigenSystem::eigenfunction(int n, double x) const {
  if (n < 1 || n > count())
    throw std::out_of_range("EigenSystem::eigenfunction: mode index " +
                            std::to_string(n));
  double L = domain_.length;
  return std::sqrt(2.0 / L) * std::sin(n * M_PI * x / L);
}

EigenSystem build_interval_eigensystem(double length, int count) {
  return EigenSystem(DomainSpec(length), count);
}

std::vector<double> fractional_eigenvalues(const EigenSystem& eig, double gamma) {
  if (!(gamma > 0.0) || !(gamma <= 2.0))
    throw std::domain_error("fractional_eigenvalues: gamma must lie in (0,2]");
  std::vector<double> out(eig.count());
  for (int n = 1; n <= eig.count(); ++n)
    out[n - 1] = std::pow(eig.eigenvalue(n), 0.5 * gamma);
  return out;
}

ModalCoefficients project(const std::function<double(double)>& f,
                          const EigenSystem& eig, int quad_points) {
  const int N = eig.count();
  if (quad_points < 4)
    throw std::invalid_argument("project: quad_points too small");
  if (quad_points < 4 * N)
    warn("project: quad_points=" + std::to_string(quad_points) +
         " is below 4*modes=" + std::to_string(4 * N) +
         "; coefficients may alias");
  const int panels = 8;
  const int degree = std::max(16, quad_points / 8);
  const GlRule& rule = gl_rule(degree);
  const double L = eig.length();

  ModalCoefficients a;
  a.values.assign(N, 0.0);
  for (int p = 0; p < panels; ++p) {
    double pa = L * p / panels;
    double pb = L * (p + 1) / panels;
    double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
    for (int i = 0; i < degree; ++i) {
      double x = mid + half * rule.nodes[i];
      double w = half * rule.weights[i] * f(x);
      for (int n = 1; n <= N; ++n)
        a.values[n - 1] += w * eig.eigenfunction(n, x);
    }
  }
  return a;
}

std::vector<double> synthesize(const ModalCoefficients& a, const EigenSystem& eig,
                               const std::vector<double>& x_points) {
  if (a.count() != eig.count())
    throw std::invalid_argument("synthesize: coefficient/mode count mismatch");
  std::vector<double> out(x_points.size(), 0.0);
  for (size_t i = 0; i < x_points.size(); ++i)
    out[i] = synthesize_at(a, eig, x_points[i]);
  return out;
}

double synthesize_at(const ModalCoefficients& a, const EigenSystem& eig, double x) {
  if (a.count() != eig.count())
    throw std::invalid_argument("synthesize_at: coefficient/mode count mismatch");
  double acc = 0.0;
  for (int n = 1; n <= eig.count(); ++n)
    acc += a.values[n - 1] * eig.eigenfunction(n, x);
  return acc;
}

}  // namespace fracdiff

#pragma once

#include <functional>
#include <vector>

namespace fracdiff {

// Interval (0, L) with homogeneous Dirichlet conditions; the only domain
// shape the library supports.
struct DomainSpec {
  double length;
  explicit DomainSpec(double L);
};

// Dirichlet eigensystem of -d2/dx2 on (0,L): lambda_n = (n pi/L)^2,
// phi_n(x) = sqrt(2/L) sin(n pi x/L); mode indices are 1-based.
class EigenSystem {
 public:
  EigenSystem(DomainSpec domain, int count);
  int count() const { return static_cast<int>(lambda_.size()); }
  double length() const { return domain_.length; }
  const std::vector<double>& eigenvalues() const { return lambda_; }
  double eigenvalue(int n) const;
  double eigenfunction(int n, double x) const;

 private:
  DomainSpec domain_;
  std::vector<double> lambda_;
};

struct ModalCoefficients {
  std::vector<double> values;  // values[n-1] = (f, phi_n)
  int count() const { return static_cast<int>(values.size()); }
};

EigenSystem build_interval_eigensystem(double length, int count);

// lambda_n^{gamma/2}, the modal symbol of the spectral fractional Laplacian
// of order gamma in (0,2].
std::vector<double> fractional_eigenvalues(const EigenSystem& eig, double gamma);

// Modal projection by composite Gauss-Legendre quadrature; quad_points is the
// nominal total point budget and should be at least 4x the mode count.
ModalCoefficients project(const std::function<double(double)>& f,
                          const EigenSystem& eig, int quad_points);

std::vector<double> synthesize(const ModalCoefficients& a, const EigenSystem& eig,
                               const std::vector<double>& x_points);
double synthesize_at(const ModalCoefficients& a, const EigenSystem& eig, double x);

}  // namespace fracdiff

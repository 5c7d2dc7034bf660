#pragma once

#include <stdexcept>

namespace fracdiff {

// Raised when no evaluation branch can certify the requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter pair of E_{alpha,beta}; construction enforces 0 < alpha <= 2
// and beta > 0.
struct MLParams {
  double alpha;
  double beta;
  MLParams(double a, double b);
};

// E_{alpha,beta}(z) on the closed negative axis, absolute error <= 1e-12
// for |z| <= 1e8. Dispatches between a compensated power series, the
// spectral-density integral over (0,inf) (plus the conjugate pole pair for
// alpha > 1), and the large-|z| algebraic expansion; each branch certifies
// its own error bound and uncertifiable corners raise AccuracyError.
double ml_eval(const MLParams& p, double z);

// Per-mode relaxation factor E_{alpha,1}(-lambda t^alpha), alpha in (0,1].
double ml_relax(double alpha, double lambda, double t);

// d/dt ml_relax = -lambda t^{alpha-1} E_{alpha,alpha}(-lambda t^alpha); t > 0.
double ml_relax_deriv(double alpha, double lambda, double t);

namespace ml_detail {

// |z| ceiling below which the power series is certified at this alpha.
double taylor_limit(double alpha);

// Individual branches, exposed for the overlap-consistency tests.
double taylor(double alpha, double beta, double z, bool* certified = nullptr);
double asymptotic(double alpha, double beta, double z, bool* certified = nullptr);
double integral_branch(double alpha, double beta, double z);

}  // namespace ml_detail

}  // namespace fracdiff

#include "fracdiff/util.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace fracdiff {

namespace {
WarnHandler g_warn = [](const std::string& m) {
  std::fprintf(stderr, "[fracdiff] warning: %s\n", m.c_str());
};
}  // namespace

void set_warn_handler(WarnHandler h) { g_warn = std::move(h); }

void warn(const std::string& msg) {
  if (g_warn) g_warn(msg);
}

double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // exact: x = 2n + r, r in [-1,1]
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(M_PI * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double log_abs_rgamma(double x, int* sign) {
  if (x > 0.0) {
    if (sign) *sign = 1;
    return -std::lgamma(x);
  }
  // reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
  double s = sin_pi(x);
  if (s == 0.0) {
    if (sign) *sign = 0;
    return -std::numeric_limits<double>::infinity();
  }
  if (sign) *sign = (s > 0.0) ? 1 : -1;
  return std::log(std::abs(s) / M_PI) + std::lgamma(1.0 - x);
}

double rgamma(double x) {
  if (x > 0.0) {
    if (x > 170.0) {
      int sg;
      double lr = log_abs_rgamma(x, &sg);
      return sg * std::exp(lr);
    }
    return 1.0 / std::tgamma(x);
  }
  double s = sin_pi(x);
  if (s == 0.0) return 0.0;
  double one_minus = 1.0 - x;
  if (one_minus > 170.0) {
    int sg;
    double lr = log_abs_rgamma(x, &sg);
    return sg * std::exp(lr);
  }
  return s * std::tgamma(one_minus) / M_PI;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& v) {
  if (t.size() != v.size())
    throw std::invalid_argument("trapezoid: grid/value length mismatch");
  double acc = 0.0;
  for (size_t i = 1; i < t.size(); ++i)
    acc += 0.5 * (t[i] - t[i - 1]) * (v[i] + v[i - 1]);
  return acc;
}

double discrete_l2(const std::vector<double>& t, const std::vector<double>& v) {
  if (t.size() != v.size())
    throw std::invalid_argument("discrete_l2: grid/value length mismatch");
  double acc = 0.0;
  for (size_t i = 1; i < t.size(); ++i) {
    double m = 0.5 * (v[i] * v[i] + v[i - 1] * v[i - 1]);
    acc += (t[i] - t[i - 1]) * m;
  }
  return std::sqrt(acc);
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = a + (b - a) * i / (n - 1);
  x.back() = b;
  return x;
}

int thread_count() {
  static const int n = [] {
    const char* env = std::getenv("FRACDIFF_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) return 1;
    if (v > 64) return 64;
    return v;
  }();
  return n;
}

}  // namespace fracdiff

#include "fracdiff/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fracdiff {

namespace {

GlRule compute_rule(int n) {
  GlRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_n from the Chebyshev initial guess
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p1 = z;
      pp = n * (z * p1 - p0) / (z * z - 1.0);
      if (n == 1) pp = 1.0;
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    if (n == 1) w = 2.0;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

std::map<int, GlRule> g_cache;
std::mutex g_mutex;

}  // namespace

const GlRule& gl_rule(int n) {
  if (n < 1) throw std::invalid_argument("gl_rule: need n >= 1");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_cache.find(n);
  if (it == g_cache.end()) it = g_cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double gl_panel(const std::function<double(double)>& f, double a, double b, int n) {
  const GlRule& r = gl_rule(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
  return acc * half;
}

double gl_composite(const std::function<double(double)>& f, double a, double b,
                    int panels, int n) {
  if (panels < 1) throw std::invalid_argument("gl_composite: panels >= 1");
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    double pa = a + (b - a) * p / panels;
    double pb = a + (b - a) * (p + 1) / panels;
    acc += gl_panel(f, pa, pb, n);
  }
  return acc;
}

namespace {
double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double left = gl_panel(f, a, m, 15);
  double right = gl_panel(f, m, b, 15);
  if (std::abs(left + right - whole) < tol || depth <= 0) return left + right;
  return adapt(f, a, m, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, right, 0.5 * tol, depth - 1);
}
}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth) {
  if (!(b > a)) return 0.0;
  return adapt(f, a, b, gl_panel(f, a, b, 15), abs_tol, max_depth);
}

}  // namespace fracdiff

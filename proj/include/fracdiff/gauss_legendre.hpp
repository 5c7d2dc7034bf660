#pragma once

#include <functional>
#include <vector>

namespace fracdiff {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1],
// nodes in ascending order.
struct GlRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached rule lookup; thread-safe.
const GlRule& gl_rule(int n);

double gl_panel(const std::function<double(double)>& f, double a, double b, int n);

// p equal panels of an n-point rule each.
double gl_composite(const std::function<double(double)>& f, double a, double b,
                    int panels, int n);

// Bisection-adaptive integration built on 15-point panels; absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth = 30);

}  // namespace fracdiff

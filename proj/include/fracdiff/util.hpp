#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fracdiff {

// Non-fatal library diagnostics (aliasing, incompatible boundary data, ...)
// are routed through a replaceable handler; the default prints to stderr.
using WarnHandler = std::function<void(const std::string&)>;
void set_warn_handler(WarnHandler h);
void warn(const std::string& msg);

// sin(pi*x) / cos(pi*x) with exact period reduction, usable for large x.
double sin_pi(double x);
double cos_pi(double x);

// 1/Gamma(x) for any real x; zero at the poles x = 0, -1, -2, ...
double rgamma(double x);
// log|1/Gamma(x)| together with the sign of 1/Gamma(x) (0 at poles).
double log_abs_rgamma(double x, int* sign);

// Trapezoid rule on a (possibly nonuniform) grid.
double trapezoid(const std::vector<double>& t, const std::vector<double>& v);
// sqrt of the trapezoid integral of v^2: a discrete L2 norm over the grid span.
double discrete_l2(const std::vector<double>& t, const std::vector<double>& v);

std::vector<double> linspace(double a, double b, int n);

// Worker count for the optional parallel sections; reads FRACDIFF_THREADS
// once, defaults to 1.
int thread_count();

}  // namespace fracdiff

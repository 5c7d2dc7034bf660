#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fracdiff/spectral_core.hpp"

namespace fracdiff {

// Multi-term Caputo operator sum_j p_j d_t^{alpha_j}: orders strictly
// decreasing inside (0,1), coefficients positive.
struct OrderSpectrum {
  std::vector<double> alphas;
  std::vector<double> weights;
  OrderSpectrum(std::vector<double> alphas_in, std::vector<double> weights_in);
  int terms() const { return static_cast<int>(alphas.size()); }
};

// Continuous piecewise-linear order weight on [0,1]; nonnegative and not
// identically zero.
class WeightFunction {
 public:
  WeightFunction(std::vector<double> nodes, std::vector<double> values);
  static WeightFunction constant(double value, int segments = 4);
  // Triangular bump of given mass centered at `center` with the given
  // half-width, clipped to [0,1] and sampled on a fine uniform node grid.
  static WeightFunction hat(double center, double half_width, double mass,
                            int segments = 200);
  double operator()(double s) const;
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  double sup_distance(const WeightFunction& other) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
};

// Time grid 0 = t_0 < ... < t_K = T.
struct TimeGrid {
  std::vector<double> t;
  bool uniform = false;

  static TimeGrid make_uniform(double horizon, int steps);
  // t_j = T (j/K)^exponent, clustering points toward t = 0.
  static TimeGrid graded(double horizon, int steps, double exponent);
  // {0} followed by log-spaced points from t_min to T.
  static TimeGrid log_graded(double t_min, double horizon, int points_per_decade);

  int steps() const { return static_cast<int>(t.size()) - 1; }
  double horizon() const { return t.back(); }
};

struct BoundaryData {
  std::function<double(double)> left;
  std::function<double(double)> right;
  bool compact_support = false;  // claimed support strictly inside (0,T)
  bool zero = true;

  static BoundaryData none();
  static BoundaryData dirichlet(std::function<double(double)> l,
                                std::function<double(double)> r,
                                bool compact = false);
};

// Space-time solution produced by any solver path. Modal trajectories are
// kept so pointwise values anywhere in (0,L) come from exact synthesis
// rather than grid interpolation; for nonhomogeneous runs the linear lift is
// stored as boundary samples and added in closed form.
struct SolutionField {
  EigenSystem eig;
  TimeGrid grid;
  std::vector<double> x;
  std::vector<std::vector<double>> values;      // values[j][i] = u(x_i, t_j)
  std::vector<std::vector<double>> modal;       // modal[n-1][j]
  std::vector<double> lift_left, lift_right;    // boundary samples at t_j
  std::string provenance;

  double value_at(double xq, int time_index) const;
  double initial_value_at(double xq) const;
};

// Single-point time series h_j = u(x0, t_j); times lie inside (0,T].
struct ObservationSeries {
  double x0 = 0.0;
  std::vector<double> times;
  std::vector<double> values;
  std::string provenance;
};

// L1 convolution weights of the Caputo derivative on a grid. The kernel is
// integrated exactly against piecewise-linear interpolants, so
// D^alpha v(t_j) ~ sum_{k<j} b(j,k) (v_{k+1} - v_k); exact for linear v.
class L1Weights {
 public:
  L1Weights(double alpha, const TimeGrid& grid);
  double order() const { return alpha_; }
  double b(int j, int k) const;
  double leading(int j) const;  // b(j, j-1), the implicit-step coefficient
  // sum_{k<=j-2} b(j,k)(v_{k+1}-v_k)
  double history(const std::vector<double>& v, int j) const;
  // full operator sum_{k<j} b(j,k)(v_{k+1}-v_k)
  double apply(const std::vector<double>& v, int j) const;

 private:
  double alpha_;
  int K_;
  bool uniform_;
  std::vector<double> conv_;          // uniform grids: weight per gap
  std::vector<double> tri_;           // general grids: packed rows
  std::vector<std::size_t> row_;
};

L1Weights caputo_l1_weights(double alpha, const TimeGrid& grid);

// Mittag-Leffler-exact solvers (homogeneous boundary).
SolutionField solve_single_modal(double alpha, const ModalCoefficients& a,
                                 const EigenSystem& eig, const TimeGrid& grid,
                                 const std::vector<double>& x_points);
SolutionField solve_spacetime_modal(double alpha, double gamma,
                                    const ModalCoefficients& a,
                                    const EigenSystem& eig, const TimeGrid& grid,
                                    const std::vector<double>& x_points);

// Implicit L1 stepping of one modal equation
// sum_j p_j D^{alpha_j} u = -lambda u + f; unconditionally stable for
// lambda >= 0, p_j > 0.
std::vector<double> step_modal_multiterm(
    const OrderSpectrum& spec, double lambda, double a0, const TimeGrid& grid,
    const std::function<double(double)>* source = nullptr);

SolutionField solve_multi_modal(const OrderSpectrum& spec,
                                const ModalCoefficients& a,
                                const EigenSystem& eig, const TimeGrid& grid,
                                const std::vector<double>& x_points,
                                const BoundaryData& boundary = BoundaryData::none());

// Interior Gauss-Legendre discretization of the distributed operator:
// nodes alpha_k on (0,1), entries (alpha_k, w_k mu(alpha_k)); zero-weight
// nodes dropped.
OrderSpectrum distributed_spectrum(const WeightFunction& mu, int quad_order);

SolutionField solve_distributed_modal(const WeightFunction& mu, int quad_order,
                                      const ModalCoefficients& a,
                                      const EigenSystem& eig, const TimeGrid& grid,
                                      const std::vector<double>& x_points,
                                      const BoundaryData& boundary = BoundaryData::none());

// Linear lift for nonhomogeneous Dirichlet data: w(x,t) = g_l(t)(1-x/L) +
// g_r(t) x/L is harmonic in x, so the lifted problem keeps a zero elliptic
// term and picks up the modal source f_n = -(sum_j p_j D^{alpha_j}) w_n,
// evaluated with the same L1 weights the stepper uses.
struct LiftSystem {
  std::vector<double> left, right;              // g sampled at grid times
  std::vector<std::vector<double>> modal_lift;  // w_n(t_j)
  std::vector<std::vector<double>> modal_source;
};
LiftSystem lift_boundary(const BoundaryData& g, const EigenSystem& eig,
                         const TimeGrid& grid, const OrderSpectrum& op);

ObservationSeries observe(const SolutionField& field, double x0);

double series_norm(const ObservationSeries& a);
// Discrete L2(0,T) distance; the two series must share the grid.
double series_distance(const ObservationSeries& a, const ObservationSeries& b);

}  // namespace fracdiff

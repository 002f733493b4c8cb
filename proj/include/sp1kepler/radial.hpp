#pragma once

// Radial bound states of the Sp(1)-Kepler problem in three coordinate forms:
//   rho-form on the cone, measure rho^{4n-4} d rho,
//   t-form (t = rho^2), measure t^{2n} dt,
//   oscillator form on H^n after the twist, measure r^{4n-1} dr.
// Closed-form states are built from generalized Laguerre polynomials; the
// eigensolver reproduces the spectrum independently from a finite-difference
// discretisation of the t-equation.

#include "sp1kepler/spectral.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace sp1kepler::radial {

using spectral::ModelParams;

/// Generalized Laguerre polynomial L^a_m(x) by the three-term recurrence in m.
/// Returns 0 for m < 0.
double laguerre(double a, int m, double x);

/// d^order/dx^order L^a_m(x) = (-1)^order L^{a+order}_{m-order}(x).
double laguerre_derivative(double a, int m, double x, int order = 1);

/// State (k, l) of the model p: ell = l + sigma_bar/2, nu = k + ell + n - 1,
/// Laguerre index a = 2l + sigma_bar + 2n - 1 and degree m = k - 1.
/// Normalisation constants are fixed at construction by quadrature.
class RadialState {
 public:
  RadialState(const ModelParams& p, int k, int l);

  const ModelParams& params() const { return params_; }
  int k() const { return k_; }
  int l() const { return l_; }
  int level() const { return k_ - 1 + l_; }

  int twice_ell() const { return 2 * l_ + params_.sigma_bar; }
  double ell() const { return 0.5 * twice_ell(); }
  int twice_nu() const { return 2 * k_ + twice_ell() + 2 * params_.n - 2; }
  double nu() const { return 0.5 * twice_nu(); }
  int laguerre_index() const { return twice_ell() + 2 * params_.n - 1; }
  int laguerre_degree() const { return k_ - 1; }
  /// Degree of the harmonic on S^{4n-1} after the twist: 2l + sigma_bar.
  int oscillator_degree() const { return twice_ell(); }

  /// -1/(2 nu^2).
  spectral::Energy energy() const;
  /// 2I + sigma_bar + 2n.
  int oscillator_eigenvalue() const { return 2 * level() + params_.sigma_bar + 2 * params_.n; }

  double t_norm_constant() const { return c_t_; }
  double rho_norm_constant() const { return c_rho_; }
  double oscillator_norm_constant() const { return c_osc_; }
  double twist_constant() const { return c_twist_; }

 private:
  ModelParams params_;
  int k_;
  int l_;
  double c_t_ = 1.0;
  double c_rho_ = 1.0;
  double c_osc_ = 1.0;
  double c_twist_ = 1.0;
};

enum class Spacing { uniform, graded };

/// Strictly increasing positive sample points with the exponent of the radial
/// measure they are meant for (2n for t, 4n - 1 for r).
class RadialGrid {
 public:
  RadialGrid(std::vector<double> points, int weight_exponent, Spacing spacing);

  static RadialGrid uniform(double first, double last, std::size_t count, int weight_exponent);
  /// Geometric spacing between first and last.
  static RadialGrid graded(double first, double last, std::size_t count, int weight_exponent);

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  int weight_exponent() const { return weight_exponent_; }
  Spacing spacing() const { return spacing_; }

 private:
  std::vector<double> points_;
  int weight_exponent_;
  Spacing spacing_;
};

/// c t^ell L^a_m(2t/nu) exp(-t/nu); c = 1 or the L^2(t^{2n} dt) normaliser.
double radial_t(const RadialState& s, double t, bool normalized);

/// c rho^{2 ell + 5/2} L^a_m(2 rho^2/nu) exp(-rho^2/nu); c = 1 or the
/// L^2(rho^{4n-4} d rho) normaliser. Unnormalised, radial_t(rho^2) equals
/// radial_rho(rho) / rho^{5/2}.
double radial_rho(const RadialState& s, double rho, bool normalized);

/// max over the grid of |(L R)(t) - E R(t)| / max |R| for the t-equation
///   -1/(2 t^{2n}) d/dt t^{2n} d/dt R + (ell^2 + (2n-1) ell)/(2 t^2) R - coulomb R/t = E R,
/// with exact Laguerre derivatives and E = -1/(2 nu^2). `coulomb` other than 1
/// gives a perturbed operator for negative controls.
double kepler_residual(const RadialState& s, const RadialGrid& grid, double coulomb = 1.0);

/// Box length that contains the lowest `count` states of channel l with
/// negligible mass at the outer wall: 2 nu (nu + 10) for the highest of them.
double suggested_t_max(const ModelParams& p, int l, int count);

/// Lowest `count` eigenvalues of channel (l, sigma_bar) from the symmetric
/// tridiagonal discretisation of -u''/2 + [(ell(ell + 2n - 1) + n(n - 1))/(2t^2) - 1/t] u
/// with Dirichlet walls at t_max/grid_size and t_max.
/// Throws std::invalid_argument for grid_size < 500 or count outside 1..5,
/// std::runtime_error when an eigenfunction leaks onto the outer wall.
std::vector<double> eigensolve(const ModelParams& p, int l, int grid_size, double t_max, int count);

/// Number of negative eigenvalues of the same discretisation.
std::size_t count_bound_states(const ModelParams& p, int l, int grid_size, double t_max);

/// r^L L^{L+2n-1}_{k-1}(r^2) exp(-r^2/2), L = 2l + sigma_bar; normalised in
/// L^2(r^{4n-1} dr) on request.
double oscillator_profile(const RadialState& s, double r, bool normalized);

/// The twist c_I r^{-5/2} R~(sqrt(nu/2) r) of the normalised rho-form state,
/// with c_I fixed by norm preservation.
double twisted_radial(const RadialState& s, double r);

/// max |H f - (2I + sigma_bar + 2n) f| / max |f| over the grid, where
/// H f = -1/2 (f'' + (4n-1)/r f' - L(L + 4n - 2)/r^2 f) + r^2 f / 2.
double oscillator_residual(const RadialState& s, const RadialGrid& grid);

/// Least-squares eigenvalue sum(f H f) / sum(f f) over the grid.
double oscillator_eigenvalue_fit(const RadialState& s, const RadialGrid& grid);

using TestFunction = std::function<double(double)>;

/// exp(-r), r exp(-r^2/8), (1 + r)^{-4}.
std::vector<TestFunction> default_micz_test_functions();

struct MiczReport {
  int sigma_bar = 0;
  int max_level = 0;
  bool spectrum_exact = false;
  std::vector<double> operator_residuals;  // one per test function
  std::vector<double> centrifugal_fits;    // fitted coefficient of Phi/(2r^2)
  Rational centrifugal_expected;           // (sigma_bar/2)^2 + sigma_bar/2
  double tolerance = 1e-6;
  bool pass = false;
};

/// n = 2 only. (i) E_I equals -(1/2)/(I + 2 + mu)^2 with mu = sigma_bar/2 for
/// I <= max_level, exactly. (ii) For each test function Phi(r) on the r-grid,
/// the rho-form Hamiltonian of channel l applied to rho^{5/2} Phi(rho^2) and
/// conjugated back agrees with the five dimensional MICZ radial operator.
/// Throws std::invalid_argument when p.n != 2.
MiczReport micz_check(const ModelParams& p, int max_level, const std::vector<TestFunction>& test_functions,
                      const RadialGrid& r_grid, int l = 0, double tol = 1e-6);

/// Gram matrix of the normalised t-form states k = 1..k_max of channel l in
/// L^2(t^{2n} dt), row-major k_max x k_max. Throws std::invalid_argument for
/// k_max outside 1..8 and std::runtime_error when halving the quadrature
/// changes an entry by more than 1e-10 or the result is asymmetric.
std::vector<double> orthogonality_check(const ModelParams& p, int l, int k_max, int quadrature_points);

} // namespace sp1kepler::radial

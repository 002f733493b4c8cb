#include "sp1kepler/radial.hpp"

#include "sp1kepler/quadrature.hpp"
#include "sp1kepler/tridiagonal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sp1kepler::radial {

double laguerre(double a, int m, double x) {
  if (m < 0) return 0.0;
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 1.0 + a - x;
  for (int j = 1; j < m; ++j) {
    const double next = ((2.0 * j + 1.0 + a - x) * cur - (j + a) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_derivative(double a, int m, double x, int order) {
  if (order < 0) throw std::invalid_argument("laguerre_derivative: negative order");
  const double sign = order % 2 == 0 ? 1.0 : -1.0;
  return sign * laguerre(a + order, m - order, x);
}

namespace {

constexpr std::size_t kPanels = 32;
constexpr std::size_t kOrder = 16;

// Rough location of the bulk of x^{a+1} L^a_m(x)^2 e^{-x}.
double bulk_in_x(const RadialState& s) {
  return s.laguerre_index() + 1.0 + 2.0 * s.laguerre_degree();
}

double unnormalized_t(const RadialState& s, double t) {
  const double nu = s.nu();
  return std::pow(t, s.ell()) * laguerre(s.laguerre_index(), s.laguerre_degree(), 2.0 * t / nu) * std::exp(-t / nu);
}

double unnormalized_rho(const RadialState& s, double rho) {
  const double nu = s.nu();
  const double rho2 = rho * rho;
  return std::pow(rho, 2.0 * s.ell() + 2.5) * laguerre(s.laguerre_index(), s.laguerre_degree(), 2.0 * rho2 / nu) *
         std::exp(-rho2 / nu);
}

double unnormalized_osc(const RadialState& s, double r) {
  const double r2 = r * r;
  return std::pow(r, s.oscillator_degree()) *
         laguerre(s.oscillator_degree() + 2.0 * s.params().n - 1.0, s.laguerre_degree(), r2) * std::exp(-0.5 * r2);
}

template <class F>
double norm_constant(F&& f, double exponent, double scale) {
  const auto rule = quadrature::semi_infinite(scale, kPanels, kOrder);
  const double mass = rule.integrate([&](double x) {
    if (x <= 0.0 || !std::isfinite(x)) return 0.0;
    const double v = f(x);
    return v * v * std::pow(x, exponent);
  });
  return 1.0 / std::sqrt(mass);
}

void require_positive(double x, const char* who) {
  if (!(x > 0.0)) throw std::invalid_argument(std::string(who) + ": coordinate must be positive");
}

} // namespace

RadialState::RadialState(const ModelParams& p, int k, int l) : params_(p), k_(k), l_(l) {
  if (k < 1) throw std::invalid_argument("RadialState: k must be at least 1");
  if (l < 0) throw std::invalid_argument("RadialState: l must be non-negative");

  const int n = params_.n;
  const double t_scale = 0.5 * nu() * bulk_in_x(*this);
  c_t_ = norm_constant([this](double t) { return unnormalized_t(*this, t); }, 2.0 * n, t_scale);
  c_rho_ = norm_constant([this](double rho) { return unnormalized_rho(*this, rho); }, 4.0 * n - 4.0,
                         std::sqrt(t_scale));
  const double r_scale = std::sqrt(bulk_in_x(*this));
  c_osc_ = norm_constant([this](double r) { return unnormalized_osc(*this, r); }, 4.0 * n - 1.0, r_scale);

  const double alpha = std::sqrt(0.5 * nu());
  const double c_rho = c_rho_;
  c_twist_ = norm_constant(
      [this, alpha, c_rho](double r) { return c_rho * unnormalized_rho(*this, alpha * r) * std::pow(r, -2.5); },
      4.0 * n - 1.0, r_scale);
}

spectral::Energy RadialState::energy() const {
  const Rational nu_exact(twice_nu(), 2);
  Rational e = -Rational(1, 2) / (nu_exact * nu_exact);
  const double v = to_double(e);
  return {std::move(e), v};
}

// ---------------------------------------------------------------------------

RadialGrid::RadialGrid(std::vector<double> points, int weight_exponent, Spacing spacing)
    : points_(std::move(points)), weight_exponent_(weight_exponent), spacing_(spacing) {
  if (points_.empty()) throw std::invalid_argument("RadialGrid: no points");
  if (!(points_.front() > 0.0)) throw std::invalid_argument("RadialGrid: first point must be positive");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i] > points_[i - 1])) throw std::invalid_argument("RadialGrid: points must be strictly increasing");
}

RadialGrid RadialGrid::uniform(double first, double last, std::size_t count, int weight_exponent) {
  if (count < 2) throw std::invalid_argument("RadialGrid::uniform: need at least two points");
  std::vector<double> pts(count);
  const double h = (last - first) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) pts[i] = first + h * static_cast<double>(i);
  pts.back() = last;
  return {std::move(pts), weight_exponent, Spacing::uniform};
}

RadialGrid RadialGrid::graded(double first, double last, std::size_t count, int weight_exponent) {
  if (count < 2) throw std::invalid_argument("RadialGrid::graded: need at least two points");
  require_positive(first, "RadialGrid::graded");
  std::vector<double> pts(count);
  const double ratio = std::log(last / first) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) pts[i] = first * std::exp(ratio * static_cast<double>(i));
  pts.back() = last;
  return {std::move(pts), weight_exponent, Spacing::graded};
}

// ---------------------------------------------------------------------------

double radial_t(const RadialState& s, double t, bool normalized) {
  require_positive(t, "radial_t");
  return (normalized ? s.t_norm_constant() : 1.0) * unnormalized_t(s, t);
}

double radial_rho(const RadialState& s, double rho, bool normalized) {
  require_positive(rho, "radial_rho");
  return (normalized ? s.rho_norm_constant() : 1.0) * unnormalized_rho(s, rho);
}

namespace {

struct Jet {
  double value;
  double d1;
  double d2;
};

// Value and first two derivatives of t^ell L^a_m(beta t) exp(-gamma t) (t-form
// with beta = 2/nu, gamma = 1/nu), or of r^L L^b_m(r^2) exp(-r^2/2) (oscillator
// form), from exact Laguerre derivatives.
Jet kepler_jet(const RadialState& s, double t) {
  const double nu = s.nu();
  const double ell = s.ell();
  const double a = s.laguerre_index();
  const int m = s.laguerre_degree();
  const double x = 2.0 * t / nu;

  const double u = std::pow(t, ell);
  const double u1 = ell * std::pow(t, ell - 1.0);
  const double u2 = ell * (ell - 1.0) * std::pow(t, ell - 2.0);

  const double p = laguerre(a, m, x);
  const double p1 = (2.0 / nu) * laguerre_derivative(a, m, x, 1);
  const double p2 = (4.0 / (nu * nu)) * laguerre_derivative(a, m, x, 2);

  const double e = std::exp(-t / nu);
  const double e1 = -e / nu;
  const double e2 = e / (nu * nu);

  const double h = p * e;
  const double h1 = p1 * e + p * e1;
  const double h2 = p2 * e + 2.0 * p1 * e1 + p * e2;
  return {u * h, u1 * h + u * h1, u2 * h + 2.0 * u1 * h1 + u * h2};
}

Jet oscillator_jet(const RadialState& s, double r) {
  const double big_l = s.oscillator_degree();
  const double b = big_l + 2.0 * s.params().n - 1.0;
  const int m = s.laguerre_degree();
  const double r2 = r * r;

  const double u = std::pow(r, big_l);
  const double u1 = big_l * std::pow(r, big_l - 1.0);
  const double u2 = big_l * (big_l - 1.0) * std::pow(r, big_l - 2.0);

  const double q = laguerre(b, m, r2);
  const double q1 = laguerre_derivative(b, m, r2, 1);
  const double q2 = laguerre_derivative(b, m, r2, 2);
  const double p = q;
  const double p1 = 2.0 * r * q1;
  const double p2 = 2.0 * q1 + 4.0 * r2 * q2;

  const double e = std::exp(-0.5 * r2);
  const double e1 = -r * e;
  const double e2 = (r2 - 1.0) * e;

  const double h = p * e;
  const double h1 = p1 * e + p * e1;
  const double h2 = p2 * e + 2.0 * p1 * e1 + p * e2;
  return {u * h, u1 * h + u * h1, u2 * h + 2.0 * u1 * h1 + u * h2};
}

double apply_oscillator(const RadialState& s, double r, const Jet& f) {
  const double n = s.params().n;
  const double big_l = s.oscillator_degree();
  return -0.5 * (f.d2 + (4.0 * n - 1.0) / r * f.d1 - big_l * (big_l + 4.0 * n - 2.0) / (r * r) * f.value) +
         0.5 * r * r * f.value;
}

} // namespace

double kepler_residual(const RadialState& s, const RadialGrid& grid, double coulomb) {
  const double n = s.params().n;
  const double ell = s.ell();
  const double centrifugal = ell * ell + (2.0 * n - 1.0) * ell;
  const double e = s.energy().value;

  double worst = 0.0;
  double scale = 0.0;
  for (double t : grid.points()) {
    const Jet r = kepler_jet(s, t);
    const double lr = -0.5 * (r.d2 + 2.0 * n / t * r.d1) + centrifugal / (2.0 * t * t) * r.value - coulomb * r.value / t;
    worst = std::max(worst, std::abs(lr - e * r.value));
    scale = std::max(scale, std::abs(r.value));
  }
  return scale > 0.0 ? worst / scale : worst;
}

// ---------------------------------------------------------------------------

double suggested_t_max(const ModelParams& p, int l, int count) {
  const double nu = count + l + 0.5 * p.sigma_bar + p.n - 1.0;
  return 2.0 * nu * (nu + 10.0);
}

namespace {

tridiagonal::SymTridiagonal discretize(const ModelParams& p, int l, int grid_size, double t_max) {
  if (l < 0) throw std::invalid_argument("eigensolve: l must be non-negative");
  if (grid_size < 500) throw std::invalid_argument("eigensolve: grid_size must be at least 500");
  if (!(t_max > 0.0)) throw std::invalid_argument("eigensolve: t_max must be positive");

  const double ell = l + 0.5 * p.sigma_bar;
  const double n = p.n;
  const double centrifugal = 0.5 * (ell * (ell + 2.0 * n - 1.0) + n * (n - 1.0));

  const double t_min = t_max / grid_size;
  const double h = (t_max - t_min) / grid_size;
  const std::size_t interior = static_cast<std::size_t>(grid_size) - 1;

  tridiagonal::SymTridiagonal mat;
  mat.diag.resize(interior);
  mat.off.assign(interior - 1, -0.5 / (h * h));
  for (std::size_t j = 0; j < interior; ++j) {
    const double t = t_min + h * static_cast<double>(j + 1);
    mat.diag[j] = 1.0 / (h * h) + centrifugal / (t * t) - 1.0 / t;
  }
  return mat;
}

} // namespace

std::vector<double> eigensolve(const ModelParams& p, int l, int grid_size, double t_max, int count) {
  if (count < 1 || count > 5) throw std::invalid_argument("eigensolve: count must be in 1..5");
  const auto mat = discretize(p, l, grid_size, t_max);
  auto values = tridiagonal::lowest_eigenvalues(mat, static_cast<std::size_t>(count));

  // Probability in the outer 5% of the box; a converged bound state has
  // essentially none there.
  constexpr double kWallMassLimit = 1e-8;
  const std::size_t wall = mat.size() - mat.size() / 20;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto v = tridiagonal::eigenvector(mat, values[i]);
    double outer = 0.0;
    for (std::size_t j = wall; j < v.size(); ++j) outer += v[j] * v[j];
    if (outer > kWallMassLimit || values[i] >= 0.0) {
      throw std::runtime_error("eigensolve: t_max = " + std::to_string(t_max) + " too small, state " +
                               std::to_string(i + 1) + " reaches the outer wall");
    }
  }
  return values;
}

std::size_t count_bound_states(const ModelParams& p, int l, int grid_size, double t_max) {
  return tridiagonal::count_below(discretize(p, l, grid_size, t_max), 0.0);
}

// ---------------------------------------------------------------------------

double oscillator_profile(const RadialState& s, double r, bool normalized) {
  require_positive(r, "oscillator_profile");
  return (normalized ? s.oscillator_norm_constant() : 1.0) * unnormalized_osc(s, r);
}

double twisted_radial(const RadialState& s, double r) {
  require_positive(r, "twisted_radial");
  const double alpha = std::sqrt(0.5 * s.nu());
  return s.twist_constant() * radial_rho(s, alpha * r, true) * std::pow(r, -2.5);
}

double oscillator_residual(const RadialState& s, const RadialGrid& grid) {
  const double lambda = s.oscillator_eigenvalue();
  double worst = 0.0;
  double scale = 0.0;
  for (double r : grid.points()) {
    const Jet f = oscillator_jet(s, r);
    worst = std::max(worst, std::abs(apply_oscillator(s, r, f) - lambda * f.value));
    scale = std::max(scale, std::abs(f.value));
  }
  return scale > 0.0 ? worst / scale : worst;
}

double oscillator_eigenvalue_fit(const RadialState& s, const RadialGrid& grid) {
  double num = 0.0;
  double den = 0.0;
  for (double r : grid.points()) {
    const Jet f = oscillator_jet(s, r);
    num += f.value * apply_oscillator(s, r, f);
    den += f.value * f.value;
  }
  return num / den;
}

// ---------------------------------------------------------------------------

namespace {

// Eighth-order central differences.
constexpr std::array<double, 4> kD1 = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
constexpr std::array<double, 5> kD2 = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};

template <class F>
Jet finite_difference_jet(F&& f, double x, double h) {
  const double f0 = f(x);
  double d1 = 0.0;
  double d2 = kD2[0] * f0;
  for (int j = 1; j <= 4; ++j) {
    const double fp = f(x + j * h);
    const double fm = f(x - j * h);
    d1 += kD1[j - 1] * (fp - fm);
    d2 += kD2[j] * (fp + fm);
  }
  return {f0, d1 / h, d2 / (h * h)};
}

} // namespace

std::vector<TestFunction> default_micz_test_functions() {
  return {
      [](double r) { return std::exp(-r); },
      [](double r) { return r * std::exp(-r * r / 8.0); },
      [](double r) { return std::pow(1.0 + r, -4.0); },
  };
}

MiczReport micz_check(const ModelParams& p, int max_level, const std::vector<TestFunction>& test_functions,
                      const RadialGrid& r_grid, int l, double tol) {
  if (p.n != 2) throw std::invalid_argument("micz_check: the MICZ correspondence needs n = 2");
  if (max_level < 0) throw std::invalid_argument("micz_check: max_level must be non-negative");
  if (l < 0) throw std::invalid_argument("micz_check: l must be non-negative");

  MiczReport report;
  report.sigma_bar = p.sigma_bar;
  report.max_level = max_level;
  report.tolerance = tol;

  // (i) spectra, exact.
  const Rational mu(p.sigma_bar, 2);
  report.spectrum_exact = true;
  for (int level = 0; level <= max_level; ++level) {
    const Rational d = level + 2 + mu;
    const Rational micz = -Rational(1, 2) / (d * d);
    if (spectral::energy(p, level).exact != micz) report.spectrum_exact = false;
  }

  // (ii) operators.
  const double sb = p.sigma_bar;
  const double angular = to_double(rep::angular_eigenvalue(2, p.sigma_bar, l));
  report.centrifugal_expected = mu * mu + mu;
  constexpr double h = 1e-2;

  bool operators_ok = true;
  for (const auto& phi : test_functions) {
    const auto g = [&phi](double rho) { return std::pow(rho, 1.5) * phi(rho * rho); };

    double worst = 0.0;
    double scale = 0.0;
    double fit_num = 0.0;
    double fit_den = 0.0;
    for (double r : r_grid.points()) {
      const double rho = std::sqrt(r);
      const Jet gj = finite_difference_jet(g, rho, h * rho);
      const double psi = rho * gj.value;
      const double rho2 = rho * rho;
      const double h_psi =
          -1.0 / (8.0 * rho) * (gj.d2 + 4.0 / rho * gj.d1 - angular / rho2 * gj.value) +
          (sb * (sb + 2.0) + 6.0 * (2.0 - 7.0 / 8.0)) / (8.0 * rho2 * rho2) * psi - psi / rho2;
      const double conjugated = h_psi / std::pow(rho, 2.5);

      const Jet f = finite_difference_jet(phi, r, h * r);
      const double kinetic_and_coulomb = -0.5 * (f.d2 + 4.0 / r * f.d1) + angular / 4.0 / (2.0 * r * r) * f.value -
                                         f.value / r;
      const double micz = kinetic_and_coulomb + to_double(report.centrifugal_expected) / (2.0 * r * r) * f.value;

      worst = std::max(worst, std::abs(conjugated - micz));
      scale = std::max(scale, std::abs(micz));

      const double basis = f.value / (2.0 * r * r);
      fit_num += (conjugated - kinetic_and_coulomb) * basis;
      fit_den += basis * basis;
    }
    const double residual = scale > 0.0 ? worst / scale : worst;
    const double fit = fit_num / fit_den;
    report.operator_residuals.push_back(residual);
    report.centrifugal_fits.push_back(fit);
    const double expected = to_double(report.centrifugal_expected);
    if (!(residual < tol) || !(std::abs(fit - expected) < tol * std::max(1.0, expected))) operators_ok = false;
  }

  report.pass = report.spectrum_exact && operators_ok;
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> gram(const std::vector<RadialState>& states, const quadrature::Rule& rule, double weight_exponent) {
  const std::size_t k = states.size();
  std::vector<std::vector<double>> samples(k, std::vector<double>(rule.size()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double t = rule.nodes[q];
      samples[i][q] = t > 0.0 && std::isfinite(t) ? radial_t(states[i], t, true) : 0.0;
    }
  std::vector<double> w(rule.size());
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double t = rule.nodes[q];
    w[q] = t > 0.0 && std::isfinite(t) ? rule.weights[q] * std::pow(t, weight_exponent) : 0.0;
  }
  std::vector<double> g(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      double s = 0.0;
      for (std::size_t q = 0; q < rule.size(); ++q) s += (w[q] * samples[i][q]) * samples[j][q];
      g[i * k + j] = s;
    }
  return g;
}

} // namespace

std::vector<double> orthogonality_check(const ModelParams& p, int l, int k_max, int quadrature_points) {
  if (k_max < 1 || k_max > 8) throw std::invalid_argument("orthogonality_check: k_max must be in 1..8");
  if (quadrature_points < 64) throw std::invalid_argument("orthogonality_check: need at least 64 quadrature points");
  std::vector<RadialState> states;
  for (int k = 1; k <= k_max; ++k) states.emplace_back(p, k, l);

  const RadialState& widest = states.back();
  const double scale = 0.5 * widest.nu() * bulk_in_x(widest);
  const auto panels = std::max<std::size_t>(2, static_cast<std::size_t>(quadrature_points) / kOrder);
  const auto fine = gram(states, quadrature::semi_infinite(scale, panels, kOrder), 2.0 * p.n);
  const auto coarse = gram(states, quadrature::semi_infinite(scale, panels / 2, kOrder), 2.0 * p.n);

  constexpr double kResolution = 1e-10;
  const auto k = static_cast<std::size_t>(k_max);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (std::abs(fine[i * k + j] - fine[j * k + i]) > kResolution ||
          std::abs(fine[i * k + j] - coarse[i * k + j]) > kResolution) {
        throw std::runtime_error("orthogonality_check: quadrature under-resolved at " +
                                 std::to_string(quadrature_points) + " points");
      }
    }
  return fine;
}

} // namespace sp1kepler::radial

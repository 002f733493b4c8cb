#include "doctest.h"

#include "sp1kepler/radial.hpp"

#include <cmath>
#include <random>

using namespace sp1kepler;
using namespace sp1kepler::radial;

namespace {

// L^a_m(x) = sum_j (-1)^j binom(m + a, m - j) x^j / j!, with the generalized
// binomial written through Gamma.
// Explicit alternating sum evaluated exactly; a must be a half integer.
double laguerre_sum(double a, int m, double x) {
  const Rational alpha(static_cast<long>(std::lround(2 * a)), 2);
  const Rational xr(x);
  Rational s = 0;
  Rational power = 1;
  Rational factorial = 1;
  for (int j = 0; j <= m; ++j) {
    Rational binom = 1;
    for (int i = 1; i <= m - j; ++i) binom = binom * (alpha + j + i) / i;
    s += (j % 2 ? -1 : 1) * binom * power / factorial;
    power *= xr;
    factorial *= j + 1;
  }
  return to_double(s);
}

// int_0^inf t^{2n} R(t)^2 dt for the unnormalised t-form, from
//   int_0^inf x^{a+1} (L^a_m)^2 e^{-x} dx = Gamma(m + a + 1)/m! (2m + a + 1), x = 2t/nu.
double t_mass_closed_form(const RadialState& s) {
  const double a = s.laguerre_index();
  const int m = s.laguerre_degree();
  const double x_integral = std::exp(std::lgamma(m + a + 1.0) - std::lgamma(m + 1.0)) * (2.0 * m + a + 1.0);
  const double scale = 0.5 * s.nu();
  return std::pow(scale, 2.0 * s.params().n + 2.0 * s.ell() + 1.0) * x_integral;
}

// Plain composite Simpson on [0, b].
template <class F>
double simpson(F&& f, double b, int panels) {
  const double h = b / panels;
  // every integrand used here vanishes at the origin
  double s = f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

template <class F>
int sign_changes(F&& f, double lo, double hi, int samples) {
  int changes = 0;
  double prev = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double v = f(lo + (hi - lo) * i / samples);
    if (v == 0.0) continue;
    if ((v > 0) != (prev > 0)) ++changes;
    prev = v;
  }
  return changes;
}

} // namespace

TEST_CASE("laguerre examples") {
  for (double a : {0.0, 1.5, 7.0})
    for (double x : {0.0, 0.3, 4.0}) CHECK(laguerre(a, 0, x) == 1.0);
  CHECK(laguerre(2.0, 1, 1.0) == doctest::Approx(2.0));
  CHECK(laguerre(2.0, -1, 1.0) == 0.0);
}

TEST_CASE("laguerre recurrence agrees with the explicit sum") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> xs(0.0, 12.0);
  for (double a : {0.0, 3.0, 4.5, 9.0, 15.0})
    for (int m = 0; m <= 8; ++m)
      for (int s = 0; s < 10; ++s) {
        const double x = xs(rng);
        const double ref = laguerre_sum(a, m, x);
        CHECK(std::abs(laguerre(a, m, x) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
      }
}

TEST_CASE("laguerre derivatives") {
  for (double a : {3.0, 5.5})
    for (int m = 1; m <= 6; ++m)
      for (double x : {0.4, 2.0, 7.5}) {
        const double h = 1e-5;
        const double fd = (laguerre(a, m, x + h) - laguerre(a, m, x - h)) / (2 * h);
        CHECK(laguerre_derivative(a, m, x) == doctest::Approx(fd).epsilon(1e-7));
        const double fd2 = (laguerre(a, m, x + h) - 2 * laguerre(a, m, x) + laguerre(a, m, x - h)) / (h * h);
        CHECK(laguerre_derivative(a, m, x, 2) == doctest::Approx(fd2).epsilon(1e-4));
      }
  CHECK(laguerre_derivative(3.0, 2, 1.0, 3) == 0.0);
}

TEST_CASE("radial state bookkeeping") {
  const RadialState s(ModelParams(3, 1), 2, 1);
  CHECK(s.ell() == 1.5);
  CHECK(s.nu() == 5.5);
  CHECK(s.laguerre_index() == 8);
  CHECK(s.laguerre_degree() == 1);
  CHECK(s.level() == 2);
  CHECK(s.energy().exact == Rational(-2, 121));
  CHECK(s.energy().exact == spectral::energy(ModelParams(3, 1), 2).exact);
  CHECK(s.oscillator_eigenvalue() == 2 * 2 + 1 + 6);
  CHECK_THROWS_AS(RadialState(ModelParams(2, 0), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(RadialState(ModelParams(2, 0), 1, -1), std::invalid_argument);
}

TEST_CASE("grids") {
  const auto u = RadialGrid::uniform(0.1, 1.0, 10, 4);
  CHECK(u.size() == 10);
  CHECK(u.points().front() == 0.1);
  CHECK(u.points().back() == 1.0);
  CHECK(u.spacing() == Spacing::uniform);
  const auto g = RadialGrid::graded(0.01, 100.0, 5, 7);
  CHECK(g.points()[2] == doctest::Approx(1.0));
  CHECK(g.weight_exponent() == 7);
  CHECK_THROWS_AS(RadialGrid({0.0, 1.0}, 2, Spacing::uniform), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid({1.0, 1.0}, 2, Spacing::uniform), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid({}, 2, Spacing::uniform), std::invalid_argument);
}

TEST_CASE("t-form ground state is nodeless and exponential") {
  for (int sb = 0; sb <= 3; ++sb)
    for (int l = 0; l <= 3; ++l) {
      const RadialState s(ModelParams(2, sb), 1, l);
      CHECK(s.nu() == doctest::Approx(s.ell() + 2));
      for (double t : {0.5, 3.0, 11.0})
        CHECK(radial_t(s, t, false) == doctest::Approx(std::pow(t, s.ell()) * std::exp(-t / s.nu())));
    }
  CHECK_THROWS_AS(radial_t(RadialState(ModelParams(2, 0), 1, 0), 0.0, false), std::invalid_argument);
  CHECK_THROWS_AS(radial_rho(RadialState(ModelParams(2, 0), 1, 0), -1.0, false), std::invalid_argument);
}

TEST_CASE("node count is k - 1 in every coordinate form") {
  for (int n = 2; n <= 3; ++n)
    for (int sb = 0; sb <= 2; ++sb)
      for (int l = 0; l <= 2; ++l)
        for (int k = 1; k <= 5; ++k) {
          const RadialState s(ModelParams(n, sb), k, l);
          const double t_hi = 8.0 * s.nu() * s.nu();
          CHECK(sign_changes([&](double t) { return radial_t(s, t, true); }, 1e-3, t_hi, 20000) == k - 1);
          CHECK(sign_changes([&](double r) { return radial_rho(s, r, true); }, 1e-3, std::sqrt(t_hi), 20000) == k - 1);
          CHECK(sign_changes([&](double r) { return oscillator_profile(s, r, true); }, 1e-3, 12.0, 20000) == k - 1);
          CHECK(sign_changes([&](double r) { return twisted_radial(s, r); }, 1e-3, 12.0, 20000) == k - 1);
        }
}

TEST_CASE("normalisation constants match the closed form") {
  for (int n = 2; n <= 3; ++n)
    for (int sb = 0; sb <= 3; ++sb)
      for (int l = 0; l <= 3; ++l)
        for (int k = 1; k <= 6; ++k) {
          const RadialState s(ModelParams(n, sb), k, l);
          const double expected = 1.0 / std::sqrt(t_mass_closed_form(s));
          CHECK(std::abs(s.t_norm_constant() / expected - 1.0) < 1e-10);
          // half the mass in the rho measure: rho^{4n-4} d rho with t = rho^2
          CHECK(std::abs(s.rho_norm_constant() / (std::sqrt(2.0) * s.t_norm_constant()) - 1.0) < 1e-10);
        }
}

TEST_CASE("normalised states have unit norm under an independent quadrature") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int l = 0; l <= 2; ++l) {
        const RadialState s(ModelParams(n, 1), k, l);
        const double t_end = 60.0 * s.nu();
        const double t_norm = simpson([&](double t) { return std::pow(radial_t(s, t, true), 2) * std::pow(t, 2 * n); },
                                      t_end, 40000);
        CHECK(std::abs(t_norm - 1.0) < 1e-10);
        const double rho_norm = simpson(
            [&](double r) { return std::pow(radial_rho(s, r, true), 2) * std::pow(r, 4 * n - 4); }, std::sqrt(t_end), 40000);
        CHECK(std::abs(rho_norm - 1.0) < 1e-10);
        const double osc_norm = simpson(
            [&](double r) { return std::pow(oscillator_profile(s, r, true), 2) * std::pow(r, 4 * n - 1); }, 20.0, 40000);
        CHECK(std::abs(osc_norm - 1.0) < 1e-10);
        const double twist_norm = simpson(
            [&](double r) { return std::pow(twisted_radial(s, r), 2) * std::pow(r, 4 * n - 1); }, 20.0, 40000);
        CHECK(std::abs(twist_norm - 1.0) < 1e-10);
      }
}

TEST_CASE("t-form and rho-form agree") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> rhos(0.05, 6.0);
  const RadialState s(ModelParams(3, 2), 3, 1);
  for (int i = 0; i < 100; ++i) {
    const double rho = rhos(rng);
    const double lhs = radial_t(s, rho * rho, false);
    const double rhs = radial_rho(s, rho, false) / std::pow(rho, 2.5);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)));
    // normalised, each in its own measure
    CHECK(radial_rho(s, rho, true) / std::pow(rho, 2.5) ==
          doctest::Approx(std::sqrt(2.0) * radial_t(s, rho * rho, true)).epsilon(1e-12));
  }
  // leading power as rho -> 0
  const double r1 = radial_rho(s, 1e-4, false);
  const double r2 = radial_rho(s, 2e-4, false);
  CHECK(std::log2(r2 / r1) == doctest::Approx(2 * s.ell() + 2.5).epsilon(1e-6));
}

TEST_CASE("Kepler residuals") {
  const auto grid2 = RadialGrid::uniform(0.1, 30.0, 300, 4);
  CHECK(kepler_residual(RadialState(ModelParams(2, 0), 1, 0), grid2) < 1e-13);
  for (int n = 2; n <= 3; ++n) {
    const auto grid = RadialGrid::uniform(0.1, 30.0, 300, 2 * n);
    for (int sb = 0; sb <= 3; ++sb)
      for (int l = 0; l <= 3; ++l)
        for (int k = 1; k <= 5; ++k) {
          const RadialState s(ModelParams(n, sb), k, l);
          CHECK(kepler_residual(s, grid) < 1e-8);
          // doubled Coulomb term breaks the equation
          CHECK(kepler_residual(s, grid, 2.0) > 1e-3);
        }
  }
  // graded grids reaching further out
  const auto grid = RadialGrid::graded(0.05, 40.0, 200, 4);
  CHECK(kepler_residual(RadialState(ModelParams(2, 1), 2, 1), grid) < 1e-8);
}

TEST_CASE("oscillator profile and residuals") {
  const RadialState ground(ModelParams(2, 0), 1, 0);
  for (double r : {0.3, 1.0, 2.2}) CHECK(oscillator_profile(ground, r, false) == doctest::Approx(std::exp(-r * r / 2)));
  CHECK(ground.oscillator_eigenvalue() == 4);
  const auto g2 = RadialGrid::uniform(0.1, 6.0, 300, 7);
  CHECK(oscillator_residual(ground, g2) < 1e-14);

  for (int n = 2; n <= 3; ++n) {
    const auto grid = RadialGrid::uniform(0.1, 6.0, 300, 4 * n - 1);
    for (int sb = 0; sb <= 3; ++sb)
      for (int l = 0; l <= 3; ++l)
        for (int k = 1; k <= 5; ++k) {
          const RadialState s(ModelParams(n, sb), k, l);
          CHECK(oscillator_residual(s, grid) < 1e-8);
          const double fit = oscillator_eigenvalue_fit(s, grid);
          CHECK(std::lround(fit) == s.oscillator_eigenvalue());
          CHECK(std::abs(fit - s.oscillator_eigenvalue()) < 1e-8);
        }
  }
  CHECK_THROWS_AS(oscillator_profile(ground, 0.0, false), std::invalid_argument);
}

TEST_CASE("the twist is proportional to the oscillator profile") {
  const auto grid = RadialGrid::uniform(0.2, 5.0, 200, 7);
  for (int n = 2; n <= 3; ++n)
    for (int sb = 0; sb <= 3; ++sb)
      for (int l = 0; l <= 3; ++l)
        for (int k = 1; k <= 5; ++k) {
          const RadialState s(ModelParams(n, sb), k, l);
          double mean = 0.0;
          std::vector<double> q;
          for (double r : grid.points()) q.push_back(oscillator_profile(s, r, false) / twisted_radial(s, r));
          for (double x : q) mean += x;
          mean /= static_cast<double>(q.size());
          double var = 0.0;
          for (double x : q) var += (x - mean) * (x - mean);
          var /= static_cast<double>(q.size());
          CHECK(var / (mean * mean) < 1e-20);
          // with both sides normalised the constant is one
          CHECK(oscillator_profile(s, 1.3, true) / twisted_radial(s, 1.3) == doctest::Approx(1.0).epsilon(1e-10));
        }
}

TEST_CASE("eigensolver examples") {
  const auto v = eigensolve(ModelParams(2, 0), 0, 4000, 60.0, 1);
  CHECK(std::abs(v[0] / -0.125 - 1.0) < 1e-4);

  const ModelParams p(2, 2);
  const auto w = eigensolve(p, 1, 4000, suggested_t_max(p, 1, 1), 1);
  const double exact = spectral::energy_kl(p, {1, 1}).value;
  CHECK(exact == -1.0 / 32.0);
  CHECK(std::abs(w[0] / exact - 1.0) < 1e-4);
}

TEST_CASE("eigensolver errors") {
  const ModelParams p(2, 0);
  CHECK_THROWS_AS(eigensolve(p, 0, 499, 60.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(eigensolve(p, 0, 4000, 60.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(eigensolve(p, 0, 4000, 60.0, 6), std::invalid_argument);
  CHECK_THROWS_AS(eigensolve(p, -1, 4000, 60.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(eigensolve(p, 0, 4000, 10.0, 1), std::runtime_error);
  CHECK_THROWS_AS(eigensolve(p, 0, 4000, 60.0, 5), std::runtime_error);
}

TEST_CASE("eigensolver reproduces the spectrum") {
  for (int n = 2; n <= 3; ++n)
    for (int sb = 0; sb <= 3; ++sb)
      for (int l = 0; l <= 2; ++l) {
        const ModelParams p(n, sb);
        const auto v = eigensolve(p, l, 4000, suggested_t_max(p, l, 3), 3);
        for (int k = 1; k <= 3; ++k) {
          const double exact = spectral::energy_kl(p, {k, l}).value;
          CHECK(std::abs(v[static_cast<std::size_t>(k - 1)] / exact - 1.0) < 1e-4);
        }
      }
}

TEST_CASE("eigensolver converges at second order") {
  const ModelParams p(2, 1);
  for (int l : {0, 2}) {
    const double t_max = suggested_t_max(p, l, 3);
    const double exact = spectral::energy_kl(p, {1, l}).value;
    std::vector<double> err;
    for (int g : {2000, 4000, 8000}) err.push_back(std::abs(eigensolve(p, l, g, t_max, 1)[0] - exact));
    CHECK(err[1] < err[0]);
    CHECK(err[2] < err[1]);
    CHECK(std::log2(err[1] / err[2]) == doctest::Approx(2.0).epsilon(0.025));
  }
}

TEST_CASE("degenerate channels collapse") {
  const ModelParams p(2, 1);
  for (int level = 0; level <= 2; ++level) {
    std::vector<double> values;
    for (const auto& q : spectral::states_at_level(level)) {
      const auto v = eigensolve(p, q.l, 4000, suggested_t_max(p, q.l, q.k), q.k);
      values.push_back(v.back());
    }
    for (double x : values) CHECK(std::abs(x / values.front() - 1.0) < 1e-4);
  }
}

TEST_CASE("bound states accumulate at zero as the box grows") {
  const ModelParams p(2, 0);
  std::size_t prev = 0;
  for (double t_max : {50.0, 100.0, 200.0, 400.0}) {
    const std::size_t c = count_bound_states(p, 0, 4000, t_max);
    CHECK(c > prev);
    prev = c;
  }
}

TEST_CASE("MICZ correspondence") {
  const auto grid = RadialGrid::uniform(0.5, 10.0, 96, 4);
  const auto fns = default_micz_test_functions();
  for (int sb = 0; sb <= 6; ++sb) {
    const auto m = micz_check(ModelParams(2, sb), 20, fns, grid);
    CHECK(m.pass);
    CHECK(m.spectrum_exact);
    CHECK(m.centrifugal_expected == Rational(sb * sb, 4) + Rational(sb, 2));
    REQUIRE(m.operator_residuals.size() == 3);
    for (double r : m.operator_residuals) CHECK(r < 1e-6);
    for (double c : m.centrifugal_fits) CHECK(c == doctest::Approx(to_double(m.centrifugal_expected)).epsilon(1e-6));
  }
  // the identity holds in every angular channel
  CHECK(micz_check(ModelParams(2, 3), 5, fns, grid, 2).pass);
  CHECK_THROWS_AS(micz_check(ModelParams(3, 0), 5, fns, grid), std::invalid_argument);
}

TEST_CASE("MICZ spectra match exactly") {
  for (int sb = 0; sb <= 6; ++sb)
    for (int level = 0; level <= 20; ++level) {
      const Rational mu(sb, 2);
      const Rational d = level + 2 + mu;
      CHECK(spectral::energy(ModelParams(2, sb), level).exact == -Rational(1, 2) / (d * d));
    }
}

TEST_CASE("Gram matrices") {
  const auto g = orthogonality_check(ModelParams(2, 0), 0, 2, 512);
  CHECK(std::abs(g[0] - 1.0) < 1e-8);
  CHECK(std::abs(g[3] - 1.0) < 1e-8);
  CHECK(std::abs(g[1]) < 1e-8);
  for (int sb = 0; sb <= 2; ++sb)
    for (int l = 0; l <= 2; ++l) {
      const auto m = orthogonality_check(ModelParams(2, sb), l, 6, 1024);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(std::abs(m[i * 6 + j] - (i == j ? 1.0 : 0.0)) < 1e-7);
    }
  CHECK_THROWS_AS(orthogonality_check(ModelParams(2, 0), 0, 9, 512), std::invalid_argument);
  CHECK_THROWS_AS(orthogonality_check(ModelParams(2, 0), 0, 0, 512), std::invalid_argument);
  CHECK_THROWS_AS(orthogonality_check(ModelParams(2, 0), 0, 8, 64), std::runtime_error);
}

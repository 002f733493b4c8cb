#include "sp1kepler/commands.hpp"

#include "sp1kepler/geom.hpp"
#include "sp1kepler/radial.hpp"
#include "sp1kepler/rep.hpp"
#include "sp1kepler/spectral.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sp1kepler::cli {

using report::Check;
using report::Report;
using report::Value;
using spectral::ModelParams;

namespace {

Value big(long v) { return BigInt(v); }

std::string cell_name(std::initializer_list<std::pair<const char*, long>> labels) {
  std::string s;
  for (const auto& [k, v] : labels) {
    if (!s.empty()) s += " ";
    s += std::string(k) + "=" + std::to_string(v);
  }
  return s;
}

Check exact_check(std::string name, const BigInt& lhs, const BigInt& rhs) {
  return {std::move(name), lhs, rhs, std::nullopt, std::nullopt, lhs == rhs};
}

Check exact_check(std::string name, const Rational& lhs, const Rational& rhs) {
  return {std::move(name), lhs, rhs, std::nullopt, std::nullopt, lhs == rhs};
}

Check bound_check(std::string name, double residual, double tol) {
  return {std::move(name), std::monostate{}, std::monostate{}, residual, tol, residual < tol};
}

std::vector<int> pick(const std::vector<int>& given, std::vector<int> fallback) {
  return given.empty() ? fallback : given;
}

std::vector<int> range_to(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

Value join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// Table view of the checks, used by every verify report so csv output is useful.
void tabulate_checks(Report& r) {
  r.table.columns = {"check", "lhs", "rhs", "residual", "tolerance", "pass"};
  for (const auto& c : r.checks) {
    r.table.add_row({c.name, c.lhs, c.rhs, c.residual ? Value(*c.residual) : Value(),
                     c.tolerance ? Value(*c.tolerance) : Value(), c.pass});
  }
}

// ---------------------------------------------------------------------------
// verification targets

Report verify_spectrum(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3});
  const int sigma_max = s.sigma_max.value_or(3);
  const int lmax = s.lmax.value_or(2);
  const int count = s.kmax.value_or(3);
  const int grid = s.grid.value_or(4000);
  const double tol = s.tol.value_or(1e-4);
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("lmax", big(lmax));
  r.add_parameter("levels", big(count));
  r.add_parameter("grid", big(grid));
  for (int n : ns)
    for (int sb = 0; sb <= sigma_max; ++sb)
      for (int l = 0; l <= lmax; ++l) {
        const ModelParams p(n, sb);
        const auto values = radial::eigensolve(p, l, grid, radial::suggested_t_max(p, l, count), count);
        for (int k = 1; k <= count; ++k) {
          const double exact = spectral::energy_kl(p, {k, l}).value;
          const double numeric = values[static_cast<std::size_t>(k - 1)];
          const double rel = std::abs(numeric - exact) / std::abs(exact);
          r.add_check({"eigensolve " + cell_name({{"n", n}, {"sigma", sb}, {"l", l}, {"k", k}}), numeric, exact, rel,
                       tol, rel < tol});
        }
      }
  return r;
}

Report verify_collapse(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3, 4});
  const int sigma_max = s.sigma_max.value_or(6);
  const int total = s.kmax.value_or(12);
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("k_plus_l_max", big(total));
  for (int n : ns)
    for (int sb = 0; sb <= sigma_max; ++sb) {
      const ModelParams p(n, sb);
      for (int k = 1; k <= total; ++k)
        for (int l = 0; k + l <= total; ++l) {
          r.add_check(exact_check("energy_kl " + cell_name({{"n", n}, {"sigma", sb}, {"k", k}, {"l", l}}),
                                  spectral::energy_kl(p, {k, l}).exact, spectral::energy(p, k - 1 + l).exact));
        }
    }
  return r;
}

Report verify_dim_equality(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3, 4});
  const int kmax = s.kmax.value_or(12);
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("kmax", big(kmax));
  for (int n : ns)
    for (int k = 0; k <= kmax; ++k) {
      const auto d = spectral::dimension_equality_check(n, k);
      r.add_check(exact_check("dim-equality " + cell_name({{"n", n}, {"k", k}}), d.lhs, d.rhs));
    }
  return r;
}

Report verify_genfunc(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3, 4});
  const int kmax = s.kmax.value_or(12);
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("kmax", big(kmax));
  for (int n : ns) {
    const auto g = spectral::genfunc_check(n, kmax);
    for (int k = 0; k <= kmax; ++k) {
      const auto i = static_cast<std::size_t>(k);
      r.add_check(exact_check("coefficient " + cell_name({{"n", n}, {"k", k}}), g.coefficients[i], g.expected[i]));
    }
    const std::string tag = cell_name({{"n", n}});
    r.add_check({"times (1-t^2) equals double sum " + tag, g.folded_matches_double_sum, true, std::nullopt,
                 std::nullopt, g.folded_matches_double_sum});
    r.add_check({"double sum equals (1-t)^(-4n) (1-t^2) " + tag, g.double_sum_matches_closed, true, std::nullopt,
                 std::nullopt, g.double_sum_matches_closed});
    r.add_check({"division by (1-t^2) recovers binomials " + tag, g.divided_back_matches, true, std::nullopt,
                 std::nullopt, g.divided_back_matches});
  }
  return r;
}

Report verify_weyl_dims(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3, 4});
  const int sigma_max = s.sigma_max.value_or(6);
  const int lmax = s.lmax.value_or(6);
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("lmax", big(lmax));
  for (int n : ns)
    for (int sb = 0; sb <= sigma_max; ++sb)
      for (int l = 0; l <= lmax; ++l) {
        std::vector<long> w(static_cast<std::size_t>(n), 0);
        w[0] = l + sb;
        w[1] = l;
        r.add_check(exact_check("dim R_l " + cell_name({{"n", n}, {"sigma", sb}, {"l", l}}), rep::dim_R_l(n, sb, l),
                                rep::weyl_dim(rep::RootSystem::C(n), rep::HighestWeight::from_integers(w))));
      }
  return r;
}

Report verify_ktype_dims(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3});
  const int sigma_max = s.sigma_max.value_or(5);
  const int imax = s.imax.value_or(5);
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("imax", big(imax));
  for (int n : ns)
    for (int sb = 0; sb <= sigma_max; ++sb)
      for (int level = 0; level <= imax; ++level) {
        const auto k = spectral::ktype_dim_check(ModelParams(n, sb), level);
        r.add_check(exact_check("K-type " + cell_name({{"n", n}, {"sigma", sb}, {"I", level}}), k.u2n_dim, k.sp_sum));
      }
  return r;
}

Report verify_casimir(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, range_to(2, 5));
  const int sigma_max = s.sigma_max.value_or(8);
  const int lmax = s.lmax.value_or(8);
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("lmax", big(lmax));
  for (int n : ns)
    for (int sb = 0; sb <= sigma_max; ++sb) {
      const Rational sp1 = rep::casimir(rep::RootSystem::C(1), rep::HighestWeight::from_integers({sb}));
      for (int l = 0; l <= lmax; ++l) {
        std::vector<long> w(static_cast<std::size_t>(n), 0);
        w[0] = l + sb;
        w[1] = l;
        const Rational spn = rep::casimir(rep::RootSystem::C(n), rep::HighestWeight::from_integers(w));
        r.add_check(exact_check("Laplacian " + cell_name({{"n", n}, {"sigma", sb}, {"l", l}}),
                                rep::angular_eigenvalue(n, sb, l), 2 * (spn - sp1)));
      }
    }
  return r;
}

Report verify_residuals(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3});
  const int kmax = s.kmax.value_or(5);
  const int lmax = s.lmax.value_or(3);
  const int sigma_max = s.sigma_max.value_or(3);
  const double tol = s.tol.value_or(1e-8);
  const auto points = static_cast<std::size_t>(s.points.value_or(200));
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("kmax", big(kmax));
  r.add_parameter("lmax", big(lmax));
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("t_range", std::string("[0.1, 30]"));
  r.add_parameter("r_range", std::string("[0.1, 6]"));
  for (int n : ns) {
    const auto t_grid = radial::RadialGrid::uniform(0.1, 30.0, points, 2 * n);
    const auto r_grid = radial::RadialGrid::uniform(0.1, 6.0, points, 4 * n - 1);
    for (int sb = 0; sb <= sigma_max; ++sb)
      for (int l = 0; l <= lmax; ++l)
        for (int k = 1; k <= kmax; ++k) {
          const radial::RadialState st(ModelParams(n, sb), k, l);
          const std::string tag = cell_name({{"n", n}, {"sigma", sb}, {"l", l}, {"k", k}});
          r.add_check(bound_check("kepler residual " + tag, radial::kepler_residual(st, t_grid), tol));
          r.add_check(bound_check("oscillator residual " + tag, radial::oscillator_residual(st, r_grid), tol));
          const double fit = radial::oscillator_eigenvalue_fit(st, r_grid);
          const long rounded = std::lround(fit);
          const double off = std::abs(fit - static_cast<double>(rounded));
          r.add_check({"oscillator eigenvalue " + tag, BigInt(rounded), BigInt(st.oscillator_eigenvalue()), off, tol,
                       rounded == st.oscillator_eigenvalue() && off < tol});
        }
  }
  return r;
}

Report verify_twist(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3});
  const int kmax = s.kmax.value_or(5);
  const int lmax = s.lmax.value_or(3);
  const int sigma_max = s.sigma_max.value_or(3);
  const double tol = s.tol.value_or(1e-20);
  const auto points = static_cast<std::size_t>(s.points.value_or(200));
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("kmax", big(kmax));
  r.add_parameter("lmax", big(lmax));
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("r_range", std::string("[0.2, 5]"));
  for (int n : ns) {
    const auto grid = radial::RadialGrid::uniform(0.2, 5.0, points, 4 * n - 1);
    for (int sb = 0; sb <= sigma_max; ++sb)
      for (int l = 0; l <= lmax; ++l)
        for (int k = 1; k <= kmax; ++k) {
          const radial::RadialState st(ModelParams(n, sb), k, l);
          std::vector<double> ratio;
          for (double x : grid.points()) ratio.push_back(radial::oscillator_profile(st, x, true) / radial::twisted_radial(st, x));
          double mean = 0.0;
          for (double q : ratio) mean += q;
          mean /= static_cast<double>(ratio.size());
          double var = 0.0;
          for (double q : ratio) var += (q - mean) * (q - mean);
          var /= static_cast<double>(ratio.size());
          const std::string tag = cell_name({{"n", n}, {"sigma", sb}, {"l", l}, {"k", k}});
          r.add_check({"twist ratio variance " + tag, mean, std::monostate{}, var, tol, var < tol});
        }
  }
  return r;
}

Report verify_micz(const VerifySettings& s) {
  Report r;
  const int sigma_max = s.sigma_max.value_or(6);
  const int imax = s.imax.value_or(20);
  const double tol = s.tol.value_or(1e-6);
  const auto grid = radial::RadialGrid::uniform(0.5, 10.0, static_cast<std::size_t>(s.points.value_or(96)), 4);
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("imax", big(imax));
  r.add_parameter("r_range", std::string("[0.5, 10]"));
  const auto fns = radial::default_micz_test_functions();
  const std::vector<std::string> names = {"exp(-r)", "r exp(-r^2/8)", "(1+r)^-4"};
  for (int sb = 0; sb <= sigma_max; ++sb) {
    const ModelParams p(2, sb);
    const auto m = radial::micz_check(p, imax, fns, grid, 0, tol);
    const std::string tag = cell_name({{"sigma", sb}});
    r.add_check({"MICZ spectrum " + tag + " I<=" + std::to_string(imax), m.spectrum_exact, true, std::nullopt,
                 std::nullopt, m.spectrum_exact});
    for (std::size_t i = 0; i < fns.size(); ++i) {
      r.add_check(bound_check("MICZ operator " + tag + " phi=" + names[i], m.operator_residuals[i], tol));
      const double expected = to_double(m.centrifugal_expected);
      const double off = std::abs(m.centrifugal_fits[i] - expected);
      r.add_check({"MICZ centrifugal " + tag + " phi=" + names[i], m.centrifugal_fits[i], m.centrifugal_expected, off,
                   tol, off < tol * std::max(1.0, expected)});
    }
  }
  return r;
}

Report verify_metric(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3, 4});
  const int samples = s.samples.value_or(1000);
  const double tol = s.tol.value_or(1e-12);
  constexpr double kRatioTol = 1e-13;
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("samples", big(samples));
  std::mt19937_64 rng(s.seed);
  for (int n : ns) {
    const auto nn = static_cast<std::size_t>(n);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) worst = std::max(worst, geom::metric_identity_residual(geom::TangentSample::random(nn, rng)));
    r.add_check(bound_check("metric identity max residual " + cell_name({{"n", n}}), worst, tol));

    double ratio_dev = 0.0;
    double polar_dev = 0.0;
    double last_ratio = 2.0;
    for (int i = 0; i < samples; ++i) {
      const auto a = qlinalg::random_vector(nn - 1, rng);
      const auto b = qlinalg::random_vector(nn - 1, rng);
      const auto same = geom::quotient_factor_check(a, a);
      last_ratio = same.sp_n / same.sphere;
      ratio_dev = std::max(ratio_dev, std::abs(last_ratio - 2.0));
      const auto mixed = geom::quotient_factor_check(a, b);
      polar_dev = std::max(polar_dev, std::abs(mixed.sp_n - 2.0 * mixed.sphere) / (a.norm() * b.norm()));
    }
    r.add_check({"Sp(n) vs sphere metric ratio " + cell_name({{"n", n}}), last_ratio, 2.0, ratio_dev, kRatioTol,
                 ratio_dev < kRatioTol});
    r.add_check(bound_check("Sp(n) vs sphere inner products " + cell_name({{"n", n}}), polar_dev, kRatioTol));
  }
  return r;
}

Report verify_ostar(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2, 3});
  const int samples = s.samples.value_or(100);
  const double tol = s.tol.value_or(geom::kMembershipTol);
  const int weight_nmax = 6;
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("samples", big(samples));
  r.add_parameter("weight_double_nmax", big(weight_nmax));
  std::mt19937_64 rng(s.seed);
  for (int n : ns) {
    const auto nn = static_cast<std::size_t>(n);
    double worst_u = 0.0;
    for (int i = 0; i < samples; ++i)
      worst_u = std::max(worst_u, geom::ostar_deviation(geom::embed_u2n(geom::random_unitary(2 * nn, rng))));
    r.add_check(bound_check("U(2n) images in O*(4n) " + cell_name({{"n", n}}), worst_u, tol));

    double worst_sp = 0.0;
    int members = 0;
    for (int i = 0; i < samples; ++i) {
      const auto m = qlinalg::random_symplectic(nn, rng);
      const geom::ComplexMatrix c(2 * nn, qlinalg::complexify(m));
      worst_sp = std::max(worst_sp, geom::ostar_deviation(geom::embed_u2n(c)));
      members += geom::sp_n_in_ostar(m, tol) ? 1 : 0;
    }
    r.add_check({"Sp(n) images in O*(4n) " + cell_name({{"n", n}}), big(members), big(samples), worst_sp, tol,
                 members == samples && worst_sp < tol});
  }

  for (int n = 1; n <= weight_nmax; ++n) {
    std::vector<int> image;
    bool rule = true;
    bool phases = true;
    for (int i = 1; i <= 2 * n; ++i) {
      int solutions = 0;
      int found = 0;
      for (int j = 2 * n + 1; j <= 4 * n; ++j)
        if (std::abs(j - i - 2 * n) == n) {
          ++solutions;
          found = j;
        }
      const int bar = geom::weight_double(i, n);
      rule = rule && solutions == 1 && found == bar;
      image.push_back(bar);

      std::vector<geom::Complex> d(2 * static_cast<std::size_t>(n), 1.0);
      const geom::Complex phase = std::polar(1.0, 0.3 + 0.1 * i);
      d[static_cast<std::size_t>(i - 1)] = phase;
      const auto a = geom::ComplexMatrix::diagonal(d);
      const auto e = geom::embed_u2n(a);
      const auto u = geom::embed_u2n_unitary_form(a);
      const auto at = static_cast<std::size_t>(bar - 1);
      phases = phases && std::abs(e(at, at) - std::conj(phase)) < 1e-15 && std::abs(u(at, at) - phase) < 1e-15;
    }
    std::sort(image.begin(), image.end());
    bool onto = true;
    for (int j = 0; j < 2 * n; ++j) onto = onto && image[static_cast<std::size_t>(j)] == 2 * n + 1 + j;
    const std::string tag = cell_name({{"n", n}});
    r.add_check({"weight_double unique solution " + tag, rule, true, std::nullopt, std::nullopt, rule});
    r.add_check({"weight_double bijective onto 2n+1..4n " + tag, onto, true, std::nullopt, std::nullopt, onto});
    r.add_check({"weight_double phase placement " + tag, phases, true, std::nullopt, std::nullopt, phases});
  }
  return r;
}

Report verify_schur(const VerifySettings& s) {
  Report r;
  const int sigma_max = s.sigma_max.value_or(10);
  const int points = s.points.value_or(256);
  const double tol = s.tol.value_or(1e-6);
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("points", big(points));
  for (int a = 0; a <= sigma_max; ++a) {
    const double norm = rep::schur_norm(a, points);
    r.add_check({"Schur norm " + cell_name({{"sigma", a}}), norm, 1.0, std::abs(norm - 1.0), tol,
                 std::abs(norm - 1.0) < tol});
  }
  double worst = 0.0;
  for (int a = 0; a <= sigma_max; ++a)
    for (int b = a + 1; b <= sigma_max; ++b) worst = std::max(worst, std::abs(rep::character_inner(a, b, points)));
  r.add_check(bound_check("max cross-character inner product", worst, tol));
  return r;
}

Report verify_orthonormality(const VerifySettings& s) {
  Report r;
  const auto ns = pick(s.n, {2});
  const int sigma_max = s.sigma_max.value_or(2);
  const int lmax = s.lmax.value_or(2);
  const int kmax = s.kmax.value_or(6);
  const int points = s.points.value_or(1024);
  const double tol = s.tol.value_or(1e-7);
  r.add_parameter("n", join_ints(ns));
  r.add_parameter("sigma_max", big(sigma_max));
  r.add_parameter("lmax", big(lmax));
  r.add_parameter("kmax", big(kmax));
  r.add_parameter("points", big(points));
  for (int n : ns)
    for (int sb = 0; sb <= sigma_max; ++sb)
      for (int l = 0; l <= lmax; ++l) {
        const auto g = radial::orthogonality_check(ModelParams(n, sb), l, kmax, points);
        double dev = 0.0;
        const auto k = static_cast<std::size_t>(kmax);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) dev = std::max(dev, std::abs(g[i * k + j] - (i == j ? 1.0 : 0.0)));
        r.add_check(bound_check("Gram deviation " + cell_name({{"n", n}, {"sigma", sb}, {"l", l}}), dev, tol));
      }
  return r;
}

const std::map<std::string, std::function<Report(const VerifySettings&)>>& registry() {
  static const std::map<std::string, std::function<Report(const VerifySettings&)>> m = {
      {"spectrum", verify_spectrum},
      {"collapse", verify_collapse},
      {"dim-equality", verify_dim_equality},
      {"genfunc", verify_genfunc},
      {"weyl-dims", verify_weyl_dims},
      {"ktype-dims", verify_ktype_dims},
      {"casimir", verify_casimir},
      {"residuals", verify_residuals},
      {"twist", verify_twist},
      {"micz", verify_micz},
      {"metric", verify_metric},
      {"ostar", verify_ostar},
      {"schur", verify_schur},
      {"orthonormality", verify_orthonormality},
  };
  return m;
}

} // namespace

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> names = {
      "spectrum", "collapse", "dim-equality", "genfunc", "weyl-dims", "ktype-dims", "casimir",
      "residuals", "twist", "micz", "metric", "ostar", "schur", "orthonormality",
  };
  return names;
}

Report verify(const std::string& target, const VerifySettings& s) {
  const auto& m = registry();
  const auto it = m.find(target);
  if (it == m.end()) throw std::invalid_argument("unknown verify target '" + target + "'");
  Report r = it->second(s);
  r.command = "verify " + target;
  r.seed = s.seed;
  tabulate_checks(r);
  return r;
}

Report verify_all(const VerifySettings& s) {
  Report r;
  r.command = "verify all";
  r.seed = s.seed;
  r.add_parameter("targets", big(static_cast<long>(verify_targets().size())));
  for (const auto& t : verify_targets()) {
    // Range overrides only make sense per target; `all` always uses the defaults.
    VerifySettings defaults;
    defaults.seed = s.seed;
    for (auto c : registry().at(t)(defaults).checks) {
      c.name = t + ": " + c.name;
      r.add_check(std::move(c));
    }
  }
  tabulate_checks(r);
  return r;
}

// ---------------------------------------------------------------------------
// front end

namespace {

struct Common {
  std::string format = "text";
  std::uint64_t seed = 7;
  std::optional<double> tol;
  bool timestamp = false;
};

struct ModelArgs {
  int n = 2;
  int sigma = 0;
};

void add_model(CLI::App* app, ModelArgs& m) {
  app->add_option("--n", m.n, "quaternionic dimension n >= 2")->capture_default_str();
  app->add_option("--sigma", m.sigma, "highest weight sigma_bar >= 0 of the Sp(1) irrep")->capture_default_str();
}

std::string now_utc() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Report spectrum_report(const ModelArgs& m, int imax) {
  const ModelParams p(m.n, m.sigma);
  Report r;
  r.command = "spectrum";
  r.add_parameter("n", big(m.n));
  r.add_parameter("sigma", big(m.sigma));
  r.add_parameter("imax", big(imax));
  r.table.columns = {"I", "E_exact", "E", "degeneracy"};
  for (int level = 0; level <= imax; ++level) {
    const auto lr = spectral::level_report(p, level);
    r.table.add_row({big(level), lr.energy.exact, lr.energy.value, lr.degeneracy});
  }
  return r;
}

Report degeneracy_report(const ModelArgs& m, int imax) {
  const ModelParams p(m.n, m.sigma);
  Report r;
  r.command = "degeneracy";
  r.add_parameter("n", big(m.n));
  r.add_parameter("sigma", big(m.sigma));
  r.add_parameter("imax", big(imax));
  r.table.columns = {"I", "degeneracy", "terms"};
  for (int level = 0; level <= imax; ++level) {
    std::string terms;
    for (int l = 0; l <= level; ++l) terms += (l ? "+" : "") + rep::dim_R_l(m.n, m.sigma, l).str();
    r.table.add_row({big(level), spectral::degeneracy(p, level), terms});
  }
  return r;
}

Report ktype_report(const ModelArgs& m, int imax) {
  const ModelParams p(m.n, m.sigma);
  Report r;
  r.command = "ktype";
  r.add_parameter("n", big(m.n));
  r.add_parameter("sigma", big(m.sigma));
  r.add_parameter("imax", big(imax));
  r.add_parameter("sp1_irrep_dim", big(m.sigma + 1));
  r.add_parameter("paired_module_weight", spectral::module_weight(p).str());
  r.table.columns = {"I", "E_exact", "ktype_weight", "shifted_weight", "u2n_dim", "sp_sum", "pass"};
  for (int level = 0; level <= imax; ++level) {
    const auto k = spectral::ktype_dim_check(p, level);
    r.table.add_row({big(level), spectral::energy(p, level).exact, spectral::ktype_weight(p, level).str(),
                     k.shifted_weight.str(), k.u2n_dim, k.sp_sum, k.pass});
    r.add_check(exact_check("K-type I=" + std::to_string(level), k.u2n_dim, k.sp_sum));
  }
  return r;
}

struct WaveArgs {
  int k = 1;
  int l = 0;
  std::string form = "t";
  double from = 0.1;
  double to = 10.0;
  int points = 50;
  bool normalized = false;
};

Report wavefunction_report(const ModelArgs& m, const WaveArgs& w) {
  const radial::RadialState st(ModelParams(m.n, m.sigma), w.k, w.l);
  if (!(w.from > 0.0) || !(w.to > w.from)) throw std::invalid_argument("wavefunction: need 0 < from < to");
  if (w.points < 2) throw std::invalid_argument("wavefunction: need at least two points");
  Report r;
  r.command = "wavefunction";
  r.add_parameter("n", big(m.n));
  r.add_parameter("sigma", big(m.sigma));
  r.add_parameter("k", big(w.k));
  r.add_parameter("l", big(w.l));
  r.add_parameter("form", w.form);
  r.add_parameter("normalized", w.normalized);
  r.add_parameter("energy", st.energy().exact);
  const auto grid = radial::RadialGrid::uniform(w.from, w.to, static_cast<std::size_t>(w.points), 1);
  std::function<double(double)> f;
  if (w.form == "t") {
    f = [&](double x) { return radial::radial_t(st, x, w.normalized); };
  } else if (w.form == "rho") {
    f = [&](double x) { return radial::radial_rho(st, x, w.normalized); };
  } else if (w.form == "oscillator") {
    f = [&](double x) { return radial::oscillator_profile(st, x, w.normalized); };
  } else {
    f = [&](double x) { return radial::twisted_radial(st, x); };
  }
  r.table.columns = {"x", "value"};
  for (double x : grid.points()) r.table.add_row({x, f(x)});
  return r;
}

struct SweepArgs {
  int kmax = 5;
  int lmax = 3;
  double from = 0.1;
  double to = 30.0;
  int points = 200;
};

Report residual_report(const std::string& which, const ModelArgs& m, const SweepArgs& a, double tol) {
  const ModelParams p(m.n, m.sigma);
  if (!(a.from > 0.0) || !(a.to > a.from)) throw std::invalid_argument("residual: need 0 < from < to");
  if (a.points < 2) throw std::invalid_argument("residual: need at least two points");
  Report r;
  r.command = "residual " + which;
  r.add_parameter("n", big(m.n));
  r.add_parameter("sigma", big(m.sigma));
  r.add_parameter("kmax", big(a.kmax));
  r.add_parameter("lmax", big(a.lmax));
  r.add_parameter("from", a.from);
  r.add_parameter("to", a.to);
  r.add_parameter("points", big(a.points));
  const bool kepler = which == "kepler";
  const auto grid =
      radial::RadialGrid::uniform(a.from, a.to, static_cast<std::size_t>(a.points), kepler ? 2 * m.n : 4 * m.n - 1);
  if (kepler) {
    r.table.columns = {"k", "l", "I", "E_exact", "residual", "pass"};
  } else {
    r.table.columns = {"k", "l", "I", "eigenvalue", "fitted", "residual", "pass"};
  }
  for (int l = 0; l <= a.lmax; ++l)
    for (int k = 1; k <= a.kmax; ++k) {
      const radial::RadialState st(p, k, l);
      const std::string tag = cell_name({{"k", k}, {"l", l}});
      if (kepler) {
        const double res = radial::kepler_residual(st, grid);
        r.table.add_row({big(k), big(l), big(st.level()), st.energy().exact, res, res < tol});
        r.add_check(bound_check("kepler residual " + tag, res, tol));
      } else {
        const double res = radial::oscillator_residual(st, grid);
        const double fit = radial::oscillator_eigenvalue_fit(st, grid);
        r.table.add_row({big(k), big(l), big(st.level()), big(st.oscillator_eigenvalue()), fit, res, res < tol});
        r.add_check(bound_check("oscillator residual " + tag, res, tol));
      }
    }
  return r;
}

struct EigenArgs {
  int l = 0;
  int grid = 4000;
  std::optional<double> t_max;
  int count = 3;
};

Report eigensolve_report(const ModelArgs& m, const EigenArgs& e, double tol) {
  const ModelParams p(m.n, m.sigma);
  const double t_max = e.t_max.value_or(radial::suggested_t_max(p, e.l, e.count));
  Report r;
  r.command = "eigensolve";
  r.add_parameter("n", big(m.n));
  r.add_parameter("sigma", big(m.sigma));
  r.add_parameter("l", big(e.l));
  r.add_parameter("grid", big(e.grid));
  r.add_parameter("t_max", t_max);
  r.add_parameter("count", big(e.count));
  const auto values = radial::eigensolve(p, e.l, e.grid, t_max, e.count);
  r.table.columns = {"k", "I", "E_numeric", "E_exact", "relative_error", "pass"};
  for (int k = 1; k <= e.count; ++k) {
    const auto exact = spectral::energy_kl(p, {k, e.l});
    const double num = values[static_cast<std::size_t>(k - 1)];
    const double rel = std::abs(num - exact.value) / std::abs(exact.value);
    r.table.add_row({big(k), big(k - 1 + e.l), num, exact.exact, rel, rel < tol});
    r.add_check({"eigenvalue k=" + std::to_string(k), num, exact.value, rel, tol, rel < tol});
  }
  return r;
}

Report micz_report(int sigma, int imax, int l, double tol) {
  const ModelParams p(2, sigma);
  const auto grid = radial::RadialGrid::uniform(0.5, 10.0, 96, 4);
  const auto m = radial::micz_check(p, imax, radial::default_micz_test_functions(), grid, l, tol);
  const std::vector<std::string> names = {"exp(-r)", "r exp(-r^2/8)", "(1+r)^-4"};
  Report r;
  r.command = "micz";
  r.add_parameter("sigma", big(sigma));
  r.add_parameter("mu", Rational(sigma, 2));
  r.add_parameter("imax", big(imax));
  r.add_parameter("l", big(l));
  r.add_parameter("centrifugal_expected", m.centrifugal_expected);
  r.table.columns = {"test_function", "operator_residual", "centrifugal_fit"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    r.table.add_row({names[i], m.operator_residuals[i], m.centrifugal_fits[i]});
    r.add_check(bound_check("operator phi=" + names[i], m.operator_residuals[i], tol));
  }
  r.add_check({"spectrum I<=" + std::to_string(imax), m.spectrum_exact, true, std::nullopt, std::nullopt,
               m.spectrum_exact});
  r.add_check({"MICZ report", m.pass, true, std::nullopt, std::nullopt, m.pass});
  return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quaternionic Kepler problems with Sp(1) symmetry: spectra, dimensions, wavefunctions and verification sweeps", "sp1kepler"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", common.seed, "seed for randomised checks")->capture_default_str();
  app.add_option("--tol", common.tol, "override the default tolerance of every check");
  app.add_flag("--timestamp", common.timestamp, "record the UTC time in the report");

  ModelArgs model;
  int imax = 5;

  auto* spectrum = app.add_subcommand("spectrum", "energy levels E_I with degeneracies");
  add_model(spectrum, model);
  spectrum->add_option("--imax", imax, "largest principal number (-1 for an empty table)")
      ->check(CLI::Range(-1, 100000))
      ->capture_default_str();

  auto* degeneracy = app.add_subcommand("degeneracy", "degeneracy of each level as a sum of Sp(n) dimensions");
  add_model(degeneracy, model);
  degeneracy->add_option("--imax", imax, "largest principal number")->check(CLI::Range(-1, 100000))->capture_default_str();

  auto* ktype = app.add_subcommand("ktype", "U(2n) K-types of each energy eigenspace");
  add_model(ktype, model);
  ktype->add_option("--imax", imax, "largest principal number")->check(CLI::Range(-1, 100000))->capture_default_str();

  WaveArgs wave;
  auto* wavefunction = app.add_subcommand("wavefunction", "sample a radial wavefunction");
  add_model(wavefunction, model);
  wavefunction->add_option("--k", wave.k, "radial quantum number k >= 1")->capture_default_str();
  wavefunction->add_option("--l", wave.l, "angular label l >= 0")->capture_default_str();
  wavefunction->add_option("--form", wave.form, "t, rho, oscillator or twist")
      ->check(CLI::IsMember({"t", "rho", "oscillator", "twist"}))
      ->capture_default_str();
  wavefunction->add_option("--from", wave.from, "first sample point")->capture_default_str();
  wavefunction->add_option("--to", wave.to, "last sample point")->capture_default_str();
  wavefunction->add_option("--points", wave.points, "number of samples")->capture_default_str();
  wavefunction->add_flag("--normalized", wave.normalized, "apply the normalisation constant");

  SweepArgs sweep;
  auto* residual = app.add_subcommand("residual", "closed-form states against their radial equations");
  residual->require_subcommand(1);
  for (const char* which : {"kepler", "oscillator"}) {
    auto* sub = residual->add_subcommand(which);
    add_model(sub, model);
    sub->add_option("--kmax", sweep.kmax, "largest k")->capture_default_str();
    sub->add_option("--lmax", sweep.lmax, "largest l")->capture_default_str();
    sub->add_option("--from", sweep.from, "first grid point")->capture_default_str();
    sub->add_option("--to", sweep.to, "last grid point")->capture_default_str();
    sub->add_option("--points", sweep.points, "grid size")->capture_default_str();
  }

  EigenArgs eig;
  auto* eigensolve = app.add_subcommand("eigensolve", "finite-difference spectrum of one channel");
  add_model(eigensolve, model);
  eigensolve->add_option("--l", eig.l, "angular label l")->capture_default_str();
  eigensolve->add_option("--grid", eig.grid, "number of finite-difference intervals")->capture_default_str();
  eigensolve->add_option("--tmax", eig.t_max, "box length (default scales with the highest level)");
  eigensolve->add_option("--count", eig.count, "number of lowest eigenvalues")->capture_default_str();

  int micz_l = 0;
  int micz_imax = 20;
  auto* micz = app.add_subcommand("micz", "n = 2 against the five dimensional MICZ-Kepler problem");
  micz->add_option("--sigma", model.sigma)->capture_default_str();
  micz->add_option("--imax", micz_imax, "largest level in the spectrum comparison")->capture_default_str();
  micz->add_option("--l", micz_l, "angular label for the operator check")->capture_default_str();

  VerifySettings vs;
  std::optional<int> v_kmax, v_lmax, v_sigma, v_imax, v_samples, v_points, v_grid;
  auto* verify_cmd = app.add_subcommand("verify", "exact and numerical identity checks");
  verify_cmd->require_subcommand(1);
  std::vector<std::string> targets = verify_targets();
  targets.emplace_back("all");
  for (const auto& t : targets) {
    auto* sub = verify_cmd->add_subcommand(t);
    sub->add_option("--n", vs.n, "values of n (repeat or comma separated)")->delimiter(',');
    sub->add_option("--kmax", v_kmax, "largest k or degree");
    sub->add_option("--lmax", v_lmax, "largest l");
    sub->add_option("--sigma-max", v_sigma, "largest sigma_bar");
    sub->add_option("--imax", v_imax, "largest level");
    sub->add_option("--samples", v_samples, "random samples per n");
    sub->add_option("--points", v_points, "quadrature or grid points");
    sub->add_option("--grid", v_grid, "finite-difference intervals");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Report r;
    if (spectrum->parsed()) {
      r = spectrum_report(model, imax);
    } else if (degeneracy->parsed()) {
      r = degeneracy_report(model, imax);
    } else if (ktype->parsed()) {
      r = ktype_report(model, imax);
    } else if (wavefunction->parsed()) {
      r = wavefunction_report(model, wave);
    } else if (residual->parsed()) {
      const std::string which = residual->get_subcommands().front()->get_name();
      r = residual_report(which, model, sweep, common.tol.value_or(1e-8));
    } else if (eigensolve->parsed()) {
      r = eigensolve_report(model, eig, common.tol.value_or(1e-4));
    } else if (micz->parsed()) {
      r = micz_report(model.sigma, micz_imax, micz_l, common.tol.value_or(1e-6));
    } else {
      const std::string target = verify_cmd->get_subcommands().front()->get_name();
      vs.kmax = v_kmax;
      vs.lmax = v_lmax;
      vs.sigma_max = v_sigma;
      vs.imax = v_imax;
      vs.samples = v_samples;
      vs.points = v_points;
      vs.grid = v_grid;
      vs.tol = common.tol;
      vs.seed = common.seed;
      r = target == "all" ? verify_all(vs) : verify(target, vs);
    }
    r.seed = common.seed;
    if (common.timestamp) r.timestamp = now_utc();
    out << report::emit(r, report::parse_format(common.format));
    if (!r.pass()) {
      err << r.command << ": " << std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.pass; })
          << " check(s) failed\n";
      return kExitFailed;
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

} // namespace sp1kepler::cli

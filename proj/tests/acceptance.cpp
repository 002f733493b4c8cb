// One line per acceptance criterion; exit status 1 if any fails.

#include "sp1kepler/geom.hpp"
#include "sp1kepler/radial.hpp"
#include "sp1kepler/rep.hpp"
#include "sp1kepler/spectral.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace sp1kepler;
using spectral::ModelParams;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

rep::HighestWeight rl_weight(int n, int sb, int l) {
  std::vector<long> w(static_cast<std::size_t>(n), 0);
  w[0] = l + sb;
  w[1] = l;
  return rep::HighestWeight::from_integers(w);
}

Outcome spectrum_formula() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n : {2, 3})
    for (int sb = 0; sb <= 3; ++sb)
      for (int l = 0; l <= 2; ++l) {
        const ModelParams p(n, sb);
        const auto v = radial::eigensolve(p, l, 4000, radial::suggested_t_max(p, l, 3), 3);
        for (int k = 1; k <= 3; ++k) {
          const double exact = spectral::energy_kl(p, {k, l}).value;
          worst = std::max(worst, std::abs(v[static_cast<std::size_t>(k - 1)] - exact) / std::abs(exact));
        }
      }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst < 1e-4 && secs < 30.0, "max rel error " + fmt("%.2e", worst) + ", " + fmt("%.2f", secs) + " s"};
}

Outcome eigenvalue_collapse() {
  int cases = 0;
  bool ok = true;
  for (int n = 2; n <= 4; ++n)
    for (int sb = 0; sb <= 6; ++sb)
      for (int k = 1; k <= 12; ++k)
        for (int l = 0; k + l <= 12; ++l) {
          const ModelParams p(n, sb);
          ok = ok && spectral::energy_kl(p, {k, l}).exact == spectral::energy(p, k - 1 + l).exact;
          ++cases;
        }
  return {ok, std::to_string(cases) + " exact rational comparisons"};
}

Outcome dimension_equality() {
  bool ok = true;
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= 12; ++k) ok = ok && spectral::dimension_equality_check(n, k).pass;
  const auto spot = spectral::dimension_equality_check(2, 2);
  ok = ok && spot.lhs == 36 && spot.rhs == 36;
  return {ok, "n=2..4, k<=12; n=2 k=2: " + spot.lhs.str() + " = " + spot.rhs.str()};
}

Outcome generating_function() {
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    const auto g = spectral::genfunc_check(n, 12);
    ok = ok && g.pass;
    for (int k = 0; k <= 12; ++k)
      ok = ok && g.coefficients[static_cast<std::size_t>(k)] == binomial(4L * n + k - 1, 4L * n - 1);
  }
  return {ok, "coefficients up to t^12 for n=2,3,4"};
}

Outcome closed_form_dimensions() {
  bool ok = true;
  for (int n = 2; n <= 4; ++n)
    for (int sb = 0; sb <= 6; ++sb)
      for (int l = 0; l <= 6; ++l)
        ok = ok && rep::dim_R_l(n, sb, l) == rep::weyl_dim(rep::RootSystem::C(n), rl_weight(n, sb, l));
  return {ok, "147 weights of C_2..C_4"};
}

Outcome ktype_dimensions() {
  bool ok = true;
  for (int n = 2; n <= 3; ++n)
    for (int sb = 0; sb <= 5; ++sb)
      for (int level = 0; level <= 5; ++level) ok = ok && spectral::ktype_dim_check(ModelParams(n, sb), level).pass;
  const auto spot = spectral::ktype_dim_check(ModelParams(2, 0), 1);
  ok = ok && spot.u2n_dim == 6 && spot.sp_sum == 6;
  return {ok, "n=2 sigma=0 I=1: " + spot.u2n_dim.str() + " = " + spot.sp_sum.str()};
}

Outcome casimir_laplacian() {
  bool ok = true;
  for (int n = 2; n <= 5; ++n)
    for (int sb = 0; sb <= 8; ++sb)
      for (int l = 0; l <= 8; ++l) {
        const Rational diff = rep::casimir(rep::RootSystem::C(n), rl_weight(n, sb, l)) -
                              rep::casimir(rep::RootSystem::C(1), rep::HighestWeight::from_integers({sb}));
        ok = ok && rep::angular_eigenvalue(n, sb, l) == 2 * diff;
      }
  return {ok, "n<=5, l, sigma<=8, exact"};
}

Outcome radial_residuals() {
  double kepler = 0.0;
  double osc = 0.0;
  bool readback = true;
  for (int n : {2, 3}) {
    const auto t_grid = radial::RadialGrid::uniform(0.1, 30.0, 200, 2 * n);
    const auto r_grid = radial::RadialGrid::uniform(0.1, 6.0, 200, 4 * n - 1);
    for (int sb = 0; sb <= 3; ++sb)
      for (int l = 0; l <= 3; ++l)
        for (int k = 1; k <= 5; ++k) {
          const radial::RadialState s(ModelParams(n, sb), k, l);
          kepler = std::max(kepler, radial::kepler_residual(s, t_grid));
          osc = std::max(osc, radial::oscillator_residual(s, r_grid));
          const double fit = radial::oscillator_eigenvalue_fit(s, r_grid);
          const int expected = 2 * s.level() + sb + 2 * n;
          readback = readback && std::lround(fit) == expected && std::abs(fit - expected) < 1e-8;
        }
  }
  return {kepler < 1e-8 && osc < 1e-8 && readback,
          "kepler " + fmt("%.2e", kepler) + ", oscillator " + fmt("%.2e", osc) + (readback ? ", eigenvalues exact" : ", eigenvalue mismatch")};
}

Outcome twist_correspondence() {
  double worst = 0.0;
  for (int n : {2, 3})
    for (int sb = 0; sb <= 3; ++sb)
      for (int l = 0; l <= 3; ++l)
        for (int k = 1; k <= 5; ++k) {
          const radial::RadialState s(ModelParams(n, sb), k, l);
          std::vector<double> q;
          for (int i = 0; i < 200; ++i) {
            const double r = 0.2 + 4.8 * i / 199.0;
            q.push_back(radial::oscillator_profile(s, r, true) / radial::twisted_radial(s, r));
          }
          double mean = 0.0;
          for (double x : q) mean += x;
          mean /= static_cast<double>(q.size());
          double var = 0.0;
          for (double x : q) var += (x - mean) * (x - mean);
          worst = std::max(worst, var / static_cast<double>(q.size()));
        }
  return {worst < 1e-20, "max ratio variance " + fmt("%.2e", worst)};
}

Outcome micz_equivalence() {
  const auto grid = radial::RadialGrid::uniform(0.5, 10.0, 96, 4);
  const auto fns = radial::default_micz_test_functions();
  bool ok = fns.size() == 3;
  double worst = 0.0;
  for (int sb = 0; sb <= 6; ++sb) {
    const auto m = radial::micz_check(ModelParams(2, sb), 20, fns, grid);
    ok = ok && m.spectrum_exact && m.pass;
    for (double r : m.operator_residuals) worst = std::max(worst, r);
    // independent restatement of the spectrum identity
    for (int level = 0; level <= 20; ++level) {
      const Rational d = level + 2 + Rational(sb, 2);
      ok = ok && spectral::energy(ModelParams(2, sb), level).exact == -Rational(1, 2) / (d * d);
    }
  }
  return {ok && worst < 1e-6, "spectrum exact, max operator residual " + fmt("%.2e", worst)};
}

Outcome metric_identities() {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  double ratio_dev = 0.0;
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int i = 0; i < 1000; ++i)
      worst = std::max(worst, geom::metric_identity_residual(geom::TangentSample::random(n, rng)));
    for (int i = 0; i < 1000; ++i) {
      const auto a = qlinalg::random_vector(n - 1, rng);
      const auto q = geom::quotient_factor_check(a, a);
      ratio_dev = std::max(ratio_dev, std::abs(q.sp_n / q.sphere - 2.0));
    }
  }
  return {worst < 1e-12 && ratio_dev < 1e-13,
          "max residual " + fmt("%.2e", worst) + ", |ratio - 2| " + fmt("%.2e", ratio_dev)};
}

Outcome ostar_identities() {
  std::mt19937_64 rng(7);
  bool ok = true;
  double worst = 0.0;
  for (std::size_t n : {2u, 3u}) {
    for (int i = 0; i < 100; ++i) {
      const auto g = geom::embed_u2n(geom::random_unitary(2 * n, rng));
      worst = std::max(worst, geom::ostar_deviation(g));
      ok = ok && geom::ostar_membership(g, 1e-10);
    }
    for (int i = 0; i < 100; ++i) ok = ok && geom::sp_n_in_ostar(qlinalg::random_symplectic(n, rng), 1e-10);
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> hits(4 * static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= 2 * n; ++i) {
      const int bar = geom::weight_double(i, n);
      ok = ok && bar > 2 * n && bar <= 4 * n && std::abs(bar - i - 2 * n) == n;
      ++hits[static_cast<std::size_t>(bar)];
    }
    for (int j = 2 * n + 1; j <= 4 * n; ++j) ok = ok && hits[static_cast<std::size_t>(j)] == 1;
  }
  return {ok, "max deviation " + fmt("%.2e", worst) + ", weight_double bijective for n<=6"};
}

Outcome schur_norm() {
  double norm_dev = 0.0;
  double cross = 0.0;
  for (int a = 0; a <= 10; ++a) {
    norm_dev = std::max(norm_dev, std::abs(rep::schur_norm(a, 256) - 1.0));
    for (int b = a + 1; b <= 10; ++b) cross = std::max(cross, std::abs(rep::character_inner(a, b, 256)));
  }
  return {norm_dev < 1e-6 && cross < 1e-6, "|norm - 1| " + fmt("%.2e", norm_dev) + ", cross " + fmt("%.2e", cross)};
}

Outcome orthonormality() {
  double worst = 0.0;
  for (int sb = 0; sb <= 2; ++sb)
    for (int l = 0; l <= 2; ++l) {
      const auto g = radial::orthogonality_check(ModelParams(2, sb), l, 6, 1024);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) worst = std::max(worst, std::abs(g[i * 6 + j] - (i == j ? 1.0 : 0.0)));
    }
  return {worst < 1e-7, "max deviation from identity " + fmt("%.2e", worst)};
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"spectrum formula from the eigensolver", spectrum_formula},
      {"eigenvalue collapse", eigenvalue_collapse},
      {"dimension equality", dimension_equality},
      {"generating-function identity", generating_function},
      {"closed-form vs Weyl dimensions", closed_form_dimensions},
      {"K-type dimensions", ktype_dimensions},
      {"Casimir/Laplacian identity", casimir_laplacian},
      {"radial ODE residuals", radial_residuals},
      {"twist correspondence", twist_correspondence},
      {"MICZ equivalence", micz_equivalence},
      {"metric identities", metric_identities},
      {"O*(4n) identities", ostar_identities},
      {"Schur norm", schur_norm},
      {"orthonormality", orthonormality},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

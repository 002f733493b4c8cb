#include "sp1kepler/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sp1kepler::tridiagonal {

namespace {

void validate(const SymTridiagonal& t) {
  if (t.diag.empty()) throw std::invalid_argument("SymTridiagonal: empty matrix");
  if (t.off.size() + 1 != t.diag.size()) throw std::invalid_argument("SymTridiagonal: off-diagonal has wrong length");
}

std::pair<double, double> gershgorin(const SymTridiagonal& t) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off[i - 1]);
    if (i + 1 < n) radius += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  return {lo, hi};
}

// Solves (T - shift) x = b by Gaussian elimination with partial pivoting,
// overwriting b.
void shifted_solve(const SymTridiagonal& t, double shift, std::vector<double>& b) {
  const std::size_t n = t.size();
  // Rows of U hold up to three entries after pivoting: u0 (diag), u1, u2.
  std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0);
  std::vector<double> lower(n, 0.0);
  std::vector<char> swapped(n, 0);

  double cur_d = t.diag[0] - shift;
  double cur_u = n > 1 ? t.off[0] : 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double sub = t.off[i];
    const double next_d = t.diag[i + 1] - shift;
    const double next_u = i + 2 < n ? t.off[i + 1] : 0.0;
    if (std::abs(cur_d) >= std::abs(sub)) {
      const double m = cur_d != 0.0 ? sub / cur_d : 0.0;
      u0[i] = cur_d;
      u1[i] = cur_u;
      u2[i] = 0.0;
      lower[i] = m;
      cur_d = next_d - m * cur_u;
      cur_u = next_u;
    } else {
      const double m = cur_d / sub;
      swapped[i] = 1;
      u0[i] = sub;
      u1[i] = next_d;
      u2[i] = next_u;
      lower[i] = m;
      cur_d = cur_u - m * next_d;
      cur_u = -m * next_u;
    }
  }
  u0[n - 1] = cur_d;

  const double tiny = std::numeric_limits<double>::epsilon() * (std::abs(shift) + 1.0);
  for (auto& d : u0)
    if (std::abs(d) < tiny) d = d < 0 ? -tiny : tiny;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (swapped[i]) std::swap(b[i], b[i + 1]);
    b[i + 1] -= lower[i] * b[i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    if (ii + 1 < n) s -= u1[ii] * b[ii + 1];
    if (ii + 2 < n) s -= u2[ii] * b[ii + 2];
    b[ii] = s / u0[ii];
  }
}

} // namespace

std::size_t count_below(const SymTridiagonal& t, double x) {
  validate(t);
  const double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = t.diag[0] - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (q == 0.0) q = tiny;
    q = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, std::size_t count, double rel_tol) {
  validate(t);
  if (count > t.size()) throw std::invalid_argument("lowest_eigenvalues: more eigenvalues requested than rows");
  const auto [glo, ghi] = gershgorin(t);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    // Eigenvalue k (0-based) is the smallest x with count_below(x) > k.
    double lo = glo;
    double hi = ghi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(t, mid) > k)
        hi = mid;
      else
        lo = mid;
      const double scale = std::max(std::abs(lo), std::abs(hi));
      if (hi - lo <= rel_tol * scale + std::numeric_limits<double>::min()) break;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

std::vector<double> eigenvector(const SymTridiagonal& t, double eigenvalue, int iterations) {
  validate(t);
  const std::size_t n = t.size();
  const double shift = eigenvalue + 1e-12 * (std::abs(eigenvalue) + 1.0);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * std::sin(static_cast<double>(i));
  for (int it = 0; it < iterations; ++it) {
    shifted_solve(t, shift, v);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

} // namespace sp1kepler::tridiagonal

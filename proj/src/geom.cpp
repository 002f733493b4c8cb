#include "sp1kepler/geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sp1kepler::geom {

using qlinalg::Quaternion;

ComplexMatrix::ComplexMatrix(std::size_t order) : order_(order), data_(order * order) {}

ComplexMatrix::ComplexMatrix(std::size_t order, std::vector<Complex> row_major)
    : order_(order), data_(std::move(row_major)) {
  if (data_.size() != order * order) throw std::invalid_argument("ComplexMatrix: wrong number of entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t order) {
  ComplexMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::symplectic_j(std::size_t n) {
  ComplexMatrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = -1.0;
    m(n + i, i) = 1.0;
  }
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (order_ != o.order_) throw std::invalid_argument("ComplexMatrix: order mismatch");
  ComplexMatrix out(order_);
  for (std::size_t r = 0; r < order_; ++r)
    for (std::size_t k = 0; k < order_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < order_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

ComplexMatrix ComplexMatrix::operator-() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = -z;
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(order_);
  for (std::size_t r = 0; r < order_; ++r)
    for (std::size_t c = 0; c < order_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(order_);
  for (std::size_t r = 0; r < order_; ++r)
    for (std::size_t c = 0; c < order_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  if (order_ != o.order_) throw std::invalid_argument("ComplexMatrix: order mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - o.data_[i]));
  return worst;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix block(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                    const ComplexMatrix& d) {
  const std::size_t m = a.order();
  if (b.order() != m || c.order() != m || d.order() != m) throw std::invalid_argument("block: order mismatch");
  ComplexMatrix out(2 * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) {
      out(r, s) = a(r, s);
      out(r, m + s) = b(r, s);
      out(m + r, s) = c(r, s);
      out(m + r, m + s) = d(r, s);
    }
  return out;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return (a.adjoint() * a).max_abs_diff(ComplexMatrix::identity(a.order())) <= tol;
}

ComplexMatrix random_unitary(std::size_t order, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(order);
  for (std::size_t c = 0; c < order; ++c) {
    std::vector<Complex> v(order);
    for (auto& z : v) z = {g(rng), g(rng)};
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t p = 0; p < c; ++p) {
        Complex dot{};
        for (std::size_t r = 0; r < order; ++r) dot += std::conj(m(r, p)) * v[r];
        for (std::size_t r = 0; r < order; ++r) v[r] -= dot * m(r, p);
      }
    double norm = 0.0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < order; ++r) m(r, c) = v[r] / norm;
  }
  return m;
}

// ---------------------------------------------------------------------------

TangentSample::TangentSample(QVector base, QVector vector) : base_(std::move(base)), vector_(std::move(vector)) {
  if (base_.size() != vector_.size()) throw std::invalid_argument("TangentSample: length mismatch");
  if (!(base_.norm2() > 0.0)) throw std::invalid_argument("TangentSample: zero base vector");
}

TangentSample TangentSample::random(std::size_t n, std::mt19937_64& rng) {
  auto z = qlinalg::random_vector(n, rng);
  auto w = qlinalg::random_vector(n, rng);
  return {std::move(z), std::move(w)};
}

double fubini_study_form(const TangentSample& s) {
  const double z2 = s.base().norm2();
  const double w2 = s.vector().norm2();
  const double overlap = qdot(s.base(), s.vector()).norm2();
  return w2 / z2 - overlap / (z2 * z2);
}

double metric_identity_residual(const TangentSample& s) {
  const double z2 = s.base().norm2();
  const Quaternion zw = qdot(s.base(), s.vector());
  const double radial = zw.real() * zw.real() / z2;
  const double transverse = z2 * fubini_study_form(s);
  const double fibre = zw.imag_norm2() / z2;
  return std::abs(s.vector().norm2() - (radial + transverse + fibre));
}

QuotientFactor quotient_factor_check(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("quotient_factor_check: length mismatch");
  const std::size_t n = a.size() + 1;

  auto tangent = [n](const QVector& v) {
    QMatrix u(n, n);
    for (std::size_t i = 1; i < n; ++i) {
      u(i, 0) = v[i - 1];
      u(0, i) = -v[i - 1].conj();
    }
    return u;
  };
  const QMatrix u = tangent(a);
  const QMatrix v = tangent(b);

  // Push forward along A -> A p with p = (1, 0, ..., 0): the first column.
  const QVector p = QVector::unit(n, 0);
  const QVector u_sphere = u * p;
  const QVector v_sphere = v * p;

  return {u.real_trace_inner(v), qdot(u_sphere, v_sphere).real()};
}

double ostar_deviation(const ComplexMatrix& g) {
  if (g.order() == 0 || g.order() % 4 != 0) {
    throw std::invalid_argument("ostar: matrix order " + std::to_string(g.order()) + " is not a multiple of 4");
  }
  const std::size_t two_n = g.order() / 2;
  const auto id = ComplexMatrix::identity(two_n);
  const auto zero = ComplexMatrix(two_n);
  const auto j = ComplexMatrix::symplectic_j(two_n / 2);

  const auto hermitian_form = block(id, zero, zero, -id);
  const auto bilinear_form = block(zero, j, -j, zero);

  const double d1 = (g.adjoint() * hermitian_form * g).max_abs_diff(hermitian_form);
  const double d2 = (g.transpose() * bilinear_form * g).max_abs_diff(bilinear_form);
  return std::max(d1, d2);
}

bool ostar_membership(const ComplexMatrix& g, double tol) {
  const double deviation = ostar_deviation(g);
  return g.all_finite() && deviation <= tol;
}

namespace {

ComplexMatrix embed(const ComplexMatrix& a, double tol, bool conjugate) {
  if (a.order() == 0 || a.order() % 2 != 0) throw std::invalid_argument("embed_u2n: order must be even");
  if (!is_unitary(a, tol)) throw std::invalid_argument("embed_u2n: input is not unitary");
  const auto j = ComplexMatrix::symplectic_j(a.order() / 2);
  const auto lower = -(j * (conjugate ? a.conj() : a) * j);
  return block(a, ComplexMatrix(a.order()), ComplexMatrix(a.order()), lower);
}

} // namespace

ComplexMatrix embed_u2n(const ComplexMatrix& a, double tol) { return embed(a, tol, true); }

ComplexMatrix embed_u2n_unitary_form(const ComplexMatrix& a, double tol) { return embed(a, tol, false); }

int weight_double(int i, int n) {
  if (n < 1 || i < 1 || i > 2 * n) {
    throw std::out_of_range("weight_double: index " + std::to_string(i) + " outside 1.." + std::to_string(2 * n));
  }
  // Candidates i + 2n +- n; exactly one lies in (2n, 4n].
  for (int candidate : {i + 3 * n, i + n})
    if (candidate > 2 * n && candidate <= 4 * n) return candidate;
  throw std::logic_error("weight_double: no admissible index");  // unreachable
}

bool sp_n_in_ostar(const QMatrix& m, double tol) {
  if (!qlinalg::is_symplectic(m, tol)) throw std::invalid_argument("sp_n_in_ostar: matrix is not in Sp(n)");
  const ComplexMatrix a(2 * m.rows(), qlinalg::complexify(m));
  return ostar_membership(embed_u2n(a, tol), tol);
}

} // namespace sp1kepler::geom

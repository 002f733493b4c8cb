#include "sp1kepler/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sp1kepler::qlinalg {

double Quaternion::abs() const { return std::sqrt(norm2()); }

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w += o.w;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w -= o.w;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Quaternion& Quaternion::operator*=(double s) {
  w *= s;
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
Quaternion operator*(Quaternion a, double s) { return a *= s; }
Quaternion operator*(double s, Quaternion a) { return a *= s; }

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  // (a0, u)(b0, v) = (a0 b0 - u.v, a0 v + b0 u - u x v); the minus on the
  // cross product is what makes i*j = -k.
  return {
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + b.w * a.x - (a.y * b.z - a.z * b.y),
      a.w * b.y + b.w * a.y - (a.z * b.x - a.x * b.z),
      a.w * b.z + b.w * a.z - (a.x * b.y - a.y * b.x),
  };
}

// ---------------------------------------------------------------------------

QVector QVector::unit(std::size_t n, std::size_t index, Quaternion q) {
  if (index >= n) throw std::out_of_range("QVector::unit: index out of range");
  QVector v(n);
  v[index] = q;
  return v;
}

double QVector::norm2() const {
  double s = 0.0;
  for (const auto& q : entries_) s += q.norm2();
  return s;
}

double QVector::norm() const { return std::sqrt(norm2()); }

QVector QVector::right_mul(const Quaternion& q) const {
  QVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] * q;
  return out;
}

QVector& QVector::operator+=(const QVector& o) {
  if (o.size() != size()) throw std::invalid_argument("QVector: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  if (o.size() != size()) throw std::invalid_argument("QVector: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o[i];
  return *this;
}

QVector& QVector::operator*=(double s) {
  for (auto& q : entries_) q *= s;
  return *this;
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }
QVector operator*(QVector a, double s) { return a *= s; }

Quaternion qdot(const QVector& z, const QVector& w) {
  if (z.size() != w.size()) {
    throw std::invalid_argument("qdot: length mismatch (" + std::to_string(z.size()) + " vs " +
                                std::to_string(w.size()) + ")");
  }
  Quaternion s;
  for (std::size_t i = 0; i < z.size(); ++i) s += z[i].conj() * w[i];
  return s;
}

// ---------------------------------------------------------------------------

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion::one();
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void QMatrix::set_column(std::size_t c, const QVector& v) {
  if (v.size() != rows_) throw std::invalid_argument("QMatrix::set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

QMatrix QMatrix::adjoint() const {
  QMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: dimension mismatch in product");
  QMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < o.cols_; ++c) {
      Quaternion s;
      for (std::size_t k = 0; k < cols_; ++k) s += (*this)(r, k) * o(k, c);
      out(r, c) = s;
    }
  return out;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("QMatrix: dimension mismatch in product");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Quaternion s;
    for (std::size_t k = 0; k < cols_; ++k) s += (*this)(r, k) * v[k];
    out[r] = s;
  }
  return out;
}

QMatrix& QMatrix::operator*=(double s) {
  for (auto& q : data_) q *= s;
  return *this;
}

double QMatrix::real_trace_inner(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) s += (data_[i].conj() * o.data_[i]).real();
  return s;
}

bool is_symplectic(const QMatrix& m, double tol) {
  if (!m.square()) return false;
  const QMatrix g = m.adjoint() * m;
  double worst = 0.0;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) {
      const Quaternion d = g(r, c) - (r == c ? Quaternion::one() : Quaternion{});
      worst = std::max(worst, d.abs());
    }
  return worst <= tol;
}

// ---------------------------------------------------------------------------

std::vector<Complex> complexify(const QVector& z) {
  // q = w + x i + y j + z k = (w + x i) + j (y + z i), using j i = k.
  const std::size_t n = z.size();
  std::vector<Complex> c(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = {z[i].w, z[i].x};
    c[n + i] = {z[i].y, z[i].z};
  }
  return c;
}

QVector decomplexify(const std::vector<Complex>& c) {
  if (c.size() % 2 != 0) throw std::invalid_argument("decomplexify: odd length");
  const std::size_t n = c.size() / 2;
  QVector z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = {c[i].real(), c[i].imag(), c[n + i].real(), c[n + i].imag()};
  return z;
}

std::vector<Complex> complexify(const QMatrix& m) {
  if (!m.square()) throw std::invalid_argument("complexify: matrix must be square");
  const std::size_t n = m.rows();
  const std::size_t dim = 2 * n;
  std::vector<Complex> out(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) {
    // Complex basis vector e_c is the quaternion vector with 1 (c < n) or j (c >= n).
    const QVector basis = c < n ? QVector::unit(n, c) : QVector::unit(n, c - n, Quaternion::j());
    const auto col = complexify(m * basis);
    for (std::size_t r = 0; r < dim; ++r) out[r * dim + c] = col[r];
  }
  return out;
}

// ---------------------------------------------------------------------------

Quaternion random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Quaternion q;
  do {
    q = {g(rng), g(rng), g(rng), g(rng)};
  } while (q.norm2() < 1e-12);
  return q * (1.0 / q.abs());
}

QVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  QVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = {g(rng), g(rng), g(rng), g(rng)};
  return v;
}

QMatrix random_symplectic(std::size_t n, std::mt19937_64& rng) {
  QMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    QVector v = random_vector(n, rng);
    // Two passes of classical Gram-Schmidt keep the columns orthonormal to
    // rounding.
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t p = 0; p < c; ++p) {
        const QVector e = m.column(p);
        v -= e.right_mul(qdot(e, v));
      }
    v *= 1.0 / v.norm();
    m.set_column(c, v);
  }
  return m;
}

} // namespace sp1kepler::qlinalg

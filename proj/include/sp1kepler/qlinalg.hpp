#pragma once

// Quaternion scalars, vectors and matrices.
//
// Sign convention: i*j = -k (equivalently j*i = k, i*j*k = +1). This is the
// convention under which a quaternion vector z = z' + j z'' splits into the
// complex pair (z', z'') with right multiplication by j acting as
// Z -> J_2n conj(Z). Every routine in the library assumes it.

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace sp1kepler::qlinalg {

using Complex = std::complex<double>;

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0, x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const;
  /// Squared length of the imaginary part.
  constexpr double imag_norm2() const { return x * x + y * y + z * z; }

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(double s);

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(Quaternion a, const Quaternion& b);
Quaternion operator-(Quaternion a, const Quaternion& b);
Quaternion operator-(const Quaternion& a);
Quaternion operator*(Quaternion a, double s);
Quaternion operator*(double s, Quaternion a);

/// Hamilton product with the i*j = -k convention.
Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }

class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : entries_(n) {}
  explicit QVector(std::vector<Quaternion> entries) : entries_(std::move(entries)) {}

  /// Standard basis vector e_index (0-based) scaled on the right by q.
  static QVector unit(std::size_t n, std::size_t index, Quaternion q = Quaternion::one());

  std::size_t size() const { return entries_.size(); }
  const Quaternion& operator[](std::size_t i) const { return entries_[i]; }
  Quaternion& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Quaternion>& entries() const { return entries_; }

  double norm2() const;
  double norm() const;

  /// Right scalar multiplication Z -> Z q.
  QVector right_mul(const Quaternion& q) const;

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  QVector& operator*=(double s);

 private:
  std::vector<Quaternion> entries_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
QVector operator*(QVector a, double s);

/// Z-bar . W = sum conj(Z_i) W_i. Throws std::invalid_argument on length mismatch.
Quaternion qdot(const QVector& z, const QVector& w);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const std::vector<Quaternion>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  void set_column(std::size_t c, const QVector& v);

  /// Conjugate transpose.
  QMatrix adjoint() const;
  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix& operator*=(double s);

  /// Euclidean inner product on H^{rows*cols}: Re tr(A^dagger B).
  double real_trace_inner(const QMatrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

/// max |(M^dagger M - I)_{rc}| <= tol. Non-square input yields false.
bool is_symplectic(const QMatrix& m, double tol);

/// Splits each q = a + j b (a, b complex in span{1, i}) into the stacked
/// complex vector (a_1..a_n, b_1..b_n).
std::vector<Complex> complexify(const QVector& z);
QVector decomplexify(const std::vector<Complex>& c);

/// The 2n x 2n complex matrix of the left action of M on complexified vectors,
/// row-major.
std::vector<Complex> complexify(const QMatrix& m);

/// Uniform random unit quaternion.
Quaternion random_unit(std::mt19937_64& rng);
/// Vector with independent standard normal components.
QVector random_vector(std::size_t n, std::mt19937_64& rng);
/// Element of Sp(n): quaternionic Gram-Schmidt on a Gaussian matrix.
QMatrix random_symplectic(std::size_t n, std::mt19937_64& rng);

} // namespace sp1kepler::qlinalg

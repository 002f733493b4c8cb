#pragma once

// Numerical checks of the metric identities on H^n_* and of the matrix-group
// relations that characterise O*(4n) inside GL(4n, C).

#include "sp1kepler/qlinalg.hpp"

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace sp1kepler::geom {

using qlinalg::Complex;
using qlinalg::QMatrix;
using qlinalg::QVector;

/// Default tolerance on max-entry deviation for group membership tests.
inline constexpr double kMembershipTol = 1e-10;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t order);
  ComplexMatrix(std::size_t order, std::vector<Complex> row_major);

  static ComplexMatrix identity(std::size_t order);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);
  /// J_{2n} = [[0, -I_n], [I_n, 0]].
  static ComplexMatrix symplectic_j(std::size_t n);

  std::size_t order() const { return order_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * order_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * order_ + c]; }

  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator-() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  /// max |a_rc - b_rc|.
  double max_abs_diff(const ComplexMatrix& o) const;
  bool all_finite() const;

 private:
  std::size_t order_ = 0;
  std::vector<Complex> data_;
};

/// Block matrix [[a, b], [c, d]] from four equal-order blocks.
ComplexMatrix block(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                    const ComplexMatrix& d);

bool is_unitary(const ComplexMatrix& a, double tol);
/// Haar-like random unitary via Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t order, std::mt19937_64& rng);

/// A base point Z != 0 of H^n_* together with a tangent vector W there.
class TangentSample {
 public:
  /// Throws std::invalid_argument if Z = 0 or the lengths differ.
  TangentSample(QVector base, QVector vector);

  const QVector& base() const { return base_; }
  const QVector& vector() const { return vector_; }

  static TangentSample random(std::size_t n, std::mt19937_64& rng);

 private:
  QVector base_;
  QVector vector_;
};

/// ds^2_FS(W, W) = |W|^2/|Z|^2 - |Z-bar . W|^2/|Z|^4.
double fubini_study_form(const TangentSample& s);

/// | |W|^2 - [ (Re(Z-bar.W)/|Z|)^2 + |Z|^2 ds^2_FS + |Im(Z-bar.W)|^2/|Z|^2 ] |.
double metric_identity_residual(const TangentSample& s);

struct QuotientFactor {
  double sp_n;    // <u, v> on Sp(n), Euclidean metric of H^{n^2}
  double sphere;  // <u~, v~> on S^{4n-1}
};

/// Builds u = [[0, -a^dagger], [a, 0]] and v likewise from b, evaluates the
/// trace form on Sp(n) and the pushed-forward vectors on the sphere. The first
/// value is twice the second.
QuotientFactor quotient_factor_check(const QVector& a, const QVector& b);

/// Largest entry deviation from the two defining relations
///   g^dagger diag(I, -I) g = diag(I, -I),
///   g^T [[0, J], [-J, 0]] g = [[0, J], [-J, 0]].
/// Throws std::invalid_argument unless the order is a positive multiple of 4.
double ostar_deviation(const ComplexMatrix& g);
bool ostar_membership(const ComplexMatrix& g, double tol = kMembershipTol);

/// diag(A, -J conj(A) J): the image of U(2n) in O*(4n). Throws on odd order
/// or when A is not unitary to `tol`.
ComplexMatrix embed_u2n(const ComplexMatrix& a, double tol = kMembershipTol);
/// diag(A, -J A J): the same subgroup seen inside U(4n).
ComplexMatrix embed_u2n_unitary_form(const ComplexMatrix& a, double tol = kMembershipTol);

/// The unique index i-bar in (2n, 4n] with |i-bar - i - 2n| = n (1-based).
/// Throws std::out_of_range unless 1 <= i <= 2n.
int weight_double(int i, int n);

/// Complexifies M in Sp(n), embeds it via embed_u2n and tests O*(4n)
/// membership. Throws std::invalid_argument if M is not symplectic to `tol`.
bool sp_n_in_ostar(const QMatrix& m, double tol = kMembershipTol);

} // namespace sp1kepler::geom

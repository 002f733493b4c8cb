#pragma once

// Exact representation-theoretic quantities: Weyl dimensions and Casimir
// values for root systems of type A and C, the closed-form dimension of the
// Sp(n) modules R_l(sigma), and Sp(1) characters.
//
// Casimir normalisation: orthonormal e_i coordinates, so the long roots 2e_i
// of C_n have squared length 4. With this choice the Laplacian on the
// quaternionic projective space equals exactly twice the Casimir difference;
// angular_eigenvalue() and its tests pin the convention.

#include "sp1kepler/exact.hpp"

#include <string>
#include <vector>

namespace sp1kepler::rep {

enum class RootFamily { A, C };

/// A_m lives in m+1 coordinates (gl-style weights); C_m in m coordinates.
class RootSystem {
 public:
  RootSystem(RootFamily family, int rank);

  static RootSystem A(int rank) { return {RootFamily::A, rank}; }
  static RootSystem C(int rank) { return {RootFamily::C, rank}; }

  RootFamily family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t coordinate_dim() const;

  /// Positive roots as integer coordinate vectors.
  std::vector<std::vector<long>> positive_roots() const;
  /// 2 rho, summed from the enumeration.
  std::vector<long> twice_rho() const;

 private:
  RootFamily family_;
  int rank_;
};

/// Integer or half-integer weight, stored doubled.
class HighestWeight {
 public:
  HighestWeight() = default;

  static HighestWeight from_integers(const std::vector<long>& entries);
  static HighestWeight from_doubled(std::vector<long> twice_entries);

  std::size_t size() const { return twice_.size(); }
  long doubled(std::size_t i) const { return twice_.at(i); }
  Rational operator[](std::size_t i) const;
  const std::vector<long>& doubled_entries() const { return twice_; }

  /// Every entry an integer.
  bool integral() const;
  /// Entries non-increasing.
  bool non_increasing() const;

  /// Adds the constant c to every entry.
  HighestWeight shifted(const Rational& c) const;
  /// Highest weight of the contragredient representation: reversed and negated.
  HighestWeight dual() const;

  /// "(a, b, ...)" with half-integers written as p/2.
  std::string str() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  explicit HighestWeight(std::vector<long> twice) : twice_(std::move(twice)) {}
  std::vector<long> twice_;
};

struct Sp1Irrep {
  int sigma_bar = 0;
  int dim() const { return sigma_bar + 1; }
};

/// Dominant (and integral for the group) with respect to `rs`.
bool is_dominant(const RootSystem& rs, const HighestWeight& hw);

/// prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>, exact.
/// Throws std::invalid_argument for a non-dominant or non-integral weight.
BigInt weyl_dim(const RootSystem& rs, const HighestWeight& hw);

/// Dimension of the Sp(n) module with highest weight (l + sigma_bar, l, 0, ..., 0)
/// from the closed form
///   (1 + p - q)/(1 + p) * (1 + (p + q)/(2n - 1)) * C(p + 2n - 2, p) * C(q + 2n - 3, q),
/// p = l + sigma_bar, q = l. Multiplying by dim sigma = 1 + p - q gives the
/// summand of the oscillator dimension identity.
BigInt dim_R_l(int n, int sigma_bar, int l);

/// <lambda, lambda + 2 rho>.
Rational casimir(const RootSystem& rs, const HighestWeight& hw);

/// Eigenvalue of the (non-negative) twisted Laplacian of HP^{n-1} on R_l(sigma):
///   4 ell^2 + 4 (2n - 1) ell - sigma_bar (sigma_bar + 2),  ell = l + sigma_bar/2.
Rational angular_eigenvalue(int n, int sigma_bar, int l);

/// chi(theta) = sin((sigma_bar + 1) theta) / sin(theta), with the limits at 0 and pi.
double sp1_character(int sigma_bar, double theta);

/// <chi_a, chi_b> against the class measure (2/pi) sin^2(theta) d theta on
/// [0, pi], composite Gauss-Legendre with `quadrature_points` nodes (>= 64).
double character_inner(int sigma_a, int sigma_b, int quadrature_points);
inline double schur_norm(int sigma_bar, int quadrature_points) {
  return character_inner(sigma_bar, sigma_bar, quadrature_points);
}

} // namespace sp1kepler::rep

#pragma once

// Energy levels, degeneracies and K-type bookkeeping for the Sp(1)-Kepler
// problem with parameters (n, sigma_bar), plus the exact identities relating
// them to the 4n-dimensional isotropic harmonic oscillator.

#include "sp1kepler/exact.hpp"
#include "sp1kepler/rep.hpp"

#include <vector>

namespace sp1kepler::spectral {

using rep::HighestWeight;

/// One Sp(1)-Kepler problem: n >= 2 and the highest weight sigma_bar >= 0 of
/// the Sp(1) irrep.
struct ModelParams {
  int n;
  int sigma_bar;

  ModelParams(int n_, int sigma_bar_);
  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Radial quantum number k >= 1 and angular label l >= 0; principal number
/// I = k - 1 + l.
struct QuantumNumbers {
  int k;
  int l;

  QuantumNumbers(int k_, int l_);
  int principal() const { return k - 1 + l; }
};

struct Energy {
  Rational exact;
  double value;
};

/// E_I = -(1/2) / (I + n + sigma_bar/2)^2.
Energy energy(const ModelParams& p, int level);

/// -(1/2) / (k + l + (sigma_bar + 2n)/2 - 1)^2, evaluated from (k, l) directly.
Energy energy_kl(const ModelParams& p, const QuantumNumbers& q);

/// All (k, l) with k - 1 + l = level, ordered by l.
std::vector<QuantumNumbers> states_at_level(int level);

/// sum_{l=0}^{level} dim R_l(sigma).
BigInt degeneracy(const ModelParams& p, int level);

/// C(4n + k - 1, 4n - 1).
BigInt oscillator_level_dim(int n, int k);

struct DimensionEquality {
  BigInt lhs;
  BigInt rhs;
  bool pass;
};

/// lhs = sum over 2I + sigma_bar = k of (sigma_bar + 1) * degeneracy, rhs the
/// oscillator level dimension.
DimensionEquality dimension_equality_check(int n, int k);

struct GenfuncReport {
  std::vector<BigInt> coefficients;  // of sum_k lhs(n, k) t^k, k = 0..K
  std::vector<BigInt> expected;      // C(4n + k - 1, 4n - 1)
  bool folded_matches_double_sum;    // lhs * (1 - t^2) vs the (p, q) double sum
  bool double_sum_matches_closed;    // double sum vs (1 - t)^{-4n} (1 - t^2)
  bool divided_back_matches;         // closed form / (1 - t^2) vs binomials
  bool pass;
};

/// Series-level check of the generating-function argument up to t^K.
GenfuncReport genfunc_check(int n, int max_order);

/// (-1, ..., -1, -(1 + I), -(1 + I + sigma_bar)), 2n entries.
HighestWeight ktype_weight(const ModelParams& p, int level);

/// (-1, ..., -1, -(1 + sigma_bar)), 2n entries.
HighestWeight module_weight(const ModelParams& p);

struct KTypeDimReport {
  HighestWeight shifted_weight;
  BigInt u2n_dim;
  BigInt sp_sum;
  bool pass;
};

/// Weyl dimension of the U(2n) K-type (after a determinant shift) against the
/// sum of Sp(n) dimensions in the energy eigenspace.
KTypeDimReport ktype_dim_check(const ModelParams& p, int level);

/// (l + sigma_bar + kappa, l + kappa, kappa, ..., kappa) or its dual.
/// kappa must be a half-integer.
HighestWeight rkappa_weight(int n, int sigma_bar, int l, const Rational& kappa, bool conjugate);

struct LevelReport {
  int level;
  Energy energy;
  BigInt degeneracy;
  HighestWeight ktype_weight;
};

LevelReport level_report(const ModelParams& p, int level);

} // namespace sp1kepler::spectral

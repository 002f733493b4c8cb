#include "sp1kepler/spectral.hpp"

#include <stdexcept>
#include <string>

namespace sp1kepler::spectral {

ModelParams::ModelParams(int n_, int sigma_bar_) : n(n_), sigma_bar(sigma_bar_) {
  if (n < 2) throw std::invalid_argument("ModelParams: n must be at least 2, got " + std::to_string(n));
  if (sigma_bar < 0) throw std::invalid_argument("ModelParams: sigma_bar must be non-negative");
}

QuantumNumbers::QuantumNumbers(int k_, int l_) : k(k_), l(l_) {
  if (k < 1) throw std::invalid_argument("QuantumNumbers: k must be at least 1");
  if (l < 0) throw std::invalid_argument("QuantumNumbers: l must be non-negative");
}

namespace {

void require_level(int level) {
  if (level < 0) throw std::invalid_argument("level must be non-negative, got " + std::to_string(level));
}

Energy from_exact(Rational e) {
  const double v = to_double(e);
  return {std::move(e), v};
}

} // namespace

Energy energy(const ModelParams& p, int level) {
  require_level(level);
  const Rational nu = level + p.n + Rational(p.sigma_bar, 2);
  return from_exact(-Rational(1, 2) / (nu * nu));
}

Energy energy_kl(const ModelParams& p, const QuantumNumbers& q) {
  const Rational denom = q.k + q.l + Rational(p.sigma_bar + 2 * p.n, 2) - 1;
  return from_exact(-Rational(1, 2) / (denom * denom));
}

std::vector<QuantumNumbers> states_at_level(int level) {
  require_level(level);
  std::vector<QuantumNumbers> out;
  out.reserve(static_cast<std::size_t>(level) + 1);
  for (int l = 0; l <= level; ++l) out.emplace_back(level + 1 - l, l);
  return out;
}

BigInt degeneracy(const ModelParams& p, int level) {
  require_level(level);
  BigInt sum = 0;
  for (int l = 0; l <= level; ++l) sum += rep::dim_R_l(p.n, p.sigma_bar, l);
  return sum;
}

BigInt oscillator_level_dim(int n, int k) {
  if (k < 0) throw std::invalid_argument("oscillator_level_dim: k must be non-negative");
  return binomial(4L * n + k - 1, 4L * n - 1);
}

DimensionEquality dimension_equality_check(int n, int k) {
  if (k < 0) throw std::invalid_argument("dimension_equality_check: k must be non-negative");
  BigInt lhs = 0;
  for (int level = 0; 2 * level <= k; ++level) {
    const int sigma_bar = k - 2 * level;
    lhs += (sigma_bar + 1) * degeneracy(ModelParams(n, sigma_bar), level);
  }
  BigInt rhs = oscillator_level_dim(n, k);
  const bool pass = lhs == rhs;
  return {std::move(lhs), std::move(rhs), pass};
}

GenfuncReport genfunc_check(int n, int max_order) {
  if (n < 2) throw std::invalid_argument("genfunc_check: n must be at least 2");
  if (max_order < 1) throw std::invalid_argument("genfunc_check: need at least one coefficient beyond t^0");
  const auto size = static_cast<std::size_t>(max_order) + 1;

  GenfuncReport r;
  r.coefficients.reserve(size);
  r.expected.reserve(size);
  for (int k = 0; k <= max_order; ++k) {
    r.coefficients.push_back(dimension_equality_check(n, k).lhs);
    r.expected.push_back(oscillator_level_dim(n, k));
  }

  // lhs(t) * (1 - t^2)
  std::vector<BigInt> folded(size);
  for (std::size_t k = 0; k < size; ++k) folded[k] = r.coefficients[k] - (k >= 2 ? r.coefficients[k - 2] : BigInt(0));

  // sum_{p, q >= 0} t^{p+q-1} (p - q) C(p + 2n - 2, 2n - 1) C(q + 2n - 3, 2n - 3)
  std::vector<BigInt> double_sum(size);
  for (long p = 0; p <= max_order + 1; ++p)
    for (long q = 0; p + q - 1 <= max_order; ++q) {
      if (p + q == 0) continue;
      const auto e = static_cast<std::size_t>(p + q - 1);
      double_sum[e] += (p - q) * binomial(p + 2 * n - 2, 2 * n - 1) * binomial(q + 2 * n - 3, 2 * n - 3);
    }

  // (1 - t)^{-4n} (1 - t^2)
  std::vector<BigInt> closed(size);
  for (std::size_t k = 0; k < size; ++k) {
    const long kk = static_cast<long>(k);
    closed[k] = binomial(4L * n + kk - 1, 4L * n - 1) - (kk >= 2 ? binomial(4L * n + kk - 3, 4L * n - 1) : BigInt(0));
  }

  // closed / (1 - t^2) = closed * sum_j t^{2j}
  std::vector<BigInt> divided(size);
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t j = 0; 2 * j <= k; ++j) divided[k] += closed[k - 2 * j];

  r.folded_matches_double_sum = folded == double_sum;
  r.double_sum_matches_closed = double_sum == closed;
  r.divided_back_matches = divided == r.expected;
  r.pass = r.folded_matches_double_sum && r.double_sum_matches_closed && r.divided_back_matches &&
           r.coefficients == r.expected;
  return r;
}

HighestWeight ktype_weight(const ModelParams& p, int level) {
  require_level(level);
  std::vector<long> w(2 * static_cast<std::size_t>(p.n), -1);
  w[w.size() - 2] = -(1L + level);
  w[w.size() - 1] = -(1L + level + p.sigma_bar);
  return HighestWeight::from_integers(w);
}

HighestWeight module_weight(const ModelParams& p) {
  std::vector<long> w(2 * static_cast<std::size_t>(p.n), -1);
  w.back() = -(1L + p.sigma_bar);
  return HighestWeight::from_integers(w);
}

KTypeDimReport ktype_dim_check(const ModelParams& p, int level) {
  const HighestWeight shifted = ktype_weight(p, level).shifted(1 + level + p.sigma_bar);
  BigInt u2n = rep::weyl_dim(rep::RootSystem::A(2 * p.n - 1), shifted);
  BigInt sp = degeneracy(p, level);
  const bool pass = u2n == sp;
  return {shifted, std::move(u2n), std::move(sp), pass};
}

HighestWeight rkappa_weight(int n, int sigma_bar, int l, const Rational& kappa, bool conjugate) {
  if (n < 2 || sigma_bar < 0 || l < 0) throw std::invalid_argument("rkappa_weight: need n >= 2, sigma_bar >= 0, l >= 0");
  const Rational twice = 2 * kappa;
  if (boost::multiprecision::denominator(twice) != 1) throw std::invalid_argument("rkappa_weight: kappa must be a half-integer");
  const long k2 = boost::multiprecision::numerator(twice).convert_to<long>();
  std::vector<long> w(2 * static_cast<std::size_t>(n), k2);
  w[0] = 2L * (l + sigma_bar) + k2;
  w[1] = 2L * l + k2;
  const auto hw = HighestWeight::from_doubled(std::move(w));
  return conjugate ? hw.dual() : hw;
}

LevelReport level_report(const ModelParams& p, int level) {
  return {level, energy(p, level), degeneracy(p, level), ktype_weight(p, level)};
}

} // namespace sp1kepler::spectral

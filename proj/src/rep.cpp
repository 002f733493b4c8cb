#include "sp1kepler/rep.hpp"

#include "sp1kepler/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sp1kepler::rep {

RootSystem::RootSystem(RootFamily family, int rank) : family_(family), rank_(rank) {
  if (rank < 1) throw std::invalid_argument("RootSystem: rank must be positive");
}

std::size_t RootSystem::coordinate_dim() const {
  return family_ == RootFamily::A ? static_cast<std::size_t>(rank_) + 1 : static_cast<std::size_t>(rank_);
}

std::vector<std::vector<long>> RootSystem::positive_roots() const {
  const std::size_t dim = coordinate_dim();
  std::vector<std::vector<long>> roots;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      std::vector<long> minus(dim, 0);
      minus[i] = 1;
      minus[j] = -1;
      roots.push_back(std::move(minus));
      if (family_ == RootFamily::C) {
        std::vector<long> plus(dim, 0);
        plus[i] = 1;
        plus[j] = 1;
        roots.push_back(std::move(plus));
      }
    }
  if (family_ == RootFamily::C)
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<long> longroot(dim, 0);
      longroot[i] = 2;
      roots.push_back(std::move(longroot));
    }
  return roots;
}

std::vector<long> RootSystem::twice_rho() const {
  std::vector<long> rho(coordinate_dim(), 0);
  for (const auto& alpha : positive_roots())
    for (std::size_t i = 0; i < alpha.size(); ++i) rho[i] += alpha[i];
  return rho;
}

// ---------------------------------------------------------------------------

HighestWeight HighestWeight::from_integers(const std::vector<long>& entries) {
  std::vector<long> twice(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) twice[i] = 2 * entries[i];
  return HighestWeight(std::move(twice));
}

HighestWeight HighestWeight::from_doubled(std::vector<long> twice_entries) {
  return HighestWeight(std::move(twice_entries));
}

Rational HighestWeight::operator[](std::size_t i) const { return Rational(twice_.at(i), 2); }

bool HighestWeight::integral() const {
  for (long v : twice_)
    if (v % 2 != 0) return false;
  return true;
}

bool HighestWeight::non_increasing() const {
  for (std::size_t i = 1; i < twice_.size(); ++i)
    if (twice_[i] > twice_[i - 1]) return false;
  return true;
}

HighestWeight HighestWeight::shifted(const Rational& c) const {
  const Rational twice_c = 2 * c;
  if (boost::multiprecision::denominator(twice_c) != 1) {
    throw std::invalid_argument("HighestWeight::shifted: shift must be a half-integer");
  }
  const long d = boost::multiprecision::numerator(twice_c).convert_to<long>();
  std::vector<long> out = twice_;
  for (auto& v : out) v += d;
  return HighestWeight(std::move(out));
}

HighestWeight HighestWeight::dual() const {
  std::vector<long> out(twice_.rbegin(), twice_.rend());
  for (auto& v : out) v = -v;
  return HighestWeight(std::move(out));
}

std::string HighestWeight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < twice_.size(); ++i) {
    if (i) os << ", ";
    if (twice_[i] % 2 == 0)
      os << twice_[i] / 2;
    else
      os << twice_[i] << "/2";
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

bool is_dominant(const RootSystem& rs, const HighestWeight& hw) {
  if (hw.size() != rs.coordinate_dim()) return false;
  if (!hw.non_increasing()) return false;
  if (rs.family() == RootFamily::C) return hw.integral() && hw.doubled(hw.size() - 1) >= 0;
  // Type A: differences must be integers.
  for (std::size_t i = 1; i < hw.size(); ++i)
    if ((hw.doubled(i) - hw.doubled(0)) % 2 != 0) return false;
  return true;
}

namespace {

void require_dominant(const RootSystem& rs, const HighestWeight& hw, const char* who) {
  if (hw.size() != rs.coordinate_dim()) {
    throw std::invalid_argument(std::string(who) + ": weight has " + std::to_string(hw.size()) +
                                " entries, root system needs " + std::to_string(rs.coordinate_dim()));
  }
  if (!is_dominant(rs, hw)) throw std::invalid_argument(std::string(who) + ": weight " + hw.str() + " is not dominant");
}

long pairing(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace

BigInt weyl_dim(const RootSystem& rs, const HighestWeight& hw) {
  require_dominant(rs, hw, "weyl_dim");
  const auto two_rho = rs.twice_rho();
  std::vector<long> shifted(two_rho.size());
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = hw.doubled(i) + two_rho[i];

  BigInt num = 1;
  BigInt den = 1;
  for (const auto& alpha : rs.positive_roots()) {
    num *= pairing(shifted, alpha);
    den *= pairing(two_rho, alpha);
  }
  return to_integer(Rational(num, den));
}

BigInt dim_R_l(int n, int sigma_bar, int l) {
  if (n < 2 || sigma_bar < 0 || l < 0) throw std::invalid_argument("dim_R_l: need n >= 2, sigma_bar >= 0, l >= 0");
  const long p = l + sigma_bar;
  const long q = l;
  Rational v = Rational(1 + p - q, 1 + p) * (1 + Rational(p + q, 2 * n - 1));
  v *= binomial(p + 2 * n - 2, p);
  v *= binomial(q + 2 * n - 3, q);
  return to_integer(v);
}

Rational casimir(const RootSystem& rs, const HighestWeight& hw) {
  require_dominant(rs, hw, "casimir");
  const auto two_rho = rs.twice_rho();
  BigInt s = 0;
  for (std::size_t i = 0; i < two_rho.size(); ++i) {
    const long lam2 = hw.doubled(i);
    s += BigInt(lam2) * (lam2 + 2 * two_rho[i]);
  }
  return Rational(s, 4);
}

Rational angular_eigenvalue(int n, int sigma_bar, int l) {
  if (n < 2 || sigma_bar < 0 || l < 0) {
    throw std::invalid_argument("angular_eigenvalue: need n >= 2, sigma_bar >= 0, l >= 0");
  }
  const Rational ell = l + Rational(sigma_bar, 2);
  return 4 * ell * ell + 4 * (2 * n - 1) * ell - sigma_bar * (sigma_bar + 2);
}

double sp1_character(int sigma_bar, double theta) {
  if (sigma_bar < 0) throw std::invalid_argument("sp1_character: sigma_bar must be non-negative");
  // sin((s+1)t)/sin(t) = U_s(cos t); the Chebyshev recurrence is regular at 0 and pi.
  const double x = std::cos(theta);
  double u_prev = 1.0;
  double u = 2.0 * x;
  if (sigma_bar == 0) return 1.0;
  for (int k = 1; k < sigma_bar; ++k) {
    const double next = 2.0 * x * u - u_prev;
    u_prev = u;
    u = next;
  }
  return u;
}

double character_inner(int sigma_a, int sigma_b, int quadrature_points) {
  if (quadrature_points < 64) throw std::invalid_argument("character_inner: need at least 64 quadrature points");
  constexpr std::size_t order = 16;
  const std::size_t panels = (static_cast<std::size_t>(quadrature_points) + order - 1) / order;
  const auto rule = quadrature::composite_gauss_legendre(0.0, std::numbers::pi, panels, order);
  return rule.integrate([&](double theta) {
    const double s = std::sin(theta);
    return (2.0 / std::numbers::pi) * s * s * sp1_character(sigma_a, theta) * sp1_character(sigma_b, theta);
  });
}

} // namespace sp1kepler::rep

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sp1kepler::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

/// Gauss-Legendre rule with `order` nodes on [-1, 1].
Rule gauss_legendre(std::size_t order);

/// `panels` equal sub-intervals of [a, b], each with an `order`-point
/// Gauss-Legendre rule.
Rule composite_gauss_legendre(double a, double b, std::size_t panels, std::size_t order);

/// Rule for integrals over [0, inf) through t = scale * x / (1 - x), x in [0, 1),
/// built from a composite Gauss-Legendre rule in x. Jacobian folded into the
/// weights.
Rule semi_infinite(double scale, std::size_t panels, std::size_t order);

} // namespace sp1kepler::quadrature

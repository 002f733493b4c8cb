#pragma once

// Real symmetric tridiagonal eigenproblems: Sturm-sequence bisection for
// selected eigenvalues and inverse iteration for eigenvectors.

#include <cstddef>
#include <vector>

namespace sp1kepler::tridiagonal {

struct SymTridiagonal {
  std::vector<double> diag;  // size N
  std::vector<double> off;   // size N - 1, off[i] couples i and i + 1

  std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm count via LDL^T pivots).
std::size_t count_below(const SymTridiagonal& t, double x);

/// The `count` smallest eigenvalues in ascending order, bisected to relative
/// precision `rel_tol`.
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, std::size_t count, double rel_tol = 1e-15);

/// Unit eigenvector for an (accurately known) eigenvalue, by inverse iteration.
std::vector<double> eigenvector(const SymTridiagonal& t, double eigenvalue, int iterations = 4);

} // namespace sp1kepler::tridiagonal

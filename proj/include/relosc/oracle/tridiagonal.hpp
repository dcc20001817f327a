#pragma once

#include <cstddef>
#include <vector>

namespace relosc::oracle {

/// Real symmetric tridiagonal matrix: `diag` of size n, `off` of size n - 1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const noexcept { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
std::size_t count_below(const SymTridiagonal& t, double x);

/// The index-th smallest eigenvalue (0-based) by bisection on the Sturm count.
double eigenvalue(const SymTridiagonal& t, std::size_t index);

/// The `count` smallest eigenvalues, ascending.
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, std::size_t count);

/// Unit 2-norm eigenvector for a converged eigenvalue, by inverse iteration
/// with a partially pivoted tridiagonal factorization. Sign is left as found.
std::vector<double> inverse_iteration(const SymTridiagonal& t, double eigenvalue);

}  // namespace relosc::oracle

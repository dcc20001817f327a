#include "relosc/oracle/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "relosc/errors.hpp"

namespace relosc::oracle {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double pivmin(const SymTridiagonal& t) {
  double emax = 1.0;
  for (double e : t.off) emax = std::max(emax, e * e);
  return std::numeric_limits<double>::min() * emax;
}

struct Bounds {
  double lo;
  double hi;
};

Bounds gershgorin(const SymTridiagonal& t) {
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(t.off[i - 1]);
    if (i + 1 < n) r += std::fabs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = 2.0 * kEps * std::max(std::fabs(lo), std::fabs(hi)) + pivmin(t);
  return {lo - pad, hi + pad};
}

std::size_t count_below(const SymTridiagonal& t, double x, double piv) {
  std::size_t count = 0;
  double q = t.diag[0] - x;
  if (std::fabs(q) < piv) q = -piv;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double e = t.off[i - 1];
    q = t.diag[i] - x - e * e / q;
    if (std::fabs(q) < piv) q = -piv;
    if (q < 0.0) ++count;
  }
  return count;
}

double bisect(const SymTridiagonal& t, std::size_t index, double lo, double hi, double piv) {
  for (int iter = 0; iter < 256; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * kEps * std::max(std::fabs(lo), std::fabs(hi)) + piv ||
        mid <= lo || mid >= hi) {
      return mid;
    }
    if (count_below(t, mid, piv) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw NumericalError("tridiagonal bisection did not converge", hi - lo);
}

void validate(const SymTridiagonal& t) {
  if (t.diag.empty() || t.off.size() + 1 != t.diag.size()) {
    throw ParameterError("tridiagonal matrix needs n diagonal and n-1 off-diagonal entries");
  }
}

}  // namespace

std::size_t count_below(const SymTridiagonal& t, double x) {
  validate(t);
  return count_below(t, x, pivmin(t));
}

double eigenvalue(const SymTridiagonal& t, std::size_t index) {
  validate(t);
  if (index >= t.size()) throw ParameterError("eigenvalue index out of range");
  const Bounds b = gershgorin(t);
  return bisect(t, index, b.lo, b.hi, pivmin(t));
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, std::size_t count) {
  validate(t);
  if (count > t.size()) throw ParameterError("more eigenvalues requested than matrix size");
  const Bounds b = gershgorin(t);
  const double piv = pivmin(t);
  std::vector<double> out;
  out.reserve(count);
  double lo = b.lo;
  for (std::size_t i = 0; i < count; ++i) {
    // the previous eigenvalue is a valid lower bracket for the next
    const double value = bisect(t, i, lo, b.hi, piv);
    out.push_back(value);
    lo = std::max(b.lo, value - (2.0 * kEps * std::fabs(value) + piv));
  }
  return out;
}

std::vector<double> inverse_iteration(const SymTridiagonal& t, double eigenvalue) {
  validate(t);
  const std::size_t n = t.size();
  if (n == 1) return {1.0};

  // LU with partial pivoting of T - sigma I (LAPACK gttrf layout).
  std::vector<double> dl(t.off), d(n), du(t.off), du2(n, 0.0);
  std::vector<char> swapped(n, 0);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - eigenvalue;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(t.diag[i]));
  for (double e : t.off) scale = std::max(scale, std::fabs(e));
  const double tiny = kEps * std::max(scale, 1.0);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::fabs(d[i]) >= std::fabs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double f = dl[i] / d[i];
      dl[i] = f;
      d[i + 1] -= f * du[i];
    } else {
      const double f = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = f;
      const double tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - f * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du[i + 1];
      }
      swapped[i] = 1;
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;

  auto solve = [&](std::vector<double>& b) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl[i] * b[i];
    }
    b[n - 1] /= d[n - 1];
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) {
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
  };

  // deterministic pseudo-random start so no symmetry class is excluded
  std::vector<double> v(n);
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  for (auto& x : v) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    x = 0.5 + static_cast<double>(state >> 11) * 0x1.0p-53;
  }
  for (int iter = 0; iter < 3; ++iter) {
    solve(v);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw NumericalError("inverse iteration produced a degenerate vector", 1.0);
    }
    for (auto& x : v) x /= norm;
  }
  return v;
}

}  // namespace relosc::oracle

// Small dense/banded numerical kernels: Sturm-count bisection for symmetric
// tridiagonal eigenvalues, pivoted tridiagonal solves, determinant signs, and
// a cyclic Jacobi eigensolver for modest dense symmetric matrices.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamspec {

/// Symmetric tridiagonal matrix; off has size n-1.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;
  std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm count via the LDL^T
/// recurrence with the usual zero-pivot safeguard).
inline int sturm_count(const SymTridiag& T, double x) {
  const std::size_t n = T.size();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e2 = (i == 0) ? 0.0 : T.off[i - 1] * T.off[i - 1];
    q = (T.diag[i] - x) - e2 / q;
    if (q == 0.0) q = 1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

inline std::pair<double, double> gershgorin_bounds(const SymTridiag& T) {
  const std::size_t n = T.size();
  double lo = T.diag[0], hi = T.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0;
    if (i > 0) radius += std::abs(T.off[i - 1]);
    if (i + 1 < n) radius += std::abs(T.off[i]);
    lo = std::min(lo, T.diag[i] - radius);
    hi = std::max(hi, T.diag[i] + radius);
  }
  return {lo, hi};
}

/// k-th smallest eigenvalue (k is 0-based) by bisection on Sturm counts.
inline double kth_eigenvalue(const SymTridiag& T, std::size_t k,
                             double rel_tol = 1e-14, int max_iter = 200) {
  auto [lo, hi] = gershgorin_bounds(T);
  const double span = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  int iter = 0;
  while (hi - lo > rel_tol * span) {
    if (++iter > max_iter)
      throw std::runtime_error(
          "tridiagonal bisection stalled after " + std::to_string(max_iter) +
          " iterations; interval [" + std::to_string(lo) + ", " +
          std::to_string(hi) + "]");
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(T, mid) >= static_cast<int>(k) + 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

inline std::vector<double> smallest_eigenvalues(const SymTridiag& T,
                                                std::size_t count) {
  count = std::min(count, T.size());
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = kth_eigenvalue(T, k);
  return out;
}

/// min |lambda| over the spectrum, i.e. the smallest singular value.
inline double min_abs_eigenvalue(const SymTridiag& T) {
  const std::size_t n = T.size();
  const int below = sturm_count(T, 0.0);
  if (below == 0) return std::abs(kth_eigenvalue(T, 0));
  if (below == static_cast<int>(n)) return std::abs(kth_eigenvalue(T, n - 1));
  const double neg = kth_eigenvalue(T, static_cast<std::size_t>(below) - 1);
  const double pos = kth_eigenvalue(T, static_cast<std::size_t>(below));
  return std::min(std::abs(neg), std::abs(pos));
}

/// Solve a general tridiagonal system by LU with partial pivoting (the
/// pivoting introduces one extra superdiagonal). sub/sup have size n-1.
inline std::vector<double> solve_tridiag(std::vector<double> sub,
                                         std::vector<double> diag,
                                         std::vector<double> sup,
                                         std::vector<double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  std::vector<double> sup2(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double a = sub[i];  // row i+1, column i
    if (std::abs(diag[i]) < std::abs(a)) {
      // Swap rows i and i+1; the longer row moves up and leaves a second
      // superdiagonal entry behind.
      std::swap(rhs[i], rhs[i + 1]);
      const double old_diag_i = diag[i], old_sup_i = sup[i];
      diag[i] = a;
      a = old_diag_i;
      sup2[i] = (i + 2 < n) ? sup[i + 1] : 0.0;
      if (i + 2 < n) sup[i + 1] = 0.0;
      const double old_diag_next = diag[i + 1];
      diag[i + 1] = old_sup_i;
      sup[i] = old_diag_next;
    } else {
      sup2[i] = 0.0;
    }
    if (diag[i] == 0.0)
      throw std::runtime_error("singular tridiagonal system");
    const double m = a / diag[i];
    diag[i + 1] -= m * sup[i];
    if (i + 2 < n) sup[i + 1] -= m * sup2[i];
    rhs[i + 1] -= m * rhs[i];
  }
  if (diag[n - 1] == 0.0)
    throw std::runtime_error("singular tridiagonal system");
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  if (n >= 2) x[n - 2] = (rhs[n - 2] - sup[n - 2] * x[n - 1]) / diag[n - 2];
  for (std::size_t i = n; i-- > 2;) {
    const std::size_t row = i - 2;
    x[row] = (rhs[row] - sup[row] * x[row + 1] - sup2[row] * x[row + 2]) /
             diag[row];
  }
  return x;
}

/// Sign of det of a tridiagonal matrix via the scaled continuant recurrence.
/// Returns -1, 0 or +1.
inline int tridiag_det_sign(const std::vector<double>& sub,
                            const std::vector<double>& diag,
                            const std::vector<double>& sup) {
  const std::size_t n = diag.size();
  if (n == 0) return 1;
  double fm2 = 1.0;       // continuant f[-1]
  double fm1 = diag[0];   // continuant f[0]
  for (std::size_t i = 1; i < n; ++i) {
    const double f = diag[i] * fm1 - sub[i - 1] * sup[i - 1] * fm2;
    fm2 = fm1;
    fm1 = f;
    const double mag = std::max(std::abs(fm1), std::abs(fm2));
    if (mag > 1e150) {
      fm1 /= mag;
      fm2 /= mag;
    } else if (mag > 0 && mag < 1e-150) {
      fm1 /= mag;
      fm2 /= mag;
    }
  }
  return (fm1 > 0) - (fm1 < 0);
}

/// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
/// Jacobi rotations; sorted ascending. Intended for modest n.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a,
                                              std::size_t n,
                                              double tol = 1e-13,
                                              int max_sweeps = 60) {
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return a[i * n + j];
  };
  double norm = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) norm = std::max(norm, std::abs(at(i, j)));
  if (norm == 0) return std::vector<double>(n, 0.0);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(at(i, j)));
    if (off <= tol * norm) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= 1e-2 * tol * norm) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = ((theta >= 0) ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace lamspec

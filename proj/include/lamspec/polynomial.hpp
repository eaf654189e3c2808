// Dense univariate real polynomials: arithmetic, Sturm-chain root counting,
// and companion-matrix root finding (complex Hessenberg QR with Wilkinson
// shifts, followed by Newton polish).
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lamspec {

/// Coefficients in ascending degree order; c[k] multiplies x^k.
struct Poly {
  std::vector<double> c;

  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {}
  static Poly constant(double a) { return Poly({a}); }

  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  double max_abs_coeff() const {
    double m = 0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
  }

  /// Drop trailing coefficients that are negligible relative to the largest.
  Poly trimmed(double rel = 1e-14) const {
    const double cutoff = rel * max_abs_coeff();
    std::size_t n = c.size();
    while (n > 1 && std::abs(c[n - 1]) <= cutoff) --n;
    return Poly(std::vector<double>(c.begin(), c.begin() + n));
  }

  bool is_zero(double rel = 1e-14) const {
    (void)rel;
    return c.empty() || max_abs_coeff() == 0.0;
  }

  double operator()(double x) const {
    double v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  }

  std::complex<double> operator()(std::complex<double> x) const {
    std::complex<double> v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  }

  Poly derivative() const {
    if (c.size() <= 1) return Poly({0.0});
    std::vector<double> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
      d[i - 1] = c[i] * static_cast<double>(i);
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<double> out(std::max(a.c.size(), b.c.size()), 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<double> out(std::max(a.c.size(), b.c.size()), 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return Poly({0.0});
    std::vector<double> out(a.c.size() + b.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(out));
  }

  friend Poly operator*(double s, const Poly& a) {
    Poly out = a;
    for (double& v : out.c) v *= s;
    return out;
  }
};

namespace detail {

// Euclidean remainder of a by b, with b nonzero and trimmed.
inline Poly poly_rem(Poly a, const Poly& b) {
  a = a.trimmed();
  const std::size_t db = b.degree();
  if (db == 0) return Poly({0.0});
  const double lead = b.c[db];
  while (!a.is_zero() && a.degree() >= db) {
    const std::size_t da = a.degree();
    const double factor = a.c[da] / lead;
    for (std::size_t i = 0; i <= db; ++i) a.c[da - db + i] -= factor * b.c[i];
    a.c[da] = 0.0;  // eliminate exactly; trimming then lowers the degree
    a = a.trimmed();
    if (a.degree() == da) break;
  }
  return a.trimmed();
}

}  // namespace detail

/// Sturm chain of p (with signs normalised so positive rescaling is allowed).
inline std::vector<Poly> sturm_chain(const Poly& p_in) {
  std::vector<Poly> chain;
  Poly p = p_in.trimmed();
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Poly d = p.derivative().trimmed();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain[chain.size() - 1];
    Poly r = detail::poly_rem(a, b);
    if (r.is_zero()) break;
    // Negate and rescale to unit infinity-norm; positive scaling keeps the
    // sign-variation counts intact while taming coefficient growth.
    const double scale = 1.0 / r.max_abs_coeff();
    for (double& v : r.c) v = -v * scale;
    chain.push_back(r);
    if (chain.back().degree() == 0) break;
    if (chain.size() > p.c.size() + 2) break;  // numerical safety stop
  }
  return chain;
}

inline int sign_variations(const std::vector<Poly>& chain, double x) {
  int variations = 0;
  int prev = 0;
  for (const Poly& q : chain) {
    const double v = q(x);
    const int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

/// Number of distinct real roots in (a, b].
inline int count_roots(const std::vector<Poly>& chain, double a, double b) {
  if (chain.empty()) return 0;
  return sign_variations(chain, a) - sign_variations(chain, b);
}

inline std::complex<double> newton_polish(const Poly& p, std::complex<double> z,
                                          int iters = 4) {
  const Poly d = p.derivative();
  for (int i = 0; i < iters; ++i) {
    const std::complex<double> pv = p(z);
    const std::complex<double> dv = d(z);
    if (std::abs(dv) == 0.0) break;
    const std::complex<double> step = pv / dv;
    z -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

namespace detail {

// Eigenvalues of a dense complex upper Hessenberg matrix by the shifted QR
// algorithm (explicit single shift, Wilkinson's choice).
inline std::vector<std::complex<double>> hessenberg_qr_eigenvalues(
    std::vector<std::vector<std::complex<double>>> H) {
  using C = std::complex<double>;
  const std::size_t n = H.size();
  std::vector<C> eig;
  eig.reserve(n);
  if (n == 0) return eig;
  std::size_t hi = n - 1;
  int iter_since_deflate = 0;
  const int max_total = static_cast<int>(200 * n + 200);
  int total = 0;

  auto deflate_one = [&](std::size_t idx) {
    eig.push_back(H[idx][idx]);
  };

  while (true) {
    if (++total > max_total)
      throw std::runtime_error("companion QR failed to converge");
    // Find the active block [lo, hi] by scanning for negligible subdiagonals.
    std::size_t lo = hi;
    while (lo > 0) {
      const double s = std::abs(H[lo - 1][lo - 1]) + std::abs(H[lo][lo]);
      if (std::abs(H[lo][lo - 1]) <= 1e-16 * (s > 0 ? s : 1.0)) {
        H[lo][lo - 1] = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      deflate_one(hi);
      if (hi == 0) break;
      --hi;
      iter_since_deflate = 0;
      continue;
    }

    // Wilkinson shift: eigenvalue of the trailing 2x2 closest to H[hi][hi].
    const C a = H[hi - 1][hi - 1], b = H[hi - 1][hi];
    const C c = H[hi][hi - 1], d = H[hi][hi];
    C shift = d;
    const C tr = a + d;
    const C det = a * d - b * c;
    const C disc = std::sqrt(tr * tr - 4.0 * det);
    const C l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    shift = (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
    if (++iter_since_deflate % 12 == 0) {
      // Exceptional shift to break rare oscillation.
      shift = C(std::abs(H[hi][hi - 1].real()) + std::abs(H[hi][hi].real()),
                0.0);
    }

    // Explicit QR step on the active block via Givens rotations.
    const std::size_t m = hi - lo + 1;
    std::vector<C> cs(m - 1), sn(m - 1);
    for (std::size_t i = lo; i <= hi; ++i) H[i][i] -= shift;
    for (std::size_t k = lo; k < hi; ++k) {
      const C x = H[k][k], y = H[k + 1][k];
      const double norm = std::hypot(std::abs(x), std::abs(y));
      C cc = 1.0, ss = 0.0;
      if (norm > 0) {
        cc = x / norm;
        ss = y / norm;
      }
      cs[k - lo] = cc;
      sn[k - lo] = ss;
      for (std::size_t j = k; j <= hi; ++j) {
        const C t1 = H[k][j], t2 = H[k + 1][j];
        H[k][j] = std::conj(cc) * t1 + std::conj(ss) * t2;
        H[k + 1][j] = -ss * t1 + cc * t2;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const C cc = cs[k - lo], ss = sn[k - lo];
      const std::size_t top = lo;
      for (std::size_t i = top; i <= std::min(k + 2, hi); ++i) {
        const C t1 = H[i][k], t2 = H[i][k + 1];
        H[i][k] = t1 * cc + t2 * ss;
        H[i][k + 1] = -t1 * std::conj(ss) + t2 * std::conj(cc);
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) H[i][i] += shift;
  }
  return eig;
}

}  // namespace detail

/// All complex roots of p via the companion matrix. The polynomial is scaled
/// (variable substitution x = s*y) before forming the companion matrix, and
/// every root gets a Newton polish against the original polynomial.
inline std::vector<std::complex<double>> companion_roots(const Poly& p_in) {
  using C = std::complex<double>;
  Poly p = p_in.trimmed();
  std::vector<C> roots;
  if (p.degree() == 0) return roots;

  // Peel off roots at the origin.
  std::size_t zero_roots = 0;
  {
    const double cutoff = 1e-300;
    while (p.c.size() > 1 && std::abs(p.c[0]) < cutoff) {
      p.c.erase(p.c.begin());
      ++zero_roots;
    }
  }
  const std::size_t n = p.degree();
  if (n >= 1) {
    // Geometric scaling to balance coefficients.
    double s = 1.0;
    const double a0 = std::abs(p.c[0]);
    const double an = std::abs(p.c[n]);
    if (a0 > 0 && an > 0)
      s = std::pow(a0 / an, 1.0 / static_cast<double>(n));
    if (!(s > 1e-8 && s < 1e8)) s = 1.0;
    std::vector<double> q(n + 1);
    double pw = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      q[k] = p.c[k] * pw;  // q(y) = p(s y) up to overall constant
      pw *= s;
    }
    const double qlead = q[n];
    std::vector<std::vector<C>> H(n, std::vector<C>(n, C(0, 0)));
    for (std::size_t i = 1; i < n; ++i) H[i][i - 1] = 1.0;
    for (std::size_t i = 0; i < n; ++i) H[i][n - 1] = -q[i] / qlead;
    auto eig = detail::hessenberg_qr_eigenvalues(std::move(H));
    for (C y : eig) {
      C z = s * y;
      z = newton_polish(p_in, z);
      roots.push_back(z);
    }
  }
  for (std::size_t i = 0; i < zero_roots; ++i) roots.emplace_back(0.0, 0.0);
  return roots;
}

/// Real roots of p in [a, b], deduplicated and sorted. Uses companion-matrix
/// roots with a Newton polish; Sturm counts are the caller's cross-check.
inline std::vector<double> real_roots_in(const Poly& p, double a, double b,
                                         double imag_tol = 1e-7) {
  std::vector<double> out;
  const double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
  for (const auto& z : companion_roots(p)) {
    if (std::abs(z.imag()) > imag_tol * scale) continue;
    double x = z.real();
    // One more real Newton polish.
    const Poly d = p.derivative();
    for (int i = 0; i < 2; ++i) {
      const double dv = d(x);
      if (dv != 0.0) x -= p(x) / dv;
    }
    if (x < a - 1e-12 * scale || x > b + 1e-12 * scale) continue;
    x = std::min(std::max(x, a), b);
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [scale](double u, double v) {
                          return std::abs(u - v) <= 1e-10 * scale;
                        }),
            out.end());
  return out;
}

}  // namespace lamspec

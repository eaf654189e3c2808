// One-dimensional theory: integral means, the explicit projected-inverse
// solution formula on mean-zero data, and the exact inner spectrum
//   { lambda : m((alpha-lambda)^{-1}) = 0 } \cup { alpha_j }.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lamspec/polynomial.hpp"
#include "lamspec/profile.hpp"

namespace lamspec {

/// Samples on the midpoint grid x_i = (i + 1/2)/n over (0,1). Slab-aligned
/// sizes (n a multiple of r+1) make the discrete mean of slab functions
/// exact, since midpoints never sit on an interface.
struct GridFunction {
  std::vector<double> samples;

  std::size_t n() const { return samples.size(); }
  double x(std::size_t i) const {
    return (static_cast<double>(i) + 0.5) / static_cast<double>(n());
  }

  template <class F>
  static GridFunction sample(std::size_t n, F&& f) {
    GridFunction g;
    g.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.samples[i] = f(g.x(i));
    return g;
  }
};

inline double grid_mean(const GridFunction& g) {
  double sum = 0;
  for (double v : g.samples) sum += v;
  return sum / static_cast<double>(g.n());
}

inline double mean(const LaminateProfile& alpha) {
  double sum = 0;
  for (double v : alpha.values()) sum += v;
  return sum / static_cast<double>(alpha.slab_count());
}

inline double mean_inv(const LaminateProfile& alpha) {
  double sum = 0;
  for (double v : alpha.values()) sum += 1.0 / v;
  return sum / static_cast<double>(alpha.slab_count());
}

/// m((alpha - lambda)^{-1}); lambda must stay off the coefficient values.
inline std::complex<double> mean_resolvent(const LaminateProfile& alpha,
                                           std::complex<double> lambda) {
  const double scale = std::max(1.0, alpha.max_abs());
  std::complex<double> sum = 0;
  for (double v : alpha.values()) {
    const std::complex<double> den = v - lambda;
    if (std::abs(den) <= 1e-300 * scale)
      throw pole_error("mean_resolvent: lambda equals a coefficient value");
    sum += 1.0 / den;
  }
  return sum / static_cast<double>(alpha.slab_count());
}

/// Degeneracy test for m(1/alpha): absolute threshold scaled by max |1/alpha_j|.
inline bool is_well_posed_1d(const LaminateProfile& alpha,
                             const Tolerances& tol = Tolerances::defaults()) {
  const double scale = 1.0 / alpha.min_abs();
  return std::abs(mean_inv(alpha)) > tol.degeneracy * scale;
}

/// Solves alpha*phi - m(alpha*phi) = psi for mean-zero psi through
///   phi = psi/alpha - (1/alpha) * m(psi/alpha)/m(1/alpha),
/// using the grid mean throughout, so the discrete identity holds to
/// rounding. Requires a slab-aligned grid.
inline GridFunction solve_projected_1d(const LaminateProfile& alpha,
                                       const GridFunction& psi,
                                       const Tolerances& tol =
                                           Tolerances::defaults()) {
  const std::size_t n = psi.n();
  if (n < 2) throw std::invalid_argument("grid size must be at least 2");
  if (n % alpha.slab_count() != 0)
    throw std::invalid_argument(
        "grid size must be a multiple of the slab count (slab-aligned grid)");
  for (double v : psi.samples)
    if (!std::isfinite(v))
      throw std::invalid_argument("grid samples must be finite");
  if (!is_well_posed_1d(alpha, tol))
    throw degenerate_error(
        "m(1/alpha) = 0: the one-dimensional problem is degenerate; see the "
        "homogenize command, case a");
  double psi_scale = 0;
  for (double v : psi.samples) psi_scale = std::max(psi_scale, std::abs(v));
  if (std::abs(grid_mean(psi)) > 1e-8 * std::max(psi_scale, 1.0))
    throw std::invalid_argument("psi must have (numerically) zero mean");

  GridFunction inv_psi;
  inv_psi.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    inv_psi.samples[i] = psi.samples[i] / alpha.value_at(psi.x(i));
  const double gamma = grid_mean(inv_psi) / mean_inv(alpha);

  GridFunction phi;
  phi.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    phi.samples[i] = inv_psi.samples[i] - gamma / alpha.value_at(psi.x(i));
  return phi;
}

struct SpectrumReport1D {
  std::vector<double> value_points;                 // distinct alpha_j
  std::vector<std::complex<double>> mean_zero_roots;  // sum 1/(alpha_j-l) = 0
  double tolerance = 0;                              // residual bound used
};

namespace detail {

struct WeightedValues {
  std::vector<double> values;
  std::vector<double> weights;
};

// Collapse repeated coefficient values into (value, multiplicity) pairs.
inline WeightedValues collapse_values(const LaminateProfile& alpha,
                                      double rel = 1e-12) {
  std::vector<double> sorted(alpha.values());
  std::sort(sorted.begin(), sorted.end());
  const double scale = std::max(1.0, alpha.max_abs());
  WeightedValues out;
  for (double v : sorted) {
    if (!out.values.empty() && std::abs(v - out.values.back()) <= rel * scale) {
      out.weights.back() += 1.0;
    } else {
      out.values.push_back(v);
      out.weights.push_back(1.0);
    }
  }
  return out;
}

}  // namespace detail

/// Exact 1-D inner spectrum: the coefficient values plus the roots of the
/// cleared-denominator polynomial of sum_j 1/(alpha_j - lambda), found by
/// companion-matrix eigenvalues with a Newton polish on the rational form.
inline SpectrumReport1D inner_spectrum_1d(const LaminateProfile& alpha,
                                          double residual_tol = 1e-9) {
  const auto wv = detail::collapse_values(alpha);
  const std::size_t m = wv.values.size();
  SpectrumReport1D report;
  report.value_points = wv.values;
  report.tolerance = residual_tol;
  if (m <= 1) return report;  // 1/(c - lambda) never vanishes

  // P(lambda) = sum_i w_i prod_{j != i} (a_j - lambda), degree <= m-1.
  Poly P = Poly::constant(0.0);
  for (std::size_t i = 0; i < m; ++i) {
    Poly term = Poly::constant(wv.weights[i]);
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) term = term * Poly({wv.values[j], -1.0});
    P = P + term;
  }
  P = P.trimmed();

  const double scale = std::max(1.0, alpha.max_abs());
  for (std::complex<double> z : companion_roots(P)) {
    // Polish on R(l) = sum w_i/(a_i - l), whose zeros are what we report.
    for (int it = 0; it < 4; ++it) {
      std::complex<double> R = 0, dR = 0;
      bool at_pole = false;
      for (std::size_t i = 0; i < m; ++i) {
        const std::complex<double> den = wv.values[i] - z;
        if (std::abs(den) < 1e-14 * scale) {
          at_pole = true;
          break;
        }
        R += wv.weights[i] / den;
        dR += wv.weights[i] / (den * den);
      }
      if (at_pole || std::abs(dR) == 0.0) break;
      z -= R / dR;
    }
    // Exclude anything that coincides with a coefficient value.
    bool on_value = false;
    for (double v : wv.values)
      if (std::abs(z - std::complex<double>(v, 0)) <= 1e-9 * scale)
        on_value = true;
    if (on_value) continue;
    // Residual certificate against the full (multiplicity-weighted) sum.
    std::complex<double> R = 0;
    for (double v : alpha.values()) R += 1.0 / (v - z);
    if (std::abs(R) > residual_tol * alpha.slab_count()) continue;
    report.mean_zero_roots.push_back(z);
  }
  std::sort(report.mean_zero_roots.begin(), report.mean_zero_roots.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  report.mean_zero_roots.erase(
      std::unique(report.mean_zero_roots.begin(),
                  report.mean_zero_roots.end(),
                  [scale](const std::complex<double>& a,
                          const std::complex<double>& b) {
                    return std::abs(a - b) <= 1e-9 * scale;
                  }),
      report.mean_zero_roots.end());
  return report;
}

/// Real shifts s with m((alpha - s)^{-1}) = 0.
inline std::vector<double> mean_zero_shifts(const LaminateProfile& alpha,
                                            double residual_tol = 1e-9) {
  std::vector<double> out;
  for (const auto& z : inner_spectrum_1d(alpha, residual_tol).mean_zero_roots)
    if (std::abs(z.imag()) <= 1e-9 * std::max(1.0, alpha.max_abs()))
      out.push_back(z.real());
  return out;
}

}  // namespace lamspec

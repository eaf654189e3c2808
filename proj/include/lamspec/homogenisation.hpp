// Case classification of periodic laminate limits, the limit coefficients,
// per-Fourier-mode resolvent multipliers of the limit family, and the limit
// inner spectra (closure generators, truncated).
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lamspec/one_dim.hpp"
#include "lamspec/profile.hpp"

namespace lamspec {

enum class LimitCase { degenerate_a, fourth_order_b, diagonal_c, scalar_1d };

inline const char* to_string(LimitCase c) {
  switch (c) {
    case LimitCase::degenerate_a: return "degenerate_a";
    case LimitCase::fourth_order_b: return "fourth_order_b";
    case LimitCase::diagonal_c: return "diagonal_c";
    case LimitCase::scalar_1d: return "scalar_1d";
  }
  return "?";
}

/// Tagged homogenised limit. Case b carries the scalar factor 1/m(1/alpha)
/// of the nonlocal 4th-order descriptor; case c the diagonal constant matrix;
/// the 1-D regular case the scalar 1/m(1/alpha).
struct HomogenisedLimit {
  LimitCase tag = LimitCase::scalar_1d;
  double scalar = 0;
  std::vector<double> diagonal;
  int dimension = 1;
};

inline bool mean_degenerate(const LaminateProfile& alpha,
                            const Tolerances& tol) {
  return std::abs(mean(alpha)) <= tol.degeneracy * alpha.max_abs();
}

inline bool mean_inv_degenerate(const LaminateProfile& alpha,
                                const Tolerances& tol) {
  return std::abs(mean_inv(alpha)) <= tol.degeneracy / alpha.min_abs();
}

/// degenerate_a iff m(1/alpha) = 0; fourth_order_b iff m(alpha) = 0 and
/// m(1/alpha) != 0; diagonal_c otherwise (all up to scaled tolerance).
inline LimitCase classify(const LaminateProfile& alpha,
                          const Tolerances& tol = Tolerances::defaults()) {
  if (mean_inv_degenerate(alpha, tol)) return LimitCase::degenerate_a;
  if (mean_degenerate(alpha, tol)) return LimitCase::fourth_order_b;
  return LimitCase::diagonal_c;
}

/// 1-D limit: the scalar 1/m(1/alpha) for the regular case, the degenerate
/// relation (empty inner spectrum) otherwise.
inline HomogenisedLimit g_limit_1d(const LaminateProfile& alpha,
                                   const Tolerances& tol =
                                       Tolerances::defaults()) {
  HomogenisedLimit lim;
  lim.dimension = 1;
  if (mean_inv_degenerate(alpha, tol)) {
    lim.tag = LimitCase::degenerate_a;
    return lim;
  }
  lim.tag = LimitCase::scalar_1d;
  lim.scalar = 1.0 / mean_inv(alpha);
  return lim;
}

inline HomogenisedLimit limit_coefficient(const LaminateProfile& alpha, int d,
                                          const Tolerances& tol =
                                              Tolerances::defaults()) {
  if (d < 2) throw std::invalid_argument("limit_coefficient needs d >= 2");
  HomogenisedLimit lim;
  lim.dimension = d;
  lim.tag = classify(alpha, tol);
  switch (lim.tag) {
    case LimitCase::degenerate_a:
      break;
    case LimitCase::fourth_order_b:
      lim.scalar = 1.0 / mean_inv(alpha);
      break;
    default: {
      lim.tag = LimitCase::diagonal_c;
      lim.diagonal.assign(static_cast<std::size_t>(d), mean(alpha));
      lim.diagonal[0] = 1.0 / mean_inv(alpha);
      break;
    }
  }
  return lim;
}

/// Per-Fourier-mode multiplier of the inverse of the compressed shifted limit:
///   m((alpha-l)^{-1}) sum_m k_m^2 /
///     (k_1^2 + m((alpha-l)^{-1}) m(alpha-l) sum_{m>=2} k_m^2).
/// Its lambda -> 0 behaviour separates the three cases; vanishing
/// denominators are the limit-spectrum generators and raise pole_error.
inline std::complex<double> resolvent_multiplier(
    const LaminateProfile& alpha, std::complex<double> lambda,
    const std::vector<int>& k) {
  if (k.size() < 2)
    throw std::invalid_argument("resolvent_multiplier needs dim >= 2 modes");
  for (int km : k)
    if (km < 1) throw std::invalid_argument("mode indices must be >= 1");
  const std::complex<double> mr = mean_resolvent(alpha, lambda);
  const std::complex<double> ma = mean(alpha) - lambda;
  double sum_all = 0, sum_tail = 0;
  for (std::size_t m = 0; m < k.size(); ++m) {
    const double ksq = static_cast<double>(k[m]) * k[m];
    sum_all += ksq;
    if (m >= 1) sum_tail += ksq;
  }
  const double k1sq = static_cast<double>(k[0]) * k[0];
  const std::complex<double> den = k1sq + mr * ma * sum_tail;
  if (std::abs(den) <= 1e-14 * sum_all)
    throw pole_error(
        "resolvent multiplier pole: this mode generates a limit spectral "
        "point");
  return mr * sum_all / den;
}

enum class SpectrumKind { all_of_C, countable_closure, empty };

inline const char* to_string(SpectrumKind k) {
  switch (k) {
    case SpectrumKind::all_of_C: return "all_of_C";
    case SpectrumKind::countable_closure: return "countable_closure";
    case SpectrumKind::empty: return "empty";
  }
  return "?";
}

/// Truncated generator set of a limit inner spectrum. For case b the set
/// accumulates both at 0 and at infinity; no finite truncation shows that,
/// hence the explicit markers.
struct LimitSpectrum {
  SpectrumKind kind = SpectrumKind::countable_closure;
  std::vector<double> points;
  std::string generator;
  bool accumulates_at_zero = false;
  bool unbounded = false;
};

namespace detail {

template <class F>
void for_each_mode(int d, int k_max, F&& f) {
  std::vector<int> k(static_cast<std::size_t>(d), 1);
  while (true) {
    f(k);
    std::size_t axis = 0;
    while (axis < k.size() && ++k[axis] > k_max) {
      k[axis] = 1;
      ++axis;
    }
    if (axis == k.size()) break;
  }
}

inline void sort_dedup(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(),
                      [](double a, double b) {
                        return std::abs(a - b) <=
                               1e-12 * std::max(1.0, std::abs(a));
                      }),
          v.end());
}

}  // namespace detail

inline LimitSpectrum limit_inner_spectrum(const LaminateProfile& alpha, int d,
                                          int k_max,
                                          const Tolerances& tol =
                                              Tolerances::defaults()) {
  if (d < 2) throw std::invalid_argument("limit_inner_spectrum needs d >= 2");
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  double count = 1;
  for (int i = 0; i < d; ++i) count *= k_max;
  if (count > 2e7)
    throw std::invalid_argument("limit_inner_spectrum: k_max^d too large");

  LimitSpectrum spec;
  const LimitCase c = classify(alpha, tol);
  if (c == LimitCase::degenerate_a) {
    spec.kind = SpectrumKind::all_of_C;
    spec.generator = "all of C";
    return spec;
  }
  const double mi = mean_inv(alpha);
  const double ma = mean(alpha);
  if (c == LimitCase::fourth_order_b) {
    spec.kind = SpectrumKind::countable_closure;
    spec.generator = "(1/m(1/alpha)) * k1^2 / (k2^2 + ... + kd^2)";
    spec.accumulates_at_zero = true;
    spec.unbounded = true;
    detail::for_each_mode(d, k_max, [&](const std::vector<int>& k) {
      double tail = 0;
      for (std::size_t m = 1; m < k.size(); ++m)
        tail += static_cast<double>(k[m]) * k[m];
      const double k1sq = static_cast<double>(k[0]) * k[0];
      spec.points.push_back(k1sq / (mi * tail));
    });
    detail::sort_dedup(spec.points);
    return spec;
  }
  // Case c: the closed-form generators are only available when
  // m(alpha) m(1/alpha) > 0.
  if (!(ma * mi > 0))
    throw degenerate_error(
        "limit spectrum formula withheld: case c with m(alpha) m(1/alpha) < 0 "
        "has no closed-form generator set");
  spec.kind = SpectrumKind::countable_closure;
  spec.generator =
      "m(1/alpha) * (k1^2+...+kd^2) / (k1^2 + m(1/alpha) m(alpha) * "
      "(k2^2+...+kd^2))";
  detail::for_each_mode(d, k_max, [&](const std::vector<int>& k) {
    double tail = 0, all = 0;
    for (std::size_t m = 0; m < k.size(); ++m) {
      const double ksq = static_cast<double>(k[m]) * k[m];
      all += ksq;
      if (m >= 1) tail += ksq;
    }
    const double k1sq = static_cast<double>(k[0]) * k[0];
    spec.points.push_back(mi * all / (k1sq + mi * ma * tail));
  });
  detail::sort_dedup(spec.points);
  return spec;
}

/// 1-D limit spectrum: {1/m(1/alpha)} in the regular case, empty for the
/// degenerate relation.
inline LimitSpectrum limit_inner_spectrum_1d(const LaminateProfile& alpha,
                                             const Tolerances& tol =
                                                 Tolerances::defaults()) {
  LimitSpectrum spec;
  if (mean_inv_degenerate(alpha, tol)) {
    spec.kind = SpectrumKind::empty;
    spec.generator = "empty";
    return spec;
  }
  spec.kind = SpectrumKind::countable_closure;
  spec.generator = "1/m(1/alpha)";
  spec.points = {1.0 / mean_inv(alpha)};
  return spec;
}

/// Inner spectrum generators of Gamma = diag(gamma, 1, ..., 1) on the unit
/// box: (gamma k1^2 + k2^2+...+kd^2) / (k1^2+...+kd^2); all points lie
/// between min(gamma, 1) and max(gamma, 1).
inline LimitSpectrum gamma_inner_spectrum(double gamma, int d, int k_max) {
  if (!(gamma > 0)) throw std::invalid_argument("gamma must be positive");
  if (d < 2) throw std::invalid_argument("gamma_inner_spectrum needs d >= 2");
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  double count = 1;
  for (int i = 0; i < d; ++i) count *= k_max;
  if (count > 2e7)
    throw std::invalid_argument("gamma_inner_spectrum: k_max^d too large");
  LimitSpectrum spec;
  spec.kind = SpectrumKind::countable_closure;
  spec.generator = "(gamma k1^2 + k2^2+...+kd^2) / (k1^2+...+kd^2)";
  detail::for_each_mode(d, k_max, [&](const std::vector<int>& k) {
    double tail = 0, all = 0;
    for (std::size_t m = 0; m < k.size(); ++m) {
      const double ksq = static_cast<double>(k[m]) * k[m];
      all += ksq;
      if (m >= 1) tail += ksq;
    }
    const double k1sq = static_cast<double>(k[0]) * k[0];
    spec.points.push_back((gamma * k1sq + tail) / all);
  });
  detail::sort_dedup(spec.points);
  return spec;
}

}  // namespace lamspec

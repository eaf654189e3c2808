// d-dimensional well-posedness on (0,1) x cross-section via the q~-criterion
// over a discrete sequence of cross-section eigenvalues, and the discrete
// part of the inner spectrum through the shift scan s -> p_{alpha-s}(t).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lamspec/core.hpp"
#include "lamspec/one_dim.hpp"
#include "lamspec/polynomial.hpp"
#include "lamspec/profile.hpp"

namespace lamspec {

constexpr double kPi = 3.14159265358979323846;

/// Strictly positive separated reals, e.g. Dirichlet-Laplacian eigenvalues of
/// the cross-section.
struct DiscreteSequence {
  enum class Source { dirichlet_box, user };

  std::vector<double> values;  // sorted, distinct
  double separation = 0;       // min pairwise gap
  Source source = Source::user;
  int dim = 0;    // cross-section dimension for dirichlet_box
  int k_max = 0;  // per-axis cap for dirichlet_box

  double min_value() const { return values.front(); }

  static DiscreteSequence from_values(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("sequence must be non-empty");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.front() <= 0)
      throw std::invalid_argument("sequence values must be positive");
    DiscreteSequence seq;
    seq.values = std::move(v);
    seq.separation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < seq.values.size(); ++i)
      seq.separation =
          std::min(seq.separation, seq.values[i + 1] - seq.values[i]);
    if (seq.values.size() == 1) seq.separation = seq.values[0];
    seq.source = Source::user;
    return seq;
  }
};

/// Sorted distinct values of pi^2 sum k_m^2 over k in {1..k_max}^dim; the
/// Dirichlet-Laplacian spectrum of the unit box cross-section, truncated.
inline DiscreteSequence dirichlet_eigenvalues(int dim, int k_max) {
  if (dim < 1 || k_max < 1)
    throw std::invalid_argument("dirichlet_eigenvalues needs dim, k_max >= 1");
  double count = 1;
  for (int i = 0; i < dim; ++i) count *= k_max;
  if (count > 2e7)
    throw std::invalid_argument("dirichlet_eigenvalues: k_max^dim too large");

  std::set<std::int64_t> sums;
  std::vector<int> k(dim, 1);
  while (true) {
    std::int64_t s = 0;
    for (int i = 0; i < dim; ++i) s += static_cast<std::int64_t>(k[i]) * k[i];
    sums.insert(s);
    int axis = 0;
    while (axis < dim && ++k[axis] > k_max) {
      k[axis] = 1;
      ++axis;
    }
    if (axis == dim) break;
  }
  DiscreteSequence seq;
  seq.values.reserve(sums.size());
  std::int64_t prev = 0;
  std::int64_t min_gap = std::numeric_limits<std::int64_t>::max();
  bool first = true;
  for (std::int64_t s : sums) {
    seq.values.push_back(kPi * kPi * static_cast<double>(s));
    if (!first) min_gap = std::min(min_gap, s - prev);
    prev = s;
    first = false;
  }
  seq.separation = sums.size() > 1
                       ? kPi * kPi * static_cast<double>(min_gap)
                       : seq.values[0];
  seq.source = DiscreteSequence::Source::dirichlet_box;
  seq.dim = dim;
  seq.k_max = k_max;
  return seq;
}

struct QCriterionWitness {
  std::size_t k_index = 0;
  double d = 0;
  double q_value = 0;
};

struct QCriterionResult {
  bool satisfied = false;
  double delta0 = 0;  // largest grid-verified delta
  std::optional<QCriterionWitness> witness;
  std::size_t k_checked = 0;    // directly evaluated sequence entries
  std::size_t k_certified = 0;  // certified through the chi(alpha) tail route
  double mu_star = 0;           // certificate threshold on mu = sqrt(lambda)
  bool tail_certified = false;
  std::vector<std::string> skipped;  // (k, d) pairs with lambda_k + sgn*d <= 0
  std::vector<std::string> diagnostics;
};

struct CutoffPolicy {
  double probe_start = 1.0;
  double probe_factor = 2.0;
  double probe_max = 1e8;
  double chi_fraction = 0.25;  // required closeness of mu q~ to chi
  int stable_probes = 3;       // consecutive probes that must stay close
};

/// Checks q~ != 0 at m_j = sqrt(lambda_k + sgn(alpha_j) d) for d in the given
/// grid (both signs, plus 0) and all k up to the asymptotic cutoff; the tail
/// is certified through |mu q~(mu,..,mu) - chi| staying under
/// chi_fraction*|chi| from mu_star on, provided chi(alpha) != 0.
inline QCriterionResult qcrit_check(const LaminateProfile& alpha,
                                    const DiscreteSequence& seq,
                                    const std::vector<double>& delta_grid,
                                    const CutoffPolicy& policy = {},
                                    const Tolerances& tol =
                                        Tolerances::defaults()) {
  QCriterionResult res;
  if (!is_well_posed_1d(alpha, tol))
    res.diagnostics.push_back(
        "m(1/alpha) = 0: the well-posedness interpretation of the criterion "
        "does not apply (checked anyway)");

  // Signed perturbation values, zero first.
  std::vector<double> ds{0.0};
  for (double d : delta_grid) {
    if (!(d >= 0) || !std::isfinite(d))
      throw std::invalid_argument("delta grid entries must be >= 0");
    if (d > 0) {
      ds.push_back(d);
      ds.push_back(-d);
    }
  }

  const double c = chi(alpha);
  const double chi_tol = 1e-12;
  const double delta_max =
      delta_grid.empty() ? 0.0
                         : *std::max_element(delta_grid.begin(),
                                             delta_grid.end());

  // Empirical tail certificate: probe mu q~ against chi on a geometric grid,
  // at equal arguments and at the delta_max-perturbed arguments.
  double mu_star = 0;
  bool tail = false;
  if (std::abs(c) > chi_tol) {
    auto close_enough = [&](double mu) {
      const double g0 = std::abs(mu * q_tilde_equal(alpha, mu) - c);
      if (g0 >= policy.chi_fraction * std::abs(c)) return false;
      if (delta_max > 0 && mu * mu > delta_max) {
        std::vector<double> m(alpha.slab_count());
        for (std::size_t j = 0; j < m.size(); ++j) {
          const double sg = alpha.values()[j] > 0 ? 1.0 : -1.0;
          m[j] = std::sqrt(mu * mu + sg * delta_max);
        }
        const double g1 = std::abs(mu * q_tilde(alpha, m) - c);
        if (g1 >= policy.chi_fraction * std::abs(c)) return false;
      }
      return true;
    };
    int streak = 0;
    for (double mu = policy.probe_start; mu <= policy.probe_max;
         mu *= policy.probe_factor) {
      if (close_enough(mu)) {
        if (streak == 0) mu_star = mu;
        if (++streak >= policy.stable_probes) {
          tail = true;
          break;
        }
      } else {
        streak = 0;
      }
    }
  } else {
    res.diagnostics.push_back(
        "chi(alpha) = 0: asymptotic certification impossible; only finitely "
        "many sequence entries are checked");
  }
  res.mu_star = tail ? mu_star : 0.0;
  res.tail_certified = tail;

  // Pass/fail per grid magnitude; delta0 is the largest prefix of the sorted
  // grid that passed, provided d = 0 passed.
  std::vector<double> grid_sorted(delta_grid);
  std::sort(grid_sorted.begin(), grid_sorted.end());
  std::set<double> failed_abs;
  bool zero_ok = true;

  auto check_pair = [&](std::size_t k_index, double d) -> std::optional<double> {
    const double lk = seq.values[k_index];
    std::vector<double> m(alpha.slab_count());
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double sg = alpha.values()[j] > 0 ? 1.0 : -1.0;
      const double msq = lk + sg * d;
      if (msq <= 0) {
        res.skipped.push_back("k=" + std::to_string(k_index) +
                              " d=" + std::to_string(d) +
                              ": lambda_k + sgn(alpha_j) d <= 0, pair skipped");
        return std::nullopt;
      }
      m[j] = std::sqrt(msq);
    }
    const auto ev = q_tilde_eval(alpha, m);
    if (!ev.nonzero(tol.eps_p)) return ev.value;
    return std::nullopt;  // fine
  };

  std::size_t checked = 0, certified = 0;
  for (std::size_t k = 0; k < seq.values.size(); ++k) {
    const double mu_guard =
        (seq.values[k] > delta_max) ? std::sqrt(seq.values[k] - delta_max)
                                    : 0.0;
    if (tail && mu_guard >= mu_star) {
      ++certified;
      continue;
    }
    ++checked;
    for (double d : ds) {
      auto bad = check_pair(k, d);
      if (bad) {
        if (!res.witness) res.witness = QCriterionWitness{k, d, *bad};
        if (d == 0.0)
          zero_ok = false;
        else
          failed_abs.insert(std::abs(d));
      }
    }
  }
  res.k_checked = checked;
  res.k_certified = certified;

  double delta_ok = 0;
  if (zero_ok) {
    for (double g : grid_sorted) {
      if (failed_abs.count(g)) break;
      delta_ok = g;
    }
  }
  res.delta0 = delta_ok;
  res.satisfied = !res.witness.has_value();
  return res;
}

/// Sufficient condition: p_alpha has no zero on [t0, 1] with
/// t0 = tanh(sqrt(min lambda_k) h), decided by Sturm-sequence counting on the
/// exact polynomial coefficients.
inline bool well_posed_dd(const LaminateProfile& alpha,
                          const DiscreteSequence& seq,
                          const Tolerances& tol = Tolerances::defaults()) {
  if (!is_well_posed_1d(alpha, tol))
    throw degenerate_error(
        "m(1/alpha) = 0: degenerate profile; see the homogenize command, "
        "case a");
  const double t0 = std::tanh(std::sqrt(seq.min_value()) * alpha.h());
  const Poly P = p_alpha_coeffs(alpha);
  const auto chain = sturm_chain(P);
  const auto at_t0 = p_alpha_eval(alpha, t0);
  if (!at_t0.nonzero(tol.eps_p)) return false;
  return count_roots(chain, t0, 1.0) == 0;
}

struct ScanRoot {
  double s = 0;       // shift (spectral candidate)
  double t = 0;       // tanh(mu_k h), or exactly 1 for the limit point
  long k_index = -1;  // sequence index, -1 for t = 1
  double residual = 0;  // |p_{alpha-s}(t)| on re-evaluation
};

struct SpectrumReportDD {
  std::vector<double> value_points;
  std::vector<ScanRoot> scan_roots;
  std::vector<double> mean_zero_shifts;
  double bound_A = 0;
  bool continuous_spectrum_caveat = true;  // only sigma_c subset [-A,A] known
};

namespace detail {

// Re-evaluate p_{alpha-s}(t) through the tanh-scaled branch: for t < 1 via
// mu q~ at equal arguments mu = atanh(t)/h, for t = 1 via chi.
inline double reevaluate_shifted(const LaminateProfile& alpha, double s,
                                 double t) {
  const LaminateProfile shifted = alpha.shifted(s);
  if (t >= 1.0) return chi(shifted);
  const double mu = std::atanh(t) / alpha.h();
  if (!(mu > 0)) return p_alpha(shifted, t);
  return mu * q_tilde_equal(shifted, mu);
}

}  // namespace detail

/// Discrete-part scan of the inner spectrum over [-A, A]: for each
/// t in {tanh(sqrt(lambda_k) h)} u {1}, all real roots s of p_{alpha-s}(t)
/// off the coefficient values, plus the mean-zero shifts, plus the values
/// themselves. The continuous part is only known to sit inside [-A, A].
inline SpectrumReportDD inner_spectrum_dd(const LaminateProfile& alpha,
                                          const DiscreteSequence& seq,
                                          double A, double s_resolution = 0,
                                          const Tolerances& tol =
                                              Tolerances::defaults()) {
  if (!(A > alpha.max_abs()))
    throw std::invalid_argument("bound A must exceed max |alpha_j|");
  SpectrumReportDD report;
  report.bound_A = A;
  {
    auto wv = alpha.values();
    std::sort(wv.begin(), wv.end());
    wv.erase(std::unique(wv.begin(), wv.end()), wv.end());
    report.value_points = std::move(wv);
  }

  const double h = alpha.h();
  const double scale = std::max(1.0, alpha.max_abs());
  const double exclusion = 1e-9 * scale;

  // The t grid: values indistinguishable from 1 in double precision are
  // subsumed by the limit point t = 1.
  std::vector<std::pair<double, long>> ts;
  for (std::size_t k = 0; k < seq.values.size(); ++k) {
    const double mu = std::sqrt(seq.values[k]);
    if (detail::one_minus_tanh(mu * h) < 1e-14) continue;
    const double t = std::tanh(mu * h);
    if (!ts.empty() && std::abs(ts.back().first - t) < 1e-15) continue;
    ts.emplace_back(t, static_cast<long>(k));
  }
  ts.emplace_back(1.0, -1);

  for (auto [t, k_index] : ts) {
    const Poly N = shifted_char_numerator(alpha, t);
    std::vector<double> roots = real_roots_in(N, -A, A);

    if (s_resolution > 0) {
      // Grid cross-check: pick up any sign change of N the enumeration may
      // have missed (it should not) by bisection.
      double prev_s = -A, prev_v = N(-A);
      for (double s = -A + s_resolution; s <= A + 0.5 * s_resolution;
           s += s_resolution) {
        const double v = N(std::min(s, A));
        if (prev_v * v < 0) {
          bool near_known = false;
          for (double rt : roots)
            if (rt >= prev_s - s_resolution && rt <= s + s_resolution)
              near_known = true;
          if (!near_known) {
            double lo = prev_s, hi = std::min(s, A), flo = prev_v;
            for (int it = 0; it < 80; ++it) {
              const double mid = 0.5 * (lo + hi), fm = N(mid);
              if (flo * fm <= 0)
                hi = mid;
              else {
                lo = mid;
                flo = fm;
              }
            }
            roots.push_back(0.5 * (lo + hi));
          }
        }
        prev_s = std::min(s, A);
        prev_v = v;
      }
      std::sort(roots.begin(), roots.end());
    }

    for (double s : roots) {
      bool on_value = false;
      for (double v : alpha.values())
        if (std::abs(s - v) <= exclusion) on_value = true;
      if (on_value) continue;
      const double residual = std::abs(detail::reevaluate_shifted(alpha, s, t));
      if (residual > 1e-9 * std::max(1.0, scale)) continue;
      report.scan_roots.push_back(ScanRoot{s, t, k_index, residual});
    }
  }

  std::sort(report.scan_roots.begin(), report.scan_roots.end(),
            [](const ScanRoot& a, const ScanRoot& b) {
              if (a.s != b.s) return a.s < b.s;
              return a.t < b.t;
            });

  for (double s : mean_zero_shifts(alpha, tol.eps_p))
    if (s >= -A && s <= A) report.mean_zero_shifts.push_back(s);
  return report;
}

}  // namespace lamspec

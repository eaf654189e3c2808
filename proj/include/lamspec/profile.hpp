// Piecewise-constant coefficient profiles on (0,1) with equal slab widths,
// plus the numeric tolerances shared across the library.
#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamspec {

/// Thrown when a well-posedness hypothesis fails (e.g. the mean of 1/alpha
/// vanishes and the requested operation has no meaning in that regime).
class degenerate_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a requested evaluation sits on a pole of the expression.
class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {
inline double env_or(const char* name, double fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    const double parsed = std::strtod(v, &end);
    if (end != v && std::isfinite(parsed) && parsed > 0) return parsed;
  }
  return fallback;
}
}  // namespace detail

struct Tolerances {
  // Relative threshold for "p != 0" decisions, measured against the largest
  // intermediate term of the matrix product that produced p.
  double eps_p = 1e-9;
  // Degeneracy threshold for integral means, scaled by max_j |1/alpha_j|.
  double degeneracy = 1e-12;
  // Eigensolver convergence threshold.
  double eigensolver = 1e-12;
  // Coefficient values must exceed this in magnitude.
  double zero_value = 1e-12;

  // Defaults may be overridden through the environment; explicit CLI flags
  // still win over these.
  static Tolerances defaults() {
    Tolerances t;
    t.eps_p = detail::env_or("LAMSPEC_EPS_P", t.eps_p);
    t.degeneracy = detail::env_or("LAMSPEC_DEGENERACY_TOL", t.degeneracy);
    t.eigensolver = detail::env_or("LAMSPEC_EIG_TOL", t.eigensolver);
    t.zero_value = detail::env_or("LAMSPEC_ZERO_TOL", t.zero_value);
    return t;
  }
};

/// alpha = sum_j alpha_j 1_{(j h, (j+1) h]} with h = 1/(r+1).
/// All slab values are nonzero and slab widths are equal by construction.
class LaminateProfile {
 public:
  explicit LaminateProfile(std::vector<double> values,
                           double zero_tol = Tolerances::defaults().zero_value)
      : values_(std::move(values)) {
    if (values_.empty())
      throw std::invalid_argument("laminate profile needs at least one slab");
    for (double v : values_) {
      if (!std::isfinite(v))
        throw std::invalid_argument("laminate profile values must be finite");
      if (std::abs(v) <= zero_tol)
        throw std::invalid_argument(
            "laminate profile values must be nonzero (|alpha_j| > " +
            std::to_string(zero_tol) + ")");
    }
  }

  const std::vector<double>& values() const { return values_; }
  std::size_t slab_count() const { return values_.size(); }
  /// r in the alpha_0..alpha_r indexing.
  std::size_t r() const { return values_.size() - 1; }
  double h() const { return 1.0 / static_cast<double>(values_.size()); }

  /// Slab index of x under the (jh, (j+1)h] convention.
  std::size_t slab_of(double x) const {
    const double scaled = x * static_cast<double>(values_.size());
    auto j = static_cast<long>(std::ceil(scaled)) - 1;
    if (j < 0) j = 0;
    if (j >= static_cast<long>(values_.size()))
      j = static_cast<long>(values_.size()) - 1;
    return static_cast<std::size_t>(j);
  }

  double value_at(double x) const { return values_[slab_of(x)]; }

  double max_abs() const {
    double m = 0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  double min_abs() const {
    double m = std::abs(values_.front());
    for (double v : values_) m = std::min(m, std::abs(v));
    return m;
  }

  /// alpha - s, slab by slab. Throws if the shift lands on a slab value.
  LaminateProfile shifted(double s) const {
    std::vector<double> out(values_);
    for (double& v : out) v -= s;
    return LaminateProfile(std::move(out));
  }

  LaminateProfile scaled(double mu) const {
    std::vector<double> out(values_);
    for (double& v : out) v *= mu;
    return LaminateProfile(std::move(out));
  }

 private:
  std::vector<double> values_;
};

}  // namespace lamspec

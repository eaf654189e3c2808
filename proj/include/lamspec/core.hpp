// Transition matrices across single slabs, the characteristic function
// p_{alpha,beta} of a piecewise-constant Sturm-Liouville pencil, the
// polynomial p_alpha(t), chi(alpha), and the overflow-safe q~/w~ forms.
//
// Conventions. A slab of width h carries u'' = tau u; the transition matrix
// maps (u(0), u'(0)) to (u(h), u'(h)). For a profile with slabs
// alpha_0..alpha_r the characteristic value is u(1) of the shooting solution
// with u(0)=0, u'(0)=1, where u is continuous and alpha u' is continuous
// across interfaces. For r >= 1 this equals the row-matrix-column product
//
//   (a00^(r), a01^(r)/alpha_r) Atilde_{r-1} ... Atilde_1 (a01^(0), alpha_0 a11^(0))^T,
//
// with Atilde_j = diag(1,alpha_j) A^(j) diag(1,1/alpha_j). For r = 0 the
// shooting value is a01^(0) of the single slab; all identities used here
// (p_{alpha,0} = alpha_0 m(1/alpha), mu w~ = chi, mu q~(mu,..,mu) =
// p_alpha(tanh(mu h)), p_alpha(1) = chi) then hold uniformly in r.
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lamspec/polynomial.hpp"
#include "lamspec/profile.hpp"

namespace lamspec {

enum class Regime { zero, positive, negative };

/// Transition matrix of u'' = tau u across one slab of width h; det = 1.
struct TransitionMatrix {
  double a00 = 1, a01 = 0, a10 = 0, a11 = 1;
  Regime regime = Regime::zero;
  double mu = 0;  // sqrt(|tau|) for the non-zero regimes

  double det() const { return a00 * a11 - a01 * a10; }
};

inline TransitionMatrix transition_matrix(double h, double tau) {
  if (!(h > 0) || !std::isfinite(h) || !std::isfinite(tau))
    throw std::invalid_argument("transition_matrix requires finite h > 0, tau");
  TransitionMatrix A;
  if (tau == 0.0) {
    A = {1.0, h, 0.0, 1.0, Regime::zero, 0.0};
  } else if (tau > 0.0) {
    const double mu = std::sqrt(tau);
    const double c = std::cosh(mu * h), s = std::sinh(mu * h);
    A = {c, s / mu, mu * s, c, Regime::positive, mu};
  } else {
    const double mu = std::sqrt(-tau);
    const double c = std::cos(mu * h), s = std::sin(mu * h);
    A = {c, s / mu, -mu * s, c, Regime::negative, mu};
  }
  return A;
}

/// Value/scale pair: value is the reported (possibly cosh-rescaled) number,
/// scale the extracted prod cosh(m_j h) factor (1 in the raw form), and
/// magnitude the largest intermediate product term seen while accumulating -
/// the reference for relative "p != 0" decisions.
struct CharacteristicEvaluation {
  enum class Form { raw, tanh_scaled };
  double value = 0;
  double scale = 1;
  Form form = Form::raw;
  double magnitude = 1;

  double raw_value() const { return value * scale; }
  bool nonzero(double eps_p) const {
    return std::abs(value) > eps_p * magnitude;
  }
};

namespace detail {

// 1 - tanh(s) without cancellation for large s.
inline double one_minus_tanh(double s) {
  const double e = std::exp(-2.0 * s);
  return 2.0 * e / (1.0 + e);
}

struct Mat2 {
  double m00, m01, m10, m11;
};

// Row-vector accumulation v <- v * M, tracking the largest product term.
inline void accumulate(double& v0, double& v1, const Mat2& M, double& witness) {
  const double p00 = v0 * M.m00, p10 = v1 * M.m10;
  const double p01 = v0 * M.m01, p11 = v1 * M.m11;
  witness = std::max({witness, std::abs(p00), std::abs(p10), std::abs(p01),
                      std::abs(p11)});
  v0 = p00 + p10;
  v1 = p01 + p11;
}

// Per-slab matrix for the characteristic product, optionally with the cosh
// factor extracted (positive regime only; the other regimes are bounded).
inline Mat2 slab_matrix(double h, double tau, bool extract_cosh,
                        double& scale) {
  if (tau > 0.0) {
    const double mu = std::sqrt(tau);
    if (extract_cosh) {
      const double t = std::tanh(mu * h);
      scale *= std::cosh(mu * h);
      return {1.0, t / mu, mu * t, 1.0};
    }
    const double c = std::cosh(mu * h), s = std::sinh(mu * h);
    return {c, s / mu, mu * s, c};
  }
  if (tau < 0.0) {
    const double mu = std::sqrt(-tau);
    const double c = std::cos(mu * h), s = std::sin(mu * h);
    return {c, s / mu, -mu * s, c};
  }
  return {1.0, h, 0.0, 1.0};
}

inline CharacteristicEvaluation char_eval(const LaminateProfile& alpha,
                                          const std::vector<double>& beta,
                                          bool tanh_scaled) {
  const auto& a = alpha.values();
  const std::size_t r = alpha.r();
  const double h = alpha.h();
  CharacteristicEvaluation out;
  out.form = tanh_scaled ? CharacteristicEvaluation::Form::tanh_scaled
                         : CharacteristicEvaluation::Form::raw;
  out.scale = 1.0;

  if (r == 0) {
    // Single slab: shooting value u(1) = a01 of the lone transition matrix.
    const Mat2 A = slab_matrix(h, beta[0] / a[0], tanh_scaled, out.scale);
    out.value = A.m01;
    out.magnitude = std::max(std::abs(A.m01), 1.0);
    return out;
  }

  const Mat2 Ar = slab_matrix(h, beta[r] / a[r], tanh_scaled, out.scale);
  double v0 = Ar.m00, v1 = Ar.m01 / a[r];
  double witness = std::max(std::abs(v0), std::abs(v1));
  for (std::size_t j = r - 1; j >= 1; --j) {
    const Mat2 A = slab_matrix(h, beta[j] / a[j], tanh_scaled, out.scale);
    const Mat2 conj = {A.m00, A.m01 / a[j], a[j] * A.m10, A.m11};
    accumulate(v0, v1, conj, witness);
  }
  const Mat2 A0 = slab_matrix(h, beta[0] / a[0], tanh_scaled, out.scale);
  const double c0 = A0.m01, c1 = a[0] * A0.m11;
  witness = std::max({witness, std::abs(v0 * c0), std::abs(v1 * c1)});
  out.value = v0 * c0 + v1 * c1;
  out.magnitude = std::max(witness, 1e-300);
  return out;
}

}  // namespace detail

/// Characteristic function of (alpha, beta). When every beta_j/alpha_j >= 0
/// the tanh-scaled form is returned (prod cosh extracted, overflow-safe);
/// otherwise the raw bounded-entry product.
inline CharacteristicEvaluation char_function(const LaminateProfile& alpha,
                                              const std::vector<double>& beta) {
  if (beta.size() != alpha.slab_count())
    throw std::invalid_argument("beta must have one value per slab");
  for (double b : beta)
    if (!std::isfinite(b))
      throw std::invalid_argument("beta values must be finite");
  bool all_nonneg = true;
  for (std::size_t j = 0; j < beta.size(); ++j)
    if (beta[j] / alpha.values()[j] < 0.0) all_nonneg = false;
  return detail::char_eval(alpha, beta, all_nonneg);
}

/// Raw-form evaluation regardless of regime; entries may overflow for large
/// positive beta_j/alpha_j, which is precisely what the tanh-scaled form of
/// char_function avoids.
inline CharacteristicEvaluation char_function_raw(
    const LaminateProfile& alpha, const std::vector<double>& beta) {
  if (beta.size() != alpha.slab_count())
    throw std::invalid_argument("beta must have one value per slab");
  return detail::char_eval(alpha, beta, false);
}

/// chi(alpha) = prod_{j=0}^{r-1} (1 + alpha_j/alpha_{j+1}); empty product for
/// a single slab.
inline double chi(const LaminateProfile& alpha) {
  const auto& a = alpha.values();
  double prod = 1.0;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) prod *= 1.0 + a[j] / a[j + 1];
  return prod;
}

/// p_alpha(t) with the largest-intermediate-term witness.
inline CharacteristicEvaluation p_alpha_eval(const LaminateProfile& alpha,
                                             double t) {
  const auto& a = alpha.values();
  const std::size_t r = alpha.r();
  CharacteristicEvaluation out;
  out.form = CharacteristicEvaluation::Form::raw;
  if (r == 0) {
    out.value = t;
    out.magnitude = std::max(std::abs(t), 1.0);
    return out;
  }
  double v0 = 1.0, v1 = t / a[r];
  double witness = std::max(std::abs(v0), std::abs(v1));
  for (std::size_t j = r - 1; j >= 1; --j) {
    const detail::Mat2 M = {1.0, t / a[j], a[j] * t, 1.0};
    detail::accumulate(v0, v1, M, witness);
  }
  witness = std::max({witness, std::abs(v0 * t), std::abs(v1 * a[0])});
  out.value = v0 * t + v1 * a[0];
  out.magnitude = std::max(witness, 1e-300);
  return out;
}

inline double p_alpha(const LaminateProfile& alpha, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
  return p_alpha_eval(alpha, t).value;
}

/// Coefficients of the polynomial t -> p_alpha(t) (degree <= r+1), obtained
/// by propagating coefficient vectors through the matrix product; exact in
/// the inputs, no interpolation.
inline Poly p_alpha_coeffs(const LaminateProfile& alpha) {
  const auto& a = alpha.values();
  const std::size_t r = alpha.r();
  const Poly x({0.0, 1.0});
  if (r == 0) return x;
  Poly v0 = Poly::constant(1.0);
  Poly v1 = Poly({0.0, 1.0 / a[r]});
  for (std::size_t j = r - 1; j >= 1; --j) {
    const Poly m01({0.0, 1.0 / a[j]});
    const Poly m10({0.0, a[j]});
    Poly n0 = v0 + v1 * m10;
    Poly n1 = v0 * m01 + v1;
    v0 = std::move(n0);
    v1 = std::move(n1);
  }
  return (v0 * x + Poly::constant(a[0]) * v1).trimmed();
}

/// q~(m_0,...,m_r) with t_j = tanh(m_j h); all m_j > 0 required.
inline CharacteristicEvaluation q_tilde_eval(const LaminateProfile& alpha,
                                             const std::vector<double>& m) {
  const auto& a = alpha.values();
  const std::size_t r = alpha.r();
  const double h = alpha.h();
  if (m.size() != alpha.slab_count())
    throw std::invalid_argument("m must have one value per slab");
  for (double v : m)
    if (!(v > 0) || !std::isfinite(v))
      throw std::invalid_argument("q_tilde requires m_j > 0");
  CharacteristicEvaluation out;
  out.form = CharacteristicEvaluation::Form::tanh_scaled;
  if (r == 0) {
    out.value = std::tanh(m[0] * h) / m[0];
    out.magnitude = std::max(std::abs(out.value), 1.0);
    return out;
  }
  double v0 = 1.0, v1 = std::tanh(m[r] * h) / (a[r] * m[r]);
  double witness = std::max(std::abs(v0), std::abs(v1));
  for (std::size_t j = r - 1; j >= 1; --j) {
    const double tj = std::tanh(m[j] * h);
    const detail::Mat2 M = {1.0, tj / (a[j] * m[j]), a[j] * m[j] * tj, 1.0};
    detail::accumulate(v0, v1, M, witness);
  }
  const double c0 = std::tanh(m[0] * h) / m[0];
  witness = std::max({witness, std::abs(v0 * c0), std::abs(v1 * a[0])});
  out.value = v0 * c0 + v1 * a[0];
  out.magnitude = std::max(witness, 1e-300);
  return out;
}

inline double q_tilde(const LaminateProfile& alpha,
                      const std::vector<double>& m) {
  return q_tilde_eval(alpha, m).value;
}

/// w~(m_0,...,m_r): the t_j -> 1 limit form of q~. mu * w~(mu,...,mu) equals
/// chi(alpha) identically.
inline double w_tilde(const LaminateProfile& alpha,
                      const std::vector<double>& m) {
  const auto& a = alpha.values();
  const std::size_t r = alpha.r();
  if (m.size() != alpha.slab_count())
    throw std::invalid_argument("m must have one value per slab");
  for (double v : m)
    if (!(v > 0) || !std::isfinite(v))
      throw std::invalid_argument("w_tilde requires m_j > 0");
  if (r == 0) return 1.0 / m[0];
  double v0 = 1.0, v1 = 1.0 / (a[r] * m[r]);
  double witness = 0;
  for (std::size_t j = r - 1; j >= 1; --j) {
    const detail::Mat2 M = {1.0, 1.0 / (a[j] * m[j]), a[j] * m[j], 1.0};
    detail::accumulate(v0, v1, M, witness);
  }
  return v0 / m[0] + v1 * a[0];
}

/// q~ at equal arguments (mu,...,mu); mu * this equals p_alpha(tanh(mu h)).
inline double q_tilde_equal(const LaminateProfile& alpha, double mu) {
  return q_tilde(alpha, std::vector<double>(alpha.slab_count(), mu));
}

inline double w_tilde_equal(const LaminateProfile& alpha, double mu) {
  return w_tilde(alpha, std::vector<double>(alpha.slab_count(), mu));
}

/// Cleared-denominator polynomial N(s) with
///   N(s) = p_{alpha - s}(t) * prod_{j=1}^{r} (alpha_j - s),
/// so the roots of s -> p_{alpha-s}(t) off the coefficient values are exactly
/// the roots of N there. Degree <= 2r.
inline Poly shifted_char_numerator(const LaminateProfile& alpha, double t) {
  const auto& a = alpha.values();
  const std::size_t r = alpha.r();
  if (r == 0) return Poly::constant(t);
  const Poly tc = Poly::constant(t);
  Poly v0({a[r], -1.0});  // (alpha_r - s)
  Poly v1 = tc;
  for (std::size_t j = r - 1; j >= 1; --j) {
    const Poly lin({a[j], -1.0});
    const Poly m00 = lin;
    const Poly m01 = tc;
    const Poly m10 = tc * lin * lin;
    const Poly m11 = lin;
    Poly n0 = v0 * m00 + v1 * m10;
    Poly n1 = v0 * m01 + v1 * m11;
    v0 = std::move(n0);
    v1 = std::move(n1);
  }
  return (v0 * tc + v1 * Poly({a[0], -1.0})).trimmed();
}

}  // namespace lamspec

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "lamspec/core.hpp"

using lamspec::LaminateProfile;
using lamspec::Poly;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> random_profile(std::mt19937& rng, int r_min, int r_max) {
  std::uniform_int_distribution<int> rdist(r_min, r_max);
  std::uniform_real_distribution<double> mag(0.1, 10.0);
  std::bernoulli_distribution sign(0.5);
  const int r = rdist(rng);
  std::vector<double> values(r + 1);
  for (auto& v : values) v = (sign(rng) ? 1.0 : -1.0) * mag(rng);
  return values;
}
}  // namespace

TEST_CASE("transition matrix: the three regimes") {
  const double h = 0.37;
  const auto A0 = lamspec::transition_matrix(h, 0.0);
  CHECK(A0.a00 == 1.0);
  CHECK(A0.a01 == h);
  CHECK(A0.a10 == 0.0);
  CHECK(A0.a11 == 1.0);

  const double mu = 2.3;
  const auto Ap = lamspec::transition_matrix(h, mu * mu);
  CHECK(Ap.a00 == Catch::Approx(std::cosh(mu * h)));
  CHECK(Ap.a01 == Catch::Approx(std::sinh(mu * h) / mu));
  CHECK(Ap.a10 == Catch::Approx(mu * std::sinh(mu * h)));
  CHECK(Ap.a11 == Catch::Approx(std::cosh(mu * h)));

  // Half period of the cosine: tau = -(2 pi)^2 over width 1/2.
  const auto Am = lamspec::transition_matrix(0.5, -4.0 * kPi * kPi);
  CHECK(Am.a00 == Catch::Approx(-1.0).margin(1e-14));
  CHECK(Am.a01 == Catch::Approx(0.0).margin(1e-14));
  CHECK(Am.a10 == Catch::Approx(0.0).margin(1e-12));
  CHECK(Am.a11 == Catch::Approx(-1.0).margin(1e-14));

  CHECK_THROWS_AS(lamspec::transition_matrix(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lamspec::transition_matrix(1.0, std::nan("")),
                  std::invalid_argument);
}

TEST_CASE("transition matrix determinant is 1", "[property]") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> tau_dist(-1e6, 1e6);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int trial = 0; trial < 400; ++trial) {
    const double tau = tau_dist(rng);
    // In the hyperbolic regime cosh^2 - sinh^2 only stays representable at
    // 1e-12 relative accuracy while e^{2 mu h} eps << 1e-12; cap mu h there.
    const double mu = std::sqrt(std::abs(tau));
    const double cap = (tau > 0 && mu > 0) ? std::min(1.0, 4.0 / mu) : 1.0;
    const double h = cap * u(rng);
    const auto A = lamspec::transition_matrix(h, tau);
    CHECK(A.det() == Catch::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("characteristic function at beta = 0 is alpha_0 m(1/alpha)") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const LaminateProfile alpha(random_profile(rng, 0, 8));
    const std::vector<double> beta(alpha.slab_count(), 0.0);
    const auto ev = lamspec::char_function(alpha, beta);
    double mean_inv = 0;
    for (double v : alpha.values()) mean_inv += 1.0 / v;
    mean_inv /= static_cast<double>(alpha.slab_count());
    const double expected = alpha.values()[0] * mean_inv;
    CHECK(ev.raw_value() == Catch::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("constant profile with beta = 0 gives 1") {
  for (double c : {0.5, 1.0, -3.0}) {
    for (int r : {0, 1, 4}) {
      const LaminateProfile alpha(std::vector<double>(r + 1, c));
      const std::vector<double> beta(r + 1, 0.0);
      CHECK(lamspec::char_function(alpha, beta).raw_value() ==
            Catch::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("raw and tanh-scaled branches agree") {
  const LaminateProfile alpha({1.0, -1.0});
  const std::vector<double> beta{kPi * kPi, -kPi * kPi};  // ratios pi^2 > 0
  const auto scaled = lamspec::char_function(alpha, beta);
  const auto raw = lamspec::char_function_raw(alpha, beta);
  CHECK(scaled.form == lamspec::CharacteristicEvaluation::Form::tanh_scaled);
  CHECK(raw.form == lamspec::CharacteristicEvaluation::Form::raw);
  CHECK(raw.value == Catch::Approx(scaled.value * scaled.scale).epsilon(1e-12));
}

TEST_CASE("factorisation: char function equals prod cosh times q~",
          "[property]") {
  std::mt19937 rng(33);
  std::uniform_real_distribution<double> mdist(0.2, 8.0);
  for (int trial = 0; trial < 100; ++trial) {
    const LaminateProfile alpha(random_profile(rng, 0, 6));
    std::vector<double> m(alpha.slab_count());
    for (auto& v : m) v = mdist(rng);
    std::vector<double> beta(alpha.slab_count());
    for (std::size_t j = 0; j < beta.size(); ++j)
      beta[j] = m[j] * m[j] * alpha.values()[j];
    const auto raw = lamspec::char_function_raw(alpha, beta);
    double cosh_prod = 1.0;
    for (std::size_t j = 0; j < m.size(); ++j)
      cosh_prod *= std::cosh(m[j] * alpha.h());
    const double q = lamspec::q_tilde(alpha, m);
    CHECK(raw.value ==
          Catch::Approx(cosh_prod * q).epsilon(1e-10).margin(1e-12));
  }
}

TEST_CASE("chi values") {
  CHECK(lamspec::chi(LaminateProfile({1.0, -1.0})) == 0.0);
  CHECK(lamspec::chi(LaminateProfile({7.5})) == 1.0);
  CHECK(lamspec::chi(LaminateProfile({1.0, 2.0, 4.0})) ==
        Catch::Approx(2.25));
}

TEST_CASE("p_alpha vanishes identically for the alternating profile") {
  for (int r : {1, 3, 5, 7}) {
    std::vector<double> values(r + 1);
    for (int j = 0; j <= r; ++j) values[j] = (j % 2) ? -1.0 : 1.0;
    const LaminateProfile alpha(values);
    for (int i = 1; i <= 50; ++i) {
      const double t = static_cast<double>(i) / 50.0;
      CHECK(std::abs(lamspec::p_alpha(alpha, t)) < 1e-12);
    }
  }
}

TEST_CASE("p_alpha for the shifted alternating profile, r = 3") {
  for (double s : {-0.6, -0.3, -0.1, 0.1, 0.3, 0.6}) {
    std::vector<double> values(4);
    for (int j = 0; j < 4; ++j) values[j] = ((j % 2) ? -1.0 : 1.0) + s;
    const LaminateProfile alpha(values);
    for (double t : {0.2, 0.5, 0.77, 1.0}) {
      const double expected = 4.0 * s * t * (s * s - 1.0 + (s * s + 1.0) * t * t) /
                              ((s - 1.0) * (s - 1.0) * (1.0 + s));
      CHECK(lamspec::p_alpha(alpha, t) ==
            Catch::Approx(expected).epsilon(1e-11).margin(1e-13));
    }
  }
}

TEST_CASE("p_alpha at t = 1 equals chi") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const LaminateProfile alpha(random_profile(rng, 0, 8));
    CHECK(lamspec::p_alpha(alpha, 1.0) ==
          Catch::Approx(lamspec::chi(alpha)).epsilon(1e-10).margin(1e-12));
  }
}

TEST_CASE("scaling invariance p_{mu alpha} = p_alpha", "[property]") {
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> mudist(0.01, 100.0);
  std::uniform_real_distribution<double> tdist(0.01, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const LaminateProfile alpha(random_profile(rng, 0, 8));
    const double mu = mudist(rng);
    const double t = tdist(rng);
    CHECK(lamspec::p_alpha(alpha.scaled(mu), t) ==
          Catch::Approx(lamspec::p_alpha(alpha, t))
              .epsilon(1e-11)
              .margin(1e-13));
  }
}

TEST_CASE("matrix-product p_alpha matches its extracted coefficients",
          "[property]") {
  std::mt19937 rng(66);
  std::uniform_real_distribution<double> tdist(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const LaminateProfile alpha(random_profile(rng, 0, 8));
    const Poly coeffs = lamspec::p_alpha_coeffs(alpha);
    CHECK(coeffs.degree() <= alpha.r() + 1);
    for (int i = 0; i < 20; ++i) {
      const double t = tdist(rng);
      CHECK(coeffs(t) == Catch::Approx(lamspec::p_alpha(alpha, t))
                             .epsilon(1e-10)
                             .margin(1e-12));
    }
  }
}

TEST_CASE("q~ bridge: mu q~(mu,..,mu) = p_alpha(tanh(mu h))") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> mudist(0.1, 30.0);
  for (int trial = 0; trial < 100; ++trial) {
    const LaminateProfile alpha(random_profile(rng, 0, 6));
    const double mu = mudist(rng);
    const double t = std::tanh(mu * alpha.h());
    CHECK(mu * lamspec::q_tilde_equal(alpha, mu) ==
          Catch::Approx(lamspec::p_alpha(alpha, t))
              .epsilon(1e-11)
              .margin(1e-13));
  }
}

// Single-slab identities. The row/column product formula needs r >= 1; for
// r = 0 the shooting normalisation makes p_{alpha,0} = alpha_0 m(1/alpha),
// mu w~ = chi and the q~ bridge hold verbatim, which fixes q~ = tanh(mu h)/mu
// and w~ = 1/mu (not twice that).
TEST_CASE("single-slab q~ and w~") {
  const LaminateProfile alpha({3.0});
  for (double mu : {0.5, 1.0, 4.0}) {
    CHECK(lamspec::q_tilde(alpha, {mu}) ==
          Catch::Approx(std::tanh(mu) / mu).epsilon(1e-14));
    CHECK(lamspec::w_tilde(alpha, {mu}) ==
          Catch::Approx(1.0 / mu).epsilon(1e-14));
    CHECK(mu * lamspec::q_tilde_equal(alpha, mu) ==
          Catch::Approx(lamspec::p_alpha(alpha, std::tanh(mu))));
  }
  CHECK(lamspec::w_tilde(LaminateProfile({1.0}), {1.0}) == 1.0);
}

TEST_CASE("mu w~(mu,..,mu) equals chi exactly", "[property]") {
  std::mt19937 rng(88);
  for (int trial = 0; trial < 100; ++trial) {
    const LaminateProfile alpha(random_profile(rng, 0, 8));
    const double c = lamspec::chi(alpha);
    for (double mu : {0.3, 1.0, 17.0, 1e4, 1e8}) {
      CHECK(mu * lamspec::w_tilde_equal(alpha, mu) ==
            Catch::Approx(c).epsilon(1e-12).margin(1e-12));
    }
  }
}

TEST_CASE("mu q~ approaches chi with a 1/mu-type envelope") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> values = random_profile(rng, 1, 6);
    const LaminateProfile alpha(values);
    const double c = lamspec::chi(alpha);
    if (std::abs(c) < 1e-3) continue;
    const double gap10 = std::abs(10.0 * lamspec::q_tilde_equal(alpha, 10.0) - c);
    const double gap100 =
        std::abs(100.0 * lamspec::q_tilde_equal(alpha, 100.0) - c);
    const double gap1000 =
        std::abs(1000.0 * lamspec::q_tilde_equal(alpha, 1000.0) - c);
    // |mu q~ - chi| <= C/mu, verified as a decreasing envelope.
    CHECK(gap10 <= 1e2 * std::max(1.0, std::abs(c)) / 10.0);
    CHECK(gap100 <= gap10 + 1e-12);
    CHECK(gap1000 <= gap100 + 1e-12);
    // At mu = 1000 the gap is far below the 1e-6 acceptance bound.
    CHECK(gap1000 < 1e-6 * std::max(1.0, std::abs(c)));
  }
}

TEST_CASE("mu (q~ - w~) at equal arguments decays with mu") {
  std::mt19937 rng(111);
  for (int trial = 0; trial < 20; ++trial) {
    const LaminateProfile alpha(random_profile(rng, 1, 6));
    double prev = 1e300;
    for (double mu : {10.0, 100.0, 1000.0}) {
      const double gap = std::abs(
          mu * (lamspec::q_tilde_equal(alpha, mu) - lamspec::w_tilde_equal(alpha, mu)));
      CHECK(gap <= prev + 1e-12);
      prev = gap;
    }
  }
}

TEST_CASE("shifted characteristic numerator matches direct evaluation") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> sdist(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const LaminateProfile alpha(random_profile(rng, 1, 5));
    const double t = 0.35;
    const Poly N = lamspec::shifted_char_numerator(alpha, t);
    for (int i = 0; i < 10; ++i) {
      const double s = sdist(rng);
      bool near_value = false;
      for (double v : alpha.values())
        if (std::abs(v - s) < 1e-3) near_value = true;
      if (near_value) continue;
      double clearing = 1.0;
      for (std::size_t j = 1; j < alpha.slab_count(); ++j)
        clearing *= alpha.values()[j] - s;
      const double direct = lamspec::p_alpha(alpha.shifted(s), t) * clearing;
      CHECK(N(s) == Catch::Approx(direct).epsilon(1e-9).margin(1e-10));
    }
  }
}

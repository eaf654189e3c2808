#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "lamspec/multi_dim.hpp"

using lamspec::DiscreteSequence;
using lamspec::LaminateProfile;
using lamspec::kPi;

TEST_CASE("dirichlet eigenvalues of the box cross-section") {
  const auto one = lamspec::dirichlet_eigenvalues(1, 3);
  REQUIRE(one.values.size() == 3);
  CHECK(one.values[0] == Catch::Approx(kPi * kPi));
  CHECK(one.values[1] == Catch::Approx(4 * kPi * kPi));
  CHECK(one.values[2] == Catch::Approx(9 * kPi * kPi));
  CHECK(one.source == DiscreteSequence::Source::dirichlet_box);

  const auto two = lamspec::dirichlet_eigenvalues(2, 2);
  REQUIRE(two.values.size() == 3);
  CHECK(two.values[0] == Catch::Approx(2 * kPi * kPi));
  CHECK(two.values[1] == Catch::Approx(5 * kPi * kPi));
  CHECK(two.values[2] == Catch::Approx(8 * kPi * kPi));
  CHECK(two.separation == Catch::Approx(3 * kPi * kPi));

  const auto tiny = lamspec::dirichlet_eigenvalues(1, 1);
  REQUIRE(tiny.values.size() == 1);
  CHECK(tiny.values[0] == Catch::Approx(kPi * kPi));
}

TEST_CASE("q~-criterion: shifted two-slab profile always passes") {
  for (double s : {0.5, -0.5, 0.2}) {
    const LaminateProfile alpha({1.0 + s, -1.0 + s});
    const auto seq = lamspec::dirichlet_eigenvalues(1, 8);
    const auto res = lamspec::qcrit_check(alpha, seq, {0.05, 0.1});
    CHECK(res.satisfied);
    CHECK_FALSE(res.witness.has_value());
    CHECK(res.delta0 == Catch::Approx(0.1));
    CHECK(res.tail_certified);
  }
}

TEST_CASE("q~-criterion: the alternating profile fails at every k") {
  const LaminateProfile alpha({1.0, -1.0});
  const auto seq = lamspec::dirichlet_eigenvalues(1, 6);
  const auto res = lamspec::qcrit_check(alpha, seq, {});
  CHECK_FALSE(res.satisfied);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->d == 0.0);
  CHECK(res.delta0 == 0.0);
  // Re-evaluating q~ at the witness stays below tolerance.
  std::vector<double> m(2, std::sqrt(seq.values[res.witness->k_index]));
  CHECK(std::abs(lamspec::q_tilde(alpha, m)) < 1e-12);
  // chi = 0 here, so no asymptotic certificate exists.
  CHECK_FALSE(res.tail_certified);
  CHECK_FALSE(res.diagnostics.empty());
}

TEST_CASE("q~-criterion: positive coefficients pass with positive delta0") {
  const LaminateProfile alpha({1.0, 2.0});
  const auto seq = lamspec::dirichlet_eigenvalues(1, 10);
  const auto res = lamspec::qcrit_check(alpha, seq, {0.25, 0.5, 1.0});
  CHECK(res.satisfied);
  CHECK(res.delta0 == Catch::Approx(1.0));
  CHECK(res.tail_certified);
  CHECK(res.k_certified > 0);
}

TEST_CASE("asymptotic certificate validity", "[property]") {
  const LaminateProfile alpha({1.0, 2.0});
  const auto seq = lamspec::dirichlet_eigenvalues(1, 40);
  const auto res = lamspec::qcrit_check(alpha, seq, {0.25});
  REQUIRE(res.tail_certified);
  REQUIRE(res.k_certified >= 10);
  const double c = lamspec::chi(alpha);
  // Spot-check certified entries: direct evaluation stays within |chi|/2.
  std::mt19937 rng(77);
  std::uniform_int_distribution<std::size_t> pick(res.k_checked,
                                                  seq.values.size() - 1);
  for (int i = 0; i < 10; ++i) {
    const std::size_t k = pick(rng);
    const double mu = std::sqrt(seq.values[k]);
    CHECK(std::abs(mu * lamspec::q_tilde_equal(alpha, mu) - c) <
          0.5 * std::abs(c));
  }
}

TEST_CASE("well-posedness in d dimensions") {
  const auto seq = lamspec::dirichlet_eigenvalues(1, 10);
  CHECK(lamspec::well_posed_dd(LaminateProfile({1.5, -0.5}), seq));
  CHECK(lamspec::well_posed_dd(LaminateProfile({1.0, 2.0, 4.0}), seq));
  CHECK_THROWS_AS(
      lamspec::well_posed_dd(LaminateProfile({1.0, -1.0}), seq),
      lamspec::degenerate_error);
}

TEST_CASE("well-posedness fails when the r = 3 root enters the window") {
  // alpha_j = (-1)^j + s has the lone positive root z(s) of p_alpha; pick s
  // so that z(s) lies inside [t0, 1).
  const double s = 0.3;
  const LaminateProfile alpha({1.0 + s, -1.0 + s, 1.0 + s, -1.0 + s});
  const double z = std::sqrt((1.0 - s * s) / (1.0 + s * s));
  const auto seq = lamspec::dirichlet_eigenvalues(1, 10);
  const double t0 = std::tanh(std::sqrt(seq.min_value()) * alpha.h());
  REQUIRE(t0 < z);
  REQUIRE(z < 1.0);
  CHECK_FALSE(lamspec::well_posed_dd(alpha, seq));
}

TEST_CASE("certification soundness: p_alpha window clear implies criterion",
          "[property]") {
  const auto seq = lamspec::dirichlet_eigenvalues(1, 12);
  const std::vector<std::vector<double>> profiles{
      {1.0, 2.0, 4.0}, {1.4, -0.4}, {2.0, 5.0}, {3.0, 1.0, 0.5, 2.0}};
  for (const auto& values : profiles) {
    const LaminateProfile alpha(values);
    if (!lamspec::well_posed_dd(alpha, seq)) continue;
    const auto res =
        lamspec::qcrit_check(alpha, seq, {0.01, 0.05, 0.1, 0.2});
    CHECK(res.satisfied);
  }
}

TEST_CASE("inner spectrum scan: two slabs give only the mean-zero shift") {
  const LaminateProfile alpha({1.0, -1.0});
  const auto seq = lamspec::dirichlet_eigenvalues(1, 8);
  const auto report = lamspec::inner_spectrum_dd(alpha, seq, 2.0);
  REQUIRE(report.value_points.size() == 2);
  CHECK(report.value_points[0] == -1.0);
  CHECK(report.value_points[1] == 1.0);
  // All scan roots sit at s = 0; the discrete part is {-1, 0, 1}.
  CHECK_FALSE(report.scan_roots.empty());
  for (const auto& rt : report.scan_roots) {
    CHECK(std::abs(rt.s) < 1e-9);
    CHECK(rt.residual < 1e-9);
  }
  REQUIRE(report.mean_zero_shifts.size() == 1);
  CHECK(std::abs(report.mean_zero_shifts[0]) < 1e-10);
}

TEST_CASE("inner spectrum scan: r = 3 alternating roots accumulate at 0") {
  std::vector<double> values{1.0, -1.0, 1.0, -1.0};
  const LaminateProfile alpha(values);
  const auto seq = lamspec::dirichlet_eigenvalues(1, 25);
  const auto report = lamspec::inner_spectrum_dd(alpha, seq, 2.0);
  // For each t_k the expected nonzero roots are +-sqrt((1-t^2)/(1+t^2)).
  std::set<long> seen;
  for (const auto& rt : report.scan_roots) {
    if (rt.k_index < 0 || std::abs(rt.s) < 1e-9) continue;
    const double t = rt.t;
    const double expect = std::sqrt((1.0 - t * t) / (1.0 + t * t));
    CHECK(std::abs(std::abs(rt.s) - expect) < 1e-8);
    seen.insert(rt.k_index);
  }
  CHECK(seen.size() >= 5);
  // Accumulation at zero: large k pushes the nonzero roots arbitrarily close
  // to 0 (values of t indistinguishable from 1 fold into the t = 1 scan, so
  // the floor here is set by 1 - t reaching double resolution).
  double min_abs = 1e300, max_abs = 0;
  for (const auto& rt : report.scan_roots)
    if (std::abs(rt.s) > 1e-9) {
      min_abs = std::min(min_abs, std::abs(rt.s));
      max_abs = std::max(max_abs, std::abs(rt.s));
    }
  CHECK(min_abs < 1e-6);
  CHECK(max_abs > 0.1);
}

TEST_CASE("inner spectrum scan: constant profile has no extra points") {
  const LaminateProfile alpha({2.0});
  const auto seq = lamspec::dirichlet_eigenvalues(1, 6);
  const auto report = lamspec::inner_spectrum_dd(alpha, seq, 4.0);
  CHECK(report.scan_roots.empty());
  CHECK(report.mean_zero_shifts.empty());
  REQUIRE(report.value_points.size() == 1);
  CHECK(report.value_points[0] == 2.0);
  CHECK(report.continuous_spectrum_caveat);
}

TEST_CASE("scan roots re-evaluate below tolerance", "[property]") {
  std::mt19937 rng(999);
  std::uniform_real_distribution<double> mag(0.3, 3.0);
  std::bernoulli_distribution sign(0.5);
  const auto seq = lamspec::dirichlet_eigenvalues(1, 8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> values(4);
    for (auto& v : values) v = (sign(rng) ? 1.0 : -1.0) * mag(rng);
    const LaminateProfile alpha(values);
    const double A = alpha.max_abs() * 1.5 + 1.0;
    const auto report = lamspec::inner_spectrum_dd(alpha, seq, A);
    for (const auto& rt : report.scan_roots) CHECK(rt.residual < 1e-9);
  }
}

TEST_CASE("monotone refinement: enlarging the sequence keeps all roots",
          "[property]") {
  const LaminateProfile alpha({1.0, -1.0, 1.0, -1.0});
  const auto coarse_seq = lamspec::dirichlet_eigenvalues(1, 6);
  const auto fine_seq = lamspec::dirichlet_eigenvalues(1, 12);
  const auto coarse = lamspec::inner_spectrum_dd(alpha, coarse_seq, 2.0);
  const auto fine = lamspec::inner_spectrum_dd(alpha, fine_seq, 2.0);
  CHECK(fine.scan_roots.size() >= coarse.scan_roots.size());
  for (const auto& rc : coarse.scan_roots) {
    bool found = false;
    for (const auto& rf : fine.scan_roots)
      if (std::abs(rf.s - rc.s) < 1e-9 && std::abs(rf.t - rc.t) < 1e-12)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("scan grid cross-check does not change the enumerated roots") {
  const LaminateProfile alpha({1.0, -1.0, 1.0, -1.0});
  const auto seq = lamspec::dirichlet_eigenvalues(1, 8);
  const auto plain = lamspec::inner_spectrum_dd(alpha, seq, 2.0);
  const auto checked = lamspec::inner_spectrum_dd(alpha, seq, 2.0, 1e-3);
  REQUIRE(plain.scan_roots.size() == checked.scan_roots.size());
  for (std::size_t i = 0; i < plain.scan_roots.size(); ++i)
    CHECK(plain.scan_roots[i].s ==
          Catch::Approx(checked.scan_roots[i].s).margin(1e-9));
}

TEST_CASE("sequence domain restrictions are recorded") {
  // Deltas exceeding the smallest eigenvalue force skipped (k, d) pairs for
  // slabs with negative sign.
  const LaminateProfile alpha({1.0, -1.0, 1.0});
  const auto seq = DiscreteSequence::from_values({0.5, 20.0, 40.0});
  const auto res = lamspec::qcrit_check(alpha, seq, {1.0});
  CHECK_FALSE(res.skipped.empty());
}

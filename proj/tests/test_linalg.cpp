#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "lamspec/linalg.hpp"

using lamspec::SymTridiag;

namespace {
constexpr double kPi = 3.14159265358979323846;

SymTridiag discrete_laplacian(std::size_t n) {
  SymTridiag T;
  T.diag.assign(n, 2.0);
  T.off.assign(n - 1, -1.0);
  return T;
}

// Classical spectrum of the n x n second-difference matrix.
double laplacian_eig(std::size_t n, std::size_t k) {
  return 2.0 - 2.0 * std::cos(static_cast<double>(k + 1) * kPi /
                              static_cast<double>(n + 1));
}
}  // namespace

TEST_CASE("sturm bisection reproduces the discrete Laplacian spectrum") {
  const std::size_t n = 40;
  const SymTridiag T = discrete_laplacian(n);
  const auto eigs = lamspec::smallest_eigenvalues(T, 5);
  for (std::size_t k = 0; k < 5; ++k)
    CHECK(eigs[k] == Catch::Approx(laplacian_eig(n, k)).margin(1e-12));
  CHECK(lamspec::sturm_count(T, 5.0) == static_cast<int>(n));
  CHECK(lamspec::sturm_count(T, 0.0) == 0);
}

TEST_CASE("min_abs_eigenvalue sees through indefinite shifts") {
  const std::size_t n = 25;
  SymTridiag T = discrete_laplacian(n);
  const double shift = laplacian_eig(n, 7) + 1e-8;
  for (auto& d : T.diag) d -= shift;
  CHECK(lamspec::min_abs_eigenvalue(T) == Catch::Approx(1e-8).epsilon(1e-3));
}

TEST_CASE("pivoted tridiagonal solve handles indefinite systems") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 30;
    std::vector<double> sub(n - 1), diag(n), sup(n - 1), x_true(n);
    for (auto& v : sub) v = u(rng);
    for (auto& v : sup) v = u(rng);
    for (auto& v : x_true) v = u(rng);
    for (std::size_t i = 0; i < n; ++i) diag[i] = u(rng) + ((i % 2) ? 3.0 : -3.0);
    std::vector<double> rhs(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      rhs[i] += diag[i] * x_true[i];
      if (i > 0) rhs[i] += sub[i - 1] * x_true[i - 1];
      if (i + 1 < n) rhs[i] += sup[i] * x_true[i + 1];
    }
    const auto x = lamspec::solve_tridiag(sub, diag, sup, rhs);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(x[i] == Catch::Approx(x_true[i]).margin(1e-9));
  }
}

TEST_CASE("tridiagonal determinant sign tracks the eigenvalue count") {
  const std::size_t n = 15;
  SymTridiag T = discrete_laplacian(n);
  // Shift between eigenvalues 2 and 3: three negative eigenvalues -> sign -1.
  const double shift = 0.5 * (laplacian_eig(n, 2) + laplacian_eig(n, 3));
  std::vector<double> diag(T.diag);
  for (auto& d : diag) d -= shift;
  const int sign = lamspec::tridiag_det_sign(T.off, diag, T.off);
  CHECK(sign == ((3 % 2) ? -1 : 1));
  CHECK(lamspec::tridiag_det_sign(T.off, T.diag, T.off) == 1);
}

TEST_CASE("jacobi eigenvalues match a planted spectrum") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 8;
  // Plant a spectrum, rotate with a random orthogonal Q (Gram-Schmidt).
  std::vector<double> planted{-4.0, -1.5, -0.25, 0.0, 0.5, 1.0, 2.5, 6.0};
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (auto& row : q)
    for (auto& v : row) v = u(rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += q[i][k] * q[j][k];
      for (std::size_t k = 0; k < n; ++k) q[i][k] -= dot * q[j][k];
    }
    double norm = 0;
    for (double v : q[i]) norm += v * v;
    norm = std::sqrt(norm);
    for (auto& v : q[i]) v /= norm;
  }
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        a[i * n + j] += q[k][i] * planted[k] * q[k][j];
  const auto eigs = lamspec::jacobi_eigenvalues(a, n);
  REQUIRE(eigs.size() == n);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(eigs[i] == Catch::Approx(planted[i]).margin(1e-10));
}

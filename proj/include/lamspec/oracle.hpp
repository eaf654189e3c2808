// Independent discretization oracles: a flux-conservative finite-difference
// Sturm-Liouville operator on slab-aligned grids, and Fourier-Galerkin
// projections of the coefficient onto the gradient subspace of the box (the
// sine basis diagonalises the transverse directions, so the projection is
// block tridiagonal-free: dense M x M blocks per transverse mode).
#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "lamspec/linalg.hpp"
#include "lamspec/profile.hpp"

namespace lamspec {

/// -(alpha u')' + beta u on (0,1) with Dirichlet ends: flux form
/// alpha_{i+1/2} (u_{i+1} - u_i)/dx with alpha sampled at cell midpoints.
/// N cells, N-1 interior unknowns; slab-aligned N keeps every midpoint off
/// the interfaces, so the interface conditions are captured without
/// averaging tricks.
struct FDOperator1D {
  std::size_t N = 0;
  double dx = 0;
  std::vector<double> diag;  // size N-1
  std::vector<double> off;   // size N-2

  SymTridiag tridiag() const { return SymTridiag{diag, off}; }
  std::size_t size() const { return diag.size(); }
};

inline FDOperator1D assemble_fd_1d(const LaminateProfile& alpha,
                                   const std::vector<double>& beta,
                                   std::size_t N) {
  if (beta.size() != alpha.slab_count())
    throw std::invalid_argument("beta must have one value per slab");
  if (N % alpha.slab_count() != 0)
    throw std::invalid_argument(
        "grid must be slab-aligned: N a multiple of the slab count");
  if (N < 2 * alpha.slab_count())
    throw std::invalid_argument("grid too coarse: need N >= 2 (r+1)");
  FDOperator1D op;
  op.N = N;
  op.dx = 1.0 / static_cast<double>(N);
  const std::size_t n = N - 1;
  op.diag.resize(n);
  op.off.resize(n - 1);
  const double inv_dx2 = 1.0 / (op.dx * op.dx);
  auto alpha_mid = [&](std::size_t cell) {
    return alpha.value_at((static_cast<double>(cell) + 0.5) * op.dx);
  };
  for (std::size_t i = 1; i <= n; ++i) {
    const double am = alpha_mid(i - 1);
    const double ap = alpha_mid(i);
    const double x = static_cast<double>(i) * op.dx;
    op.diag[i - 1] = (am + ap) * inv_dx2 + beta[alpha.slab_of(x)];
    if (i < n) op.off[i - 1] = -ap * inv_dx2;
  }
  return op;
}

inline double min_singular_value(const FDOperator1D& op) {
  return min_abs_eigenvalue(op.tridiag());
}

inline std::vector<double> smallest_eigs(const FDOperator1D& op,
                                         std::size_t count) {
  return smallest_eigenvalues(op.tridiag(), count);
}

/// Direct solve of op u = rhs (rhs on the interior nodes).
inline std::vector<double> fd_solve(const FDOperator1D& op,
                                    const std::vector<double>& rhs) {
  if (rhs.size() != op.size())
    throw std::invalid_argument("rhs size must match interior grid");
  return solve_tridiag(op.off, op.diag, op.off, rhs);
}

inline int fd_det_sign(const FDOperator1D& op) {
  return tridiag_det_sign(op.off, op.diag, op.off);
}

/// Finite section of the compressed coefficient on grad[H_0^1((0,1)^d)] in
/// the normalised sine-gradient basis. Entries couple only equal transverse
/// modes, so the matrix splits into M x M blocks indexed by (k_2..k_d).
struct GalerkinProjection {
  struct Block {
    std::vector<int> transverse;  // (k_2..k_d)
    double tail_sq = 0;           // k_2^2 + ... + k_d^2
    std::vector<double> a;        // M x M, row-major, symmetric
  };
  int d = 2;
  int M = 0;
  std::vector<Block> blocks;

  std::size_t dimension() const {
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(M);
    return total;
  }

  double max_asymmetry() const {
    double worst = 0;
    for (const auto& b : blocks)
      for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j)
          worst = std::max(worst, std::abs(b.a[i * M + j] - b.a[j * M + i]));
    return worst;
  }
};

namespace detail {

// Integrals of cos(k pi x) cos(l pi x) resp. sin sin over [a, b]; analytic,
// no quadrature.
inline double int_cc(int k, int l, double a, double b) {
  constexpr double pi = 3.14159265358979323846;
  if (k == l) {
    const double w = 2.0 * k * pi;
    return 0.5 * ((b - a) + (std::sin(w * b) - std::sin(w * a)) / w);
  }
  const double wm = (k - l) * pi, wp = (k + l) * pi;
  return 0.5 * ((std::sin(wm * b) - std::sin(wm * a)) / wm +
                (std::sin(wp * b) - std::sin(wp * a)) / wp);
}

inline double int_ss(int k, int l, double a, double b) {
  constexpr double pi = 3.14159265358979323846;
  if (k == l) {
    const double w = 2.0 * k * pi;
    return 0.5 * ((b - a) - (std::sin(w * b) - std::sin(w * a)) / w);
  }
  const double wm = (k - l) * pi, wp = (k + l) * pi;
  return 0.5 * ((std::sin(wm * b) - std::sin(wm * a)) / wm -
                (std::sin(wp * b) - std::sin(wp * a)) / wp);
}

template <class EntryFn>
GalerkinProjection build_blocks(int d, int M, EntryFn&& entry) {
  if (d < 2 || d > 3)
    throw std::invalid_argument("galerkin assembly supports d in {2, 3}");
  if (M < 1 || M > 40)
    throw std::invalid_argument("galerkin assembly supports 1 <= M <= 40");
  GalerkinProjection proj;
  proj.d = d;
  proj.M = M;
  std::vector<int> khat(static_cast<std::size_t>(d - 1), 1);
  while (true) {
    GalerkinProjection::Block block;
    block.transverse = khat;
    block.tail_sq = 0;
    for (int km : khat) block.tail_sq += static_cast<double>(km) * km;
    block.a.resize(static_cast<std::size_t>(M) * M);
    for (int k1 = 1; k1 <= M; ++k1)
      for (int l1 = 1; l1 <= M; ++l1)
        block.a[(k1 - 1) * M + (l1 - 1)] = entry(k1, l1, block.tail_sq);
    proj.blocks.push_back(std::move(block));
    std::size_t axis = 0;
    while (axis < khat.size() && ++khat[axis] > M) {
      khat[axis] = 1;
      ++axis;
    }
    if (axis == khat.size()) break;
  }
  return proj;
}

}  // namespace detail

/// Projection of the scalar laminate a(x) = alpha(x_1).
inline GalerkinProjection assemble_galerkin(const LaminateProfile& alpha,
                                            int d, int M) {
  // 1-D slab sums of the cos-cos and sin-sin integrals, cached per (k1, l1).
  std::vector<double> C(static_cast<std::size_t>(M) * M),
      S(static_cast<std::size_t>(M) * M);
  const double h = alpha.h();
  for (int k = 1; k <= M; ++k) {
    for (int l = k; l <= M; ++l) {
      double cc = 0, ss = 0;
      for (std::size_t j = 0; j < alpha.slab_count(); ++j) {
        const double a = static_cast<double>(j) * h;
        const double b = a + h;
        cc += alpha.values()[j] * detail::int_cc(k, l, a, b);
        ss += alpha.values()[j] * detail::int_ss(k, l, a, b);
      }
      C[(k - 1) * M + (l - 1)] = C[(l - 1) * M + (k - 1)] = cc;
      S[(k - 1) * M + (l - 1)] = S[(l - 1) * M + (k - 1)] = ss;
    }
  }
  return detail::build_blocks(d, M, [&](int k1, int l1, double tail_sq) {
    const double num = 2.0 * k1 * l1 * C[(k1 - 1) * M + (l1 - 1)] +
                       2.0 * S[(k1 - 1) * M + (l1 - 1)] * tail_sq;
    const double nk = std::sqrt(k1 * k1 + tail_sq);
    const double nl = std::sqrt(l1 * l1 + tail_sq);
    return num / (nk * nl);
  });
}

/// Projection of the constant matrix coefficient Gamma = diag(gamma,1,..,1);
/// diagonal in this basis with entries (gamma k1^2 + tail)/(k1^2 + tail).
inline GalerkinProjection assemble_galerkin_gamma(double gamma, int d, int M) {
  if (!(gamma > 0)) throw std::invalid_argument("gamma must be positive");
  return detail::build_blocks(d, M, [&](int k1, int l1, double tail_sq) {
    if (k1 != l1) return 0.0;
    return (gamma * k1 * k1 + tail_sq) / (k1 * k1 + tail_sq);
  });
}

/// Full symmetric eigensolve (per block), sorted ascending.
inline std::vector<double> galerkin_spectrum(const GalerkinProjection& proj,
                                             double tol = 1e-13) {
  std::vector<double> eig;
  eig.reserve(proj.dimension());
  for (const auto& block : proj.blocks) {
    auto part = jacobi_eigenvalues(block.a,
                                   static_cast<std::size_t>(proj.M), tol);
    eig.insert(eig.end(), part.begin(), part.end());
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

// Sparse-triplet text dumps (header "rows cols nnz", then "i j value" lines,
// 1-based indices) for external cross-checks.

inline void dump_triplets(std::ostream& os, const FDOperator1D& op) {
  const std::size_t n = op.size();
  const std::size_t nnz = n + 2 * (n > 0 ? n - 1 : 0);
  os << n << " " << n << " " << nnz << "\n";
  char buf[96];
  auto emit = [&](std::size_t i, std::size_t j, double v) {
    std::snprintf(buf, sizeof(buf), "%zu %zu %.17g\n", i + 1, j + 1, v);
    os << buf;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) emit(i, i - 1, op.off[i - 1]);
    emit(i, i, op.diag[i]);
    if (i + 1 < n) emit(i, i + 1, op.off[i]);
  }
}

inline void dump_triplets(std::ostream& os, const GalerkinProjection& proj) {
  const std::size_t M = static_cast<std::size_t>(proj.M);
  const std::size_t dim = proj.dimension();
  std::size_t nnz = 0;
  for (const auto& b : proj.blocks)
    for (double v : b.a)
      if (v != 0.0) ++nnz;
  os << dim << " " << dim << " " << nnz << "\n";
  char buf[96];
  for (std::size_t bi = 0; bi < proj.blocks.size(); ++bi) {
    const auto& b = proj.blocks[bi];
    const std::size_t base = bi * M;
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j) {
        const double v = b.a[i * M + j];
        if (v == 0.0) continue;
        std::snprintf(buf, sizeof(buf), "%zu %zu %.17g\n", base + i + 1,
                      base + j + 1, v);
        os << buf;
      }
  }
}

}  // namespace lamspec

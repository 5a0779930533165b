#pragma once

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "specwres/numerics.hpp"
#include "specwres/tensor.hpp"

namespace specwres {

enum class ModuleKind { spin, hodge };

enum class GradingKind { spin_gamma, euler, hodge, hat };

struct Grading {
  Mat chi;
  GradingKind kind;
};

// Explicit Clifford generators on a fixed fiber. Spin fibers have dimension
// 2^m, Hodge fibers 2^n (the full exterior algebra). All generators are
// hermitian and satisfy {gamma^a, gamma^b} = 2 delta^{ab} Id exactly.
struct CliffordRep {
  int n = 0;
  ModuleKind kind = ModuleKind::spin;
  int fiber_dim = 0;
  std::vector<Mat> gamma;

  // Hodge only: raising/lowering operators and the second generator family.
  std::vector<Mat> lambda_plus;
  std::vector<Mat> lambda_minus;
  std::vector<Mat> gamma_tilde;

  // Hodge basis: multi-indices sorted by degree, then lexicographically.
  std::vector<MultiIndex> basis;

  int m() const { return n / 2; }
  Mat id() const { return Mat::Identity(fiber_dim, fiber_dim); }
};

namespace detail {

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat pauli(int k) {
  Mat s(2, 2);
  const cplx I{0.0, 1.0};
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

inline cplx ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace detail

/// Spin generators by the iterated tensor-product ladder:
/// gamma^{2j-1} = s3^(j-1) (x) s1 (x) 1, gamma^{2j} = s3^(j-1) (x) s2 (x) 1.
inline CliffordRep build_spin_gammas(int n) {
  if (n < 2 || n > 8 || n % 2 != 0)
    throw std::invalid_argument("build_spin_gammas: n must be even, 2 <= n <= 8");
  const int m = n / 2;
  CliffordRep rep;
  rep.n = n;
  rep.kind = ModuleKind::spin;
  rep.fiber_dim = 1 << m;
  for (int j = 0; j < m; ++j) {
    for (int pauli_idx : {1, 2}) {
      Mat g = Mat::Identity(1, 1);
      for (int f = 0; f < m; ++f) {
        if (f < j)
          g = detail::kron(g, detail::pauli(3));
        else if (f == j)
          g = detail::kron(g, detail::pauli(pauli_idx));
        else
          g = detail::kron(g, Mat::Identity(2, 2));
      }
      rep.gamma.push_back(std::move(g));
    }
  }
  return rep;
}

/// Chirality operator -i^m gamma^1 ... gamma^n. The phase is the unique one
/// that is hermitian, squares to Id, and gives Tr(gamma gamma^1 gamma^2) = +2i
/// in n=2; the same phase is used in every even dimension.
inline Grading build_spin_chirality(const CliffordRep& rep) {
  if (rep.kind != ModuleKind::spin)
    throw std::invalid_argument("build_spin_chirality: spin rep required");
  Mat prod = rep.id();
  for (const Mat& g : rep.gamma) prod = prod * g;
  return {(-detail::ipow(rep.m())) * prod, GradingKind::spin_gamma};
}

/// Exterior-algebra raising/lowering operators on the 2^n-dimensional form
/// basis, plus the two generator families gamma^p = -i(l+^p - l-^p) and
/// gamma~^p = l+^p + l-^p.
inline CliffordRep build_lambda_ops(int n) {
  if (n < 2 || n > 6 || n % 2 != 0)
    throw std::invalid_argument("build_lambda_ops: n must be even, 2 <= n <= 6");
  CliffordRep rep;
  rep.n = n;
  rep.kind = ModuleKind::hodge;
  rep.fiber_dim = 1 << n;

  std::vector<unsigned> masks(static_cast<std::size_t>(1) << n);
  for (unsigned mask = 0; mask < masks.size(); ++mask) masks[mask] = mask;
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // Lexicographic order of the sorted index lists.
    std::vector<int> la, lb;
    for (int i = 0; i < 16; ++i) {
      if (a & (1u << i)) la.push_back(i);
      if (b & (1u << i)) lb.push_back(i);
    }
    return la < lb;
  });
  std::vector<int> pos(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    pos[masks[i]] = static_cast<int>(i);
    MultiIndex idx;
    for (int b = 0; b < n; ++b)
      if (masks[i] & (1u << b)) idx.push_back(b);
    rep.basis.push_back(std::move(idx));
  }

  const cplx I{0.0, 1.0};
  for (int p = 0; p < n; ++p) {
    Mat lp = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
    for (unsigned mask = 0; mask < masks.size(); ++mask) {
      if (mask & (1u << p)) continue;
      // Sign of moving p past the smaller indices already present.
      int below = std::popcount(mask & ((1u << p) - 1u));
      lp(pos[mask | (1u << p)], pos[mask]) = (below % 2 == 0) ? 1.0 : -1.0;
    }
    Mat lm = lp.adjoint();
    rep.gamma.push_back(-I * (lp - lm));
    rep.gamma_tilde.push_back(lp + lm);
    rep.lambda_plus.push_back(std::move(lp));
    rep.lambda_minus.push_back(std::move(lm));
  }
  return rep;
}

struct HodgeGradings {
  Grading euler;  // chi_e: (-1)^degree
  Grading hodge;  // chi_h: i^m gamma^1 ... gamma^n
  Grading hat;    // chi^ = chi_h chi_e
};

inline HodgeGradings build_hodge_gradings(const CliffordRep& rep) {
  if (rep.kind != ModuleKind::hodge)
    throw std::invalid_argument("build_hodge_gradings: hodge rep required");
  Mat gprod = rep.id();
  for (const Mat& g : rep.gamma) gprod = gprod * g;
  Mat tprod = rep.id();
  for (const Mat& g : rep.gamma_tilde) tprod = tprod * g;
  HodgeGradings out{{gprod * tprod, GradingKind::euler},
                    {detail::ipow(rep.m()) * gprod, GradingKind::hodge},
                    {Mat{}, GradingKind::hat}};
  out.hat.chi = out.hodge.chi * out.euler.chi;
  return out;
}

// One row per trace identity of the Hodge module; residual is the max
// absolute difference between the explicit matrix trace and the stated
// Kronecker/epsilon value over the full index sweep.
struct TraceLemmaReport {
  struct Entry {
    std::string name;
    double residual;
  };
  std::vector<Entry> entries;
  double max_residual() const {
    double r = 0.0;
    for (const auto& e : entries) r = std::max(r, e.residual);
    return r;
  }
};

/// Full sweep of the six Hodge trace identities relating gamma/lambda
/// products to Kronecker and epsilon symbols.
inline TraceLemmaReport verify_trace_lemma_hodge(const CliffordRep& rep) {
  if (rep.kind != ModuleKind::hodge)
    throw std::invalid_argument("verify_trace_lemma_hodge: hodge rep required");
  const int n = rep.n;
  const cplx I{0.0, 1.0};
  const double p2 = [](int e) { return std::pow(2.0, e); }(n);
  const double d1 = p2 / 2.0, d2 = p2 / 4.0, d3 = p2 / 8.0;
  auto eps2 = [](int i, int j, int a, int b) {
    return (i == a && j == b ? 1.0 : 0.0) - (i == b && j == a ? 1.0 : 0.0);
  };
  const auto& g = rep.gamma;
  const auto& lp = rep.lambda_plus;
  const auto& lm = rep.lambda_minus;

  TraceLemmaReport rep_out;
  auto push = [&](std::string name, double res) {
    rep_out.entries.push_back({std::move(name), res});
  };

  double r = 0.0;
  for (int s : {+1, -1}) {
    const auto& l = (s > 0) ? lp : lm;
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i)
        r = std::max(r, std::abs(trace_prod(g[a], l[i]) -
                                 cplx(s) * I * d1 * double(a == i)));
  }
  push("Tr(g^a l^i_pm)", r);

  r = 0.0;
  for (int s : {+1, -1}) {
    const auto& l = (s > 0) ? lp : lm;
    const auto& lo = (s > 0) ? lm : lp;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Mat ljk = lo[j] * l[k];
        for (int i = 0; i < n; ++i) {
          Mat lll = ljk * lo[i];
          for (int a = 0; a < n; ++a) {
            cplx lhs = trace_prod(g[a], lll);
            cplx rhs = -cplx(s) * I * d2 *
                       (double(a == i && k == j) + double(a == j && k == i));
            r = std::max(r, std::abs(lhs - rhs));
          }
        }
      }
  }
  push("Tr(g^a l^j_mp l^k_pm l^i_mp)", r);

  r = 0.0;
  for (int s : {+1, -1}) {
    const auto& l = (s > 0) ? lp : lm;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          Mat gabc = g[a] * g[b] * g[c];
          for (int i = 0; i < n; ++i) {
            cplx lhs = trace_prod(gabc, l[i]);
            cplx rhs = cplx(s) * I * d1 *
                       (double(a == i && b == c) - double(b == i && a == c) +
                        double(c == i && a == b));
            r = std::max(r, std::abs(lhs - rhs));
          }
        }
  }
  push("Tr(g^a g^b g^c l^i_pm)", r);

  // Cache the two-sided products once; the sweeps below only take traces.
  std::vector<Mat> gabc_cache;
  gabc_cache.reserve(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat gab = g[a] * g[b];
      for (int c = 0; c < n; ++c) gabc_cache.push_back(gab * g[c]);
    }
  auto gabc_at = [&](int a, int b, int c) -> const Mat& {
    return gabc_cache[(static_cast<std::size_t>(a) * n + b) * n + c];
  };

  r = 0.0;
  for (int s : {+1, -1}) {
    const auto& l = (s > 0) ? lp : lm;
    const auto& lo = (s > 0) ? lm : lp;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Mat ljk = l[j] * lo[k];
        for (int i = 0; i < n; ++i) {
          Mat lll = ljk * l[i];
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              for (int c = 0; c < n; ++c) {
                cplx lhs = trace_prod(gabc_at(a, b, c), lll);
                cplx rhs =
                    cplx(s) * I * d3 *
                    (2.0 * double(b == c) * (double(a == i && k == j) + double(a == j && k == i)) -
                     2.0 * double(a == c) * (double(b == i && k == j) + double(b == j && k == i)) +
                     2.0 * double(a == b) * (double(i == c && k == j) + double(c == j && k == i)) +
                     double(k == a) * eps2(j, i, b, c) +
                     double(k == b) * eps2(j, i, c, a) +
                     double(k == c) * eps2(j, i, a, b));
                r = std::max(r, std::abs(lhs - rhs));
              }
        }
      }
  }
  push("Tr(g^a g^b g^c l^j_pm l^k_mp l^i_pm)", r);

  r = 0.0;
  for (int s : {+1, -1}) {
    const auto& lo = (s > 0) ? lm : lp;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        Mat lji = lo[j] * lo[i];
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            cplx lhs = trace_prod(g[a] * g[b], lji);
            cplx rhs = -d2 * eps2(i, j, a, b);
            r = std::max(r, std::abs(lhs - rhs));
          }
      }
  }
  push("Tr(g^a g^b l^j_mp l^i_mp)", r);

  r = 0.0;
  for (int s : {+1, -1}) {
    const auto& l = (s > 0) ? lp : lm;
    std::vector<Mat> lji_cache;
    lji_cache.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) lji_cache.push_back(l[j] * l[i]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            Mat gabcd = gabc_at(a, b, c) * g[d];
            for (int j = 0; j < n; ++j)
              for (int i = 0; i < n; ++i) {
                const Mat& lji = lji_cache[static_cast<std::size_t>(j) * n + i];
                cplx lhs = trace_prod(gabcd, lji);
                cplx rhs = d2 * (double(a == b) * eps2(j, i, c, d) +
                                 double(a == c) * eps2(j, i, d, b) +
                                 double(a == d) * eps2(j, i, b, c) +
                                 double(b == c) * eps2(j, i, a, d) +
                                 double(b == d) * eps2(j, i, c, a) +
                                 double(c == d) * eps2(j, i, a, b));
                r = std::max(r, std::abs(lhs - rhs));
              }
          }
  }
  push("Tr(g^a g^b g^c g^d l^j_pm l^i_pm)", r);

  return rep_out;
}

}  // namespace specwres

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "specwres/clifford.hpp"
#include "specwres/numerics.hpp"
#include "specwres/tensor.hpp"

namespace specwres {

// Pointwise normal-coordinate curvature data. riemann stores R_{abcd} with
// the full algebraic symmetries; ricci and scalar are its contractions
// Ric_{ab} = R_{cacb}, R = Ric_{aa}.
struct GeometryJet {
  Tensor riemann;  // rank 4
  Tensor ricci;    // rank 2
  double scalar = 0.0;

  int dim() const { return riemann.dim(); }
};

// Torsion value and first derivatives at the point: value = T^0_{ijk},
// deriv(c,i,j,k) = T^c_{ijk} (c is the derivative axis).
struct TorsionJet {
  Tensor value;  // rank 3
  Tensor deriv;  // rank 4

  int dim() const { return value.dim(); }
};

struct OneFormJet {
  Tensor value;  // rank 1: w_b
  Tensor deriv;  // rank 2: w_{bc} = d_c w_b

  int dim() const { return value.dim(); }
};

// Endomorphism perturbation jet B = B0 + B_a x^a + o(x).
struct PerturbationJet {
  Mat B0;
  std::vector<Mat> Ba;

  int dim() const { return static_cast<int>(Ba.size()); }
};

// Laplace-type coefficient data (P_{ab}, S_a, Q) at the point.
struct LaplaceJet {
  std::vector<std::vector<Mat>> P;  // n x n endomorphisms
  std::vector<Mat> S;               // n endomorphisms
  Mat Q;

  int dim() const { return static_cast<int>(S.size()); }
};

inline Tensor ricci_from_riemann(const Tensor& riemann) {
  const int n = riemann.dim();
  Tensor ric(2, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cplx s = 0.0;
      for (int c = 0; c < n; ++c) s += riemann(c, a, c, b);
      ric(a, b) = s;
    }
  return ric;
}

inline GeometryJet make_geometry(Tensor riemann) {
  GeometryJet g;
  g.ricci = ricci_from_riemann(riemann);
  double scalar = 0.0;
  for (int a = 0; a < riemann.dim(); ++a) scalar += g.ricci(a, a).real();
  g.scalar = scalar;
  g.riemann = std::move(riemann);
  return g;
}

inline GeometryJet flat_geometry(int n) { return make_geometry(Tensor(4, n)); }

/// Riemann tensor with all algebraic symmetries, built by projecting a random
/// seed: antisymmetrize both pairs, symmetrize the pair exchange, then remove
/// the cyclic (first-Bianchi-violating) part.
inline GeometryJet random_geometry_jet(int n, std::uint64_t seed) {
  Rng rng(seed);
  Tensor x(4, n);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.normal();

  Tensor s(4, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          cplx anti = x(a, b, c, d) - x(b, a, c, d) - x(a, b, d, c) + x(b, a, d, c);
          s(a, b, c, d) = anti;
        }
  Tensor sp(4, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          sp(a, b, c, d) = 0.5 * (s(a, b, c, d) + s(c, d, a, b));
  Tensor r(4, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          cplx cyc = (sp(a, b, c, d) + sp(a, c, d, b) + sp(a, d, b, c)) / 3.0;
          r(a, b, c, d) = sp(a, b, c, d) - cyc;
        }
  return make_geometry(std::move(r));
}

/// Random torsion jet; totally antisymmetric in (i,j,k) when requested
/// (the spin module requires it, the Hodge module does not).
/// Random torsion 1-jet. T_{ijk} is always antisymmetric in (i,j), the
/// defining symmetry of a torsion tensor; `antisymmetric` additionally
/// projects onto the totally antisymmetric part.
inline TorsionJet random_torsion_jet(int n, std::uint64_t seed, bool antisymmetric) {
  Rng rng(seed);
  TorsionJet t{Tensor(3, n), Tensor(4, n)};
  for (std::size_t i = 0; i < t.value.size(); ++i) t.value[i] = rng.normal();
  for (std::size_t i = 0; i < t.deriv.size(); ++i) t.deriv[i] = rng.normal();
  {
    Tensor v(3, n), d(4, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          v(i, j, k) = 0.5 * (t.value(i, j, k) - t.value(j, i, k));
          for (int c = 0; c < n; ++c)
            d(c, i, j, k) = 0.5 * (t.deriv(c, i, j, k) - t.deriv(c, j, i, k));
        }
    t.value = std::move(v);
    t.deriv = std::move(d);
  }
  if (antisymmetric) {
    Tensor v(3, n), d(4, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          v(i, j, k) = (t.value(i, j, k) - t.value(j, i, k) + t.value(j, k, i) -
                        t.value(k, j, i) + t.value(k, i, j) - t.value(i, k, j)) / 6.0;
          for (int c = 0; c < n; ++c)
            d(c, i, j, k) = (t.deriv(c, i, j, k) - t.deriv(c, j, i, k) +
                             t.deriv(c, j, k, i) - t.deriv(c, k, j, i) +
                             t.deriv(c, k, i, j) - t.deriv(c, i, k, j)) / 6.0;
        }
    t.value = std::move(v);
    t.deriv = std::move(d);
  }
  return t;
}

inline OneFormJet random_one_form_jet(int n, std::uint64_t seed) {
  Rng rng(seed);
  OneFormJet u{Tensor(1, n), Tensor(2, n)};
  for (std::size_t i = 0; i < u.value.size(); ++i) u.value[i] = rng.normal();
  for (std::size_t i = 0; i < u.deriv.size(); ++i) u.deriv[i] = rng.normal();
  return u;
}

inline PerturbationJet random_perturbation_jet(const CliffordRep& rep, std::uint64_t seed) {
  Rng rng(seed);
  PerturbationJet b;
  b.B0 = rng.matrix(rep.fiber_dim, rep.fiber_dim);
  for (int a = 0; a < rep.n; ++a) b.Ba.push_back(rng.matrix(rep.fiber_dim, rep.fiber_dim));
  return b;
}

inline LaplaceJet zero_laplace_jet(const CliffordRep& rep) {
  LaplaceJet lj;
  const Mat z = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
  lj.P.assign(rep.n, std::vector<Mat>(rep.n, z));
  lj.S.assign(rep.n, z);
  lj.Q = z;
  return lj;
}

/// Shift of (P, S, Q) induced by the perturbation D0 -> D0 + B:
///   P_{ab} += i{gamma^a, B_b},  S_a = i{gamma^a, B_0},
///   Q += i gamma^a B_a + B_0^2.
/// The base must have S = 0 (a Dirac-type D0 has no S term).
inline LaplaceJet perturb_laplace_data(const LaplaceJet& base, const PerturbationJet& b,
                                       const CliffordRep& rep) {
  const int n = rep.n;
  if (base.dim() != n || b.dim() != n)
    throw std::invalid_argument("perturb_laplace_data: dimension mismatch");
  for (const Mat& s : base.S)
    if (s.cwiseAbs().maxCoeff() != 0.0)
      throw std::invalid_argument("perturb_laplace_data: base S must vanish");
  const cplx I{0.0, 1.0};
  LaplaceJet out = base;
  for (int a = 0; a < n; ++a) {
    for (int bb = 0; bb < n; ++bb)
      out.P[a][bb] = base.P[a][bb] + I * anticomm(rep.gamma[a], b.Ba[bb]);
    out.S[a] = I * anticomm(rep.gamma[a], b.B0);
  }
  out.Q = base.Q + b.B0 * b.B0;
  for (int a = 0; a < n; ++a) out.Q += I * rep.gamma[a] * b.Ba[a];
  return out;
}

/// (P, S, Q) of the squared torsionless spin Dirac operator:
/// P_{ab} = (2/3)Ric_{ab} + (1/4)R_{abjk} g^j g^k, S = 0, Q = R/4.
inline LaplaceJet spin_laplace_jet(const GeometryJet& geom, const CliffordRep& rep) {
  const int n = rep.n;
  LaplaceJet lj = zero_laplace_jet(rep);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat p = (2.0 / 3.0) * geom.ricci(a, b) * rep.id();
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          p += 0.25 * geom.riemann(a, b, j, k) * rep.gamma[j] * rep.gamma[k];
      lj.P[a][b] = std::move(p);
    }
  lj.Q = 0.25 * geom.scalar * rep.id();
  return lj;
}

/// The two fiber traces of the torsionless Hodge Laplacian coefficients,
/// (Tr P^0_{aa}, Tr Q^0) = ((2^n/3) R, (2^{n-2}/3) R). The full endomorphisms
/// are not needed by any density formula here.
inline std::pair<double, double> hodge_laplace_trace_data(const GeometryJet& geom,
                                                          const CliffordRep& rep) {
  const double r = geom.scalar;
  const double p2n = std::pow(2.0, rep.n);
  return {p2n / 3.0 * r, p2n / 12.0 * r};
}

}  // namespace specwres

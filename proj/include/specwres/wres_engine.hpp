#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "specwres/jets.hpp"
#include "specwres/operators.hpp"

namespace specwres {

// Second-order operator data O with sigma(O) = F^{ab} xi_a xi_b + i G^a xi_a + H.
struct OperatorData {
  std::vector<std::vector<Mat>> F;  // symmetric in (a,b)
  std::vector<Mat> G;
  Mat H;

  int dim() const { return static_cast<int>(G.size()); }

  static OperatorData zero(const CliffordRep& rep) {
    OperatorData od;
    const Mat z = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
    od.F.assign(rep.n, std::vector<Mat>(rep.n, z));
    od.G.assign(rep.n, z);
    od.H = z;
    return od;
  }

  void check_symmetric(double tol = kAbsTol) const {
    const int n = dim();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!approx_equal(F[a][b], F[b][a], tol))
          throw std::invalid_argument("OperatorData: F must be symmetric in (a,b)");
  }
};

/// Pointwise residue density of O L^{-n/2} for the Laplace-type L carrying
/// (P, S, Q) over the geometry jet:
///   (nu/24) Tr[ 24 H + 12 G^a S_a + F^{aa}(-12Q + 6P_{bb} - 2R - 3 S_b S_b)
///               + 2 F^{ab}(-6 P_{ab} + 2 Ric_{ab} - 3 S_a S_b) ].
inline cplx wres_density_general(const OperatorData& od, const LaplaceJet& lj,
                                 const GeometryJet& geom) {
  const int n = od.dim();
  if (lj.dim() != n || geom.dim() != n)
    throw std::invalid_argument("wres_density_general: dimension mismatch");
  od.check_symmetric();
  const double nu = sphere_volume(n);
  const int d = static_cast<int>(od.H.rows());

  Mat psum = Mat::Zero(d, d);
  Mat s2 = Mat::Zero(d, d);
  for (int b = 0; b < n; ++b) {
    psum += lj.P[b][b];
    s2 += lj.S[b] * lj.S[b];
  }
  Mat central = -12.0 * lj.Q + 6.0 * psum - 2.0 * geom.scalar * Mat::Identity(d, d) - 3.0 * s2;

  cplx tr = 24.0 * od.H.trace();
  for (int a = 0; a < n; ++a) tr += 12.0 * trace_prod(od.G[a], lj.S[a]);
  for (int a = 0; a < n; ++a) tr += trace_prod(od.F[a][a], central);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat block = -6.0 * lj.P[a][b] + 2.0 * geom.ricci(a, b) * Mat::Identity(d, d) -
                  3.0 * lj.S[a] * lj.S[b];
      tr += 2.0 * trace_prod(od.F[a][b], block);
    }
  return (nu / 24.0) * tr;
}

/// Residue density of E L^{1-n/2} for an endomorphism E:
///   ((n-2) nu / 24) Tr[E(-12Q + 6P_{aa} - 2R - 3 S_a S_a)].
inline cplx wres_density_endo(const Mat& e, const LaplaceJet& lj, const GeometryJet& geom) {
  const int n = lj.dim();
  const double nu = sphere_volume(n);
  const int d = static_cast<int>(e.rows());
  Mat psum = Mat::Zero(d, d);
  Mat s2 = Mat::Zero(d, d);
  for (int a = 0; a < n; ++a) {
    psum += lj.P[a][a];
    s2 += lj.S[a] * lj.S[a];
  }
  Mat central = -12.0 * lj.Q + 6.0 * psum - 2.0 * geom.scalar * Mat::Identity(d, d) - 3.0 * s2;
  return ((n - 2) * nu / 24.0) * trace_prod(e, central);
}

/// Residue density of (O - F^{aa} L / (n-2)) L^{-n/2}: the general formula
/// with the trace-part block removed.
inline cplx wres_density_reduced(const OperatorData& od, const LaplaceJet& lj,
                                 const GeometryJet& geom) {
  const int n = od.dim();
  if (n == 2) throw std::invalid_argument("wres_density_reduced: n > 2 required");
  od.check_symmetric();
  const double nu = sphere_volume(n);
  const int d = static_cast<int>(od.H.rows());
  cplx tr = 24.0 * od.H.trace();
  for (int a = 0; a < n; ++a) tr += 12.0 * trace_prod(od.G[a], lj.S[a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat block = -6.0 * lj.P[a][b] + 2.0 * geom.ricci(a, b) * Mat::Identity(d, d) -
                  3.0 * lj.S[a] * lj.S[b];
      tr += 2.0 * trace_prod(od.F[a][b], block);
    }
  return (nu / 24.0) * tr;
}

/// Residue density of E D D^{-n} for a flat-background Dirac perturbation
/// D = D0 + B: (nu/2) Tr[(chi) E (2 B0 - g^a {g^a, B0})]. The optional
/// grading inserts the chiral twist E -> chi E.
inline cplx wres_density_ED(const Mat& e, const Mat& b0, const CliffordRep& rep,
                            const std::optional<Grading>& chi = std::nullopt) {
  if (e.rows() != rep.fiber_dim || b0.rows() != rep.fiber_dim)
    throw std::invalid_argument("wres_density_ED: shape mismatch");
  const double nu = sphere_volume(rep.n);
  Mat core = 2.0 * b0;
  for (int a = 0; a < rep.n; ++a) core -= rep.gamma[a] * anticomm(rep.gamma[a], b0);
  Mat left = chi ? Mat(chi->chi * e) : e;
  return (nu / 2.0) * trace_prod(left, core);
}

/// O = E D packaged as second-order data: F = 0, G^a = i E g^a, H = E B0.
/// Matches sigma(ED) = -E g^a xi_a + E B0 = i (iE g^a) xi_a + E B0.
inline OperatorData ed_operator_data(const Mat& e, const Mat& b0, const CliffordRep& rep) {
  OperatorData od = OperatorData::zero(rep);
  const cplx I{0.0, 1.0};
  for (int a = 0; a < rep.n; ++a) od.G[a] = I * e * rep.gamma[a];
  od.H = e * b0;
  return od;
}

}  // namespace specwres

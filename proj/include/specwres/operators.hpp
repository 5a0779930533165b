#pragma once

#include <stdexcept>

#include "specwres/clifford.hpp"
#include "specwres/jets.hpp"

namespace specwres {

enum class PerturbationKind { spin_torsion, hodge_torsion, custom };

struct PerturbedDirac {
  CliffordRep rep;
  PerturbationJet B;
  PerturbationKind kind = PerturbationKind::custom;
};

namespace detail {

inline bool torsion_value_antisymmetric(const Tensor& t, double tol = kAbsTol) {
  const int n = t.dim();
  double scale = std::max(1.0, t.max_norm());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (std::abs(t(i, j, k) + t(j, i, k)) > tol * scale) return false;
        if (std::abs(t(i, j, k) + t(i, k, j)) > tol * scale) return false;
      }
  return true;
}

inline bool torsion_pair_antisymmetric(const Tensor& t, double tol = kAbsTol) {
  const int n = t.dim();
  double scale = std::max(1.0, t.max_norm());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (std::abs(t(i, j, k) + t(j, i, k)) > tol * scale) return false;
  return true;
}

}  // namespace detail

/// -(i/8) T_{ijk} g^i g^j g^k for a rank-3 slice of the torsion jet.
inline Mat spin_torsion_endo(const Tensor& t3, const CliffordRep& rep) {
  const int n = rep.n;
  Mat b = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
  const cplx c{0.0, -0.125};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat gij = rep.gamma[i] * rep.gamma[j];
      for (int k = 0; k < n; ++k)
        if (t3(i, j, k) != cplx{0.0, 0.0}) b += c * t3(i, j, k) * gij * rep.gamma[k];
    }
  return b;
}

/// Torsion perturbation of the spin Dirac operator. Rejects torsion that is
/// not totally antisymmetric: only that case keeps the operator self-adjoint.
inline PerturbationJet spin_torsion_B(const TorsionJet& t, const CliffordRep& rep) {
  if (rep.kind != ModuleKind::spin)
    throw std::invalid_argument("spin_torsion_B: spin representation required");
  if (t.dim() != rep.n) throw std::invalid_argument("spin_torsion_B: dimension mismatch");
  if (!detail::torsion_value_antisymmetric(t.value))
    throw std::invalid_argument("spin_torsion_B: torsion must be totally antisymmetric");
  const int n = rep.n;
  Tensor dslice(3, n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) dslice(i, j, k) = t.deriv(c, i, j, k);
    if (!detail::torsion_value_antisymmetric(dslice))
      throw std::invalid_argument("spin_torsion_B: torsion derivative must be totally antisymmetric");
  }
  PerturbationJet b;
  b.B0 = spin_torsion_endo(t.value, rep);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) dslice(i, j, k) = t.deriv(c, i, j, k);
    b.Ba.push_back(spin_torsion_endo(dslice, rep));
  }
  return b;
}

/// (1/2) T_{ijk} (l+^j l+^i l-^k + l+^k l-^i l-^j) for a rank-3 slice.
inline Mat hodge_torsion_endo(const Tensor& t3, const CliffordRep& rep) {
  const int n = rep.n;
  const int d = rep.fiber_dim;
  Mat b = Mat::Zero(d, d);
  // Contract the k index first so only n^2 matrix products are needed.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat right = Mat::Zero(d, d);  // sum_k T_{ijk} lambda_-^k
      Mat left = Mat::Zero(d, d);   // sum_k T_{ijk} lambda_+^k
      bool any = false;
      for (int k = 0; k < n; ++k) {
        cplx c = 0.5 * t3(i, j, k);
        if (c == cplx{0.0, 0.0}) continue;
        any = true;
        right += c * rep.lambda_minus[k];
        left += c * rep.lambda_plus[k];
      }
      if (!any) continue;
      b += rep.lambda_plus[j] * rep.lambda_plus[i] * right;
      b += left * rep.lambda_minus[i] * rep.lambda_minus[j];
    }
  return b;
}

/// Contracted rewriting of the same endomorphism, by moving the raising
/// operators left with {l+^i, l-^k} = d_{ik}:
/// (1/2) T_{ijk} [ d_{ik}(l+^j + l-^j) - l+^j l-^k l+^i - l-^i l+^k l-^j ].
/// Used only to cross-check hodge_torsion_endo.
inline Mat hodge_torsion_endo_contracted(const Tensor& t3, const CliffordRep& rep) {
  const int n = rep.n;
  Mat b = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        cplx c = 0.5 * t3(i, j, k);
        if (c == cplx{0.0, 0.0}) continue;
        if (i == k) b += c * (rep.lambda_plus[j] + rep.lambda_minus[j]);
        b -= c * (rep.lambda_plus[j] * rep.lambda_minus[k] * rep.lambda_plus[i] +
                  rep.lambda_minus[i] * rep.lambda_plus[k] * rep.lambda_minus[j]);
      }
  return b;
}

/// Torsion perturbation of the Hodge Dirac operator d + d* on forms.
/// Requires torsion antisymmetric in the first index pair; no total
/// antisymmetry is needed. The contracted form of the defining expression
/// is verified as a matrix identity on construction.
inline PerturbationJet hodge_torsion_B(const TorsionJet& t, const CliffordRep& rep) {
  if (rep.kind != ModuleKind::hodge)
    throw std::invalid_argument("hodge_torsion_B: form representation required");
  if (t.dim() != rep.n) throw std::invalid_argument("hodge_torsion_B: dimension mismatch");
  const int n = rep.n;
  if (!detail::torsion_pair_antisymmetric(t.value))
    throw std::invalid_argument("hodge_torsion_B: torsion must be antisymmetric in first two indices");
  {
    Tensor dslice(3, n);
    for (int c = 0; c < n; ++c) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) dslice(i, j, k) = t.deriv(c, i, j, k);
      if (!detail::torsion_pair_antisymmetric(dslice))
        throw std::invalid_argument(
            "hodge_torsion_B: torsion derivative must be antisymmetric in first two indices");
    }
  }
  PerturbationJet b;
  b.B0 = hodge_torsion_endo(t.value, rep);
  if (!approx_equal(b.B0, hodge_torsion_endo_contracted(t.value, rep)))
    throw std::logic_error("hodge_torsion_B: contracted form mismatch");
  Tensor dslice(3, n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) dslice(i, j, k) = t.deriv(c, i, j, k);
    b.Ba.push_back(hodge_torsion_endo(dslice, rep));
  }
  return b;
}

struct GradingCompatibility {
  bool compatible = false;
  double residual = 0.0;
};

/// Checks that the grading anticommutes with every matrix of the jet.
inline GradingCompatibility grading_compatibility(const PerturbationJet& b, const Grading& chi,
                                                  double tol = kAbsTol) {
  double res = anticomm(chi.chi, b.B0).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, b.B0.cwiseAbs().maxCoeff());
  for (const Mat& ba : b.Ba) {
    res = std::max(res, anticomm(chi.chi, ba).cwiseAbs().maxCoeff());
    scale = std::max(scale, ba.cwiseAbs().maxCoeff());
  }
  return {res <= tol * scale, res};
}

/// Clifford multiplication by the one-form u: u_a g^a.
inline Mat clifford_one_form(const Tensor& u, const CliffordRep& rep) {
  if (u.rank() != 1 || u.dim() != rep.n)
    throw std::invalid_argument("clifford_one_form: rank-1 tensor of matching dim required");
  Mat m = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
  for (int a = 0; a < rep.n; ++a) m += u(a) * rep.gamma[a];
  return m;
}

}  // namespace specwres

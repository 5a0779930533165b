#pragma once

#include <numbers>
#include <optional>
#include <string>

#include <json.hpp>

#include "specwres/operators.hpp"
#include "specwres/wres_engine.hpp"

namespace specwres {

// A functional density together with its multilinear structure: value is the
// fully contracted number, coeff_uw the rank-2 coefficient of u_a w_b, and
// coeff_u_dw the rank-3 coefficient of u_a w_{bc}.
struct DensityReport {
  std::string functional;
  int n = 0;
  ModuleKind kind = ModuleKind::spin;
  bool chiral = false;
  cplx value{0.0, 0.0};
  Tensor coeff_uw;
  Tensor coeff_u_dw;
  std::string oracle = "engine-only";
  double residual = 0.0;

  /// Recontract the coefficient tensors against the jets.
  cplx contract(const OneFormJet& u, const OneFormJet& w) const {
    cplx v = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        v += coeff_uw(a, b) * u.value(a) * w.value(b);
        for (int c = 0; c < n; ++c)
          v += coeff_u_dw(a, b, c) * u.value(a) * w.deriv(b, c);
      }
    return v;
  }
};

inline void to_json(nlohmann::json& j, const DensityReport& r) {
  j = {{"functional", r.functional},
       {"n", r.n},
       {"kind", r.kind == ModuleKind::spin ? "spin" : "hodge"},
       {"chiral", r.chiral},
       {"value", {r.value.real(), r.value.imag()}},
       {"coeff_uw", r.coeff_uw},
       {"coeff_u_dw", r.coeff_u_dw},
       {"oracle", r.oracle},
       {"residual", r.residual}};
}

/// Metric functional density: dim(V) nu g(u, w). Independent of any bounded
/// perturbation of the operator.
inline cplx metric_density(const Tensor& u, const Tensor& w, const CliffordRep& rep) {
  cplx dot = 0.0;
  for (int a = 0; a < rep.n; ++a) dot += u(a) * w(a);
  return static_cast<double>(rep.fiber_dim) * sphere_volume(rep.n) * dot;
}

/// Chiral metric density. Nonzero only at n = 2, where it is proportional to
/// the symplectic pairing eps^{ab} u_a w_b.
inline cplx chiral_metric_density(const Tensor& u, const Tensor& w, const CliffordRep& rep,
                                  const Grading& chi) {
  const cplx I{0.0, 1.0};
  cplx eps_uw = 0.0;
  if (rep.n == 2) eps_uw = u(0) * w(1) - u(1) * w(0);
  switch (chi.kind) {
    case GradingKind::spin_gamma:
      return rep.n == 2 ? 4.0 * std::numbers::pi * I * std::pow(2.0, rep.m()) * eps_uw : cplx{0.0};
    case GradingKind::hodge:
      return rep.n == 2 ? -8.0 * std::numbers::pi * I * eps_uw : cplx{0.0};
    case GradingKind::euler:
      return {0.0, 0.0};
    case GradingKind::hat:
      throw std::invalid_argument("chiral_metric_density: no closed form for this grading");
  }
  throw std::logic_error("chiral_metric_density: unknown grading");
}

/// Shift of the Einstein functional density caused by a bounded perturbation
/// B of a Dirac-type operator, relative to the unperturbed density. With a
/// grading the chiral variant is produced instead.
inline DensityReport einstein_delta_general(const OneFormJet& u, const OneFormJet& w,
                                            const PerturbationJet& b, const CliffordRep& rep,
                                            const std::optional<Grading>& chi = std::nullopt) {
  const int n = rep.n;
  if (u.dim() != n || w.dim() != n || b.dim() != n)
    throw std::invalid_argument("einstein_delta_general: dimension mismatch");
  const double nu = sphere_volume(n);
  const cplx I{0.0, 1.0};
  DensityReport r;
  r.functional = "einstein";
  r.n = n;
  r.kind = rep.kind;
  r.chiral = chi.has_value();
  r.coeff_uw = Tensor(2, n);
  r.coeff_u_dw = Tensor(3, n);

  std::vector<Mat> acomm(n);  // {g^c, B0}
  for (int c = 0; c < n; ++c) acomm[c] = anticomm(rep.gamma[c], b.B0);
  Mat sum_ac_g = Mat::Zero(rep.fiber_dim, rep.fiber_dim);  // {g^c,B0} g^c
  Mat sum_gBc = Mat::Zero(rep.fiber_dim, rep.fiber_dim);   // g^c B_c
  Mat sum_acBc = Mat::Zero(rep.fiber_dim, rep.fiber_dim);  // {g^c, B_c}
  for (int c = 0; c < n; ++c) {
    sum_ac_g += acomm[c] * rep.gamma[c];
    sum_gBc += rep.gamma[c] * b.Ba[c];
    sum_acBc += anticomm(rep.gamma[c], b.Ba[c]);
  }

  if (!chi) {
    Mat tail = sum_ac_g - 2.0 * b.B0;
    for (int a = 0; a < n; ++a)
      for (int bb = 0; bb < n; ++bb) {
        Mat gab = comm(rep.gamma[a], rep.gamma[bb]);
        for (int c = 0; c < n; ++c)
          r.coeff_u_dw(a, bb, c) = (nu / 2.0) * I * trace_prod(gab, acomm[c]);
        Mat quad = (a == bb ? Mat(b.B0) : Mat(Mat::Zero(rep.fiber_dim, rep.fiber_dim)));
        quad -= rep.gamma[a] * acomm[bb];
        r.coeff_uw(a, bb) = (nu / 2.0) * ((I / 2.0) * trace_prod(gab, sum_acBc) +
                                          trace_prod(quad, tail));
      }
  } else {
    const Mat& x = chi->chi;
    Mat sum_gB0g = Mat::Zero(rep.fiber_dim, rep.fiber_dim);  // g^c B0 g^c
    for (int c = 0; c < n; ++c) sum_gB0g += rep.gamma[c] * b.B0 * rep.gamma[c];
    for (int a = 0; a < n; ++a)
      for (int bb = 0; bb < n; ++bb) {
        for (int c = 0; c < n; ++c) {
          Mat lin = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
          if (bb == c) lin += 2.0 * (3.0 - n) * rep.gamma[a];
          if (a == bb) lin += 2.0 * rep.gamma[c];
          if (a == c) lin -= 2.0 * rep.gamma[bb];
          lin -= (4.0 - n) * rep.gamma[a] * rep.gamma[bb] * rep.gamma[c];
          r.coeff_u_dw(a, bb, c) = nu * I * trace_prod(x, lin * b.B0);
        }
        Mat lin1 = (3.0 - n) * rep.gamma[a] * b.Ba[bb] - rep.gamma[bb] * b.Ba[a] -
                   rep.gamma[a] * rep.gamma[bb] * sum_gBc;
        if (a == bb) lin1 += sum_gBc;
        Mat quad = (comm(rep.gamma[bb], rep.gamma[a]) * b.B0 -
                    2.0 * rep.gamma[a] * b.B0 * rep.gamma[bb]) * sum_gB0g;
        r.coeff_uw(a, bb) = nu * (I * trace_prod(x, lin1) + 0.25 * trace_prod(x, quad));
      }
  }
  r.value = r.contract(u, w);
  return r;
}

/// Einstein density shift for the spin Dirac operator with totally
/// antisymmetric torsion, in closed form.
inline DensityReport einstein_spin_torsion(const OneFormJet& u, const OneFormJet& w,
                                           const TorsionJet& t, int n) {
  if (!detail::torsion_value_antisymmetric(t.value))
    throw std::invalid_argument("einstein_spin_torsion: torsion must be totally antisymmetric");
  const double pref = 3.0 * std::pow(2.0, n / 2 - 1) * sphere_volume(n);
  DensityReport r;
  r.functional = "einstein";
  r.n = n;
  r.kind = ModuleKind::spin;
  r.coeff_uw = Tensor(2, n);
  r.coeff_u_dw = Tensor(3, n);
  cplx t0sq = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t0sq += t.value(i, j, k) * t.value(i, j, k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) r.coeff_u_dw(a, b, c) = -pref * t.value(a, b, c);
      cplx dtr = 0.0;
      for (int c = 0; c < n; ++c) dtr += t.deriv(c, a, b, c);
      cplx tt = 0.0;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) tt += t.value(a, j, k) * t.value(b, j, k);
      cplx diag = (a == b) ? t0sq : cplx{0.0};
      r.coeff_uw(a, b) = (pref / 8.0) * (diag - 4.0 * dtr - 6.0 * tt);
    }
  r.value = r.contract(u, w);
  return r;
}

/// Einstein density shift for the Hodge Dirac operator, in closed form.
/// Requires torsion antisymmetric in the first index pair. The linear terms
/// see only the cyclic antisymmetrization of T (totally antisymmetric on
/// this domain); the quadratic block is the full contraction dictated by the
/// form-module trace identities.
inline DensityReport einstein_hodge_torsion(const OneFormJet& u, const OneFormJet& w,
                                            const TorsionJet& t, int n) {
  if (!detail::torsion_pair_antisymmetric(t.value))
    throw std::invalid_argument(
        "einstein_hodge_torsion: torsion must be antisymmetric in first two indices");
  const double pref = 3.0 * sphere_volume(n) * std::pow(2.0, n - 3);
  Tensor at0 = antisymmetrize_torsion(t.value);
  std::vector<Tensor> atd;
  {
    Tensor slice(3, n);
    for (int c = 0; c < n; ++c) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) slice(i, j, k) = t.deriv(c, i, j, k);
      atd.push_back(antisymmetrize_torsion(slice));
    }
  }
  DensityReport r;
  r.functional = "einstein";
  r.n = n;
  r.kind = ModuleKind::hodge;
  r.coeff_uw = Tensor(2, n);
  r.coeff_u_dw = Tensor(3, n);
  // Scalar contractions of the raw torsion entering the quadratic block.
  std::vector<cplx> vtrace(n, cplx{0.0});  // v_i = T_{ijj}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vtrace[i] += t.value(i, j, j);
  cplx vecsq = 0.0, sq = 0.0, mixed = 0.0;
  for (int i = 0; i < n; ++i) {
    vecsq += vtrace[i] * vtrace[i];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        sq += t.value(i, j, k) * t.value(i, j, k);
        mixed += t.value(i, j, k) * t.value(i, k, j);
      }
  }
  const double qn = sphere_volume(n) * std::pow(2.0, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) r.coeff_u_dw(a, b, c) = -4.0 * pref * at0(a, b, c);
      cplx dtr = 0.0;
      for (int c = 0; c < n; ++c) dtr += atd[c](a, b, c);
      cplx m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0, m5 = 0.0;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          m1 += t.value(a, j, k) * t.value(b, j, k);
          m2 += t.value(a, j, k) * t.value(b, k, j);
          m3 += t.value(j, k, a) * t.value(b, j, k);
          m4 += t.value(j, k, b) * t.value(a, k, j);
          m5 += t.value(j, k, a) * t.value(j, k, b);
        }
      cplx diag = (a == b) ? (-0.25 * vecsq + sq / 16.0 - 0.125 * mixed) : cplx{0.0};
      r.coeff_uw(a, b) = -2.0 * pref * dtr +
                         qn * (diag + 0.25 * (-m1 + m2 - m3 + m4) - 0.125 * m5);
    }
  r.value = r.contract(u, w);
  return r;
}

/// Torsion functional density through the general trace formula:
/// (nu/2) u_a v_b w_c Tr[(chi) [g^b, g^a] {g^c, B0}]. Totally antisymmetric
/// in (u, v, w).
inline cplx torsion_functional(const Tensor& u, const Tensor& v, const Tensor& w, const Mat& b0,
                               const CliffordRep& rep,
                               const std::optional<Grading>& chi = std::nullopt) {
  const int n = rep.n;
  const double nu = sphere_volume(n);
  cplx total = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat left = comm(rep.gamma[b], rep.gamma[a]);
      if (chi) left = chi->chi * left;
      for (int c = 0; c < n; ++c) {
        cplx coeff = u(a) * v(b) * w(c);
        if (coeff == cplx{0.0, 0.0}) continue;
        total += coeff * trace_prod(left, anticomm(rep.gamma[c], b0));
      }
    }
  return (nu / 2.0) * total;
}

/// Closed form of the torsion functional for the two named torsion couplings:
/// spin -(3i/2) nu 2^m, Hodge -3i nu 2^{n-1}, both against the cyclic
/// antisymmetrization of T.
inline cplx torsion_functional_closed(const Tensor& u, const Tensor& v, const Tensor& w,
                                      const TorsionJet& t, int n, ModuleKind kind) {
  Tensor at0 = antisymmetrize_torsion(t.value);
  cplx uvw_at = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) uvw_at += u(a) * v(b) * w(c) * at0(a, b, c);
  const double nu = sphere_volume(n);
  const cplx I{0.0, 1.0};
  if (kind == ModuleKind::spin) return -1.5 * I * nu * std::pow(2.0, n / 2) * uvw_at;
  return -3.0 * I * nu * std::pow(2.0, n - 1) * uvw_at;
}

/// Chiral torsion functional for the spin Dirac operator with antisymmetric
/// torsion: nonzero only at n = 4 and n = 6.
inline cplx chiral_torsion_spin(const Tensor& u, const Tensor& v, const Tensor& w,
                                const TorsionJet& t, int n) {
  if (n != 4 && n != 6) return {0.0, 0.0};
  Tensor at0 = antisymmetrize_torsion(t.value);
  const double p2m = std::pow(2.0, n / 2);
  const double pi = std::numbers::pi;
  cplx total = 0.0;
  if (n == 4) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          cplx coeff = u(a) * v(b) * w(c);
          if (coeff == cplx{0.0, 0.0}) continue;
          for (int l = 0; l < 4; ++l) {
            double proj = (a == b && c == l ? 1.0 : 0.0) + (a == l && b == c ? 1.0 : 0.0) -
                          (a == c && b == l ? 1.0 : 0.0);
            if (proj == 0.0) continue;
            cplx eps_at = 0.0;
            for (int i = 0; i < 4; ++i)
              for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                  int s = levi_civita_sign({i, j, k, l});
                  if (s != 0) eps_at += static_cast<double>(s) * at0(i, j, k);
                }
            total += coeff * proj * eps_at;
          }
        }
    return cplx{0.0, -0.5 * pi * pi} * p2m * total;
  }
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        cplx coeff = u(a) * v(b) * w(c);
        if (coeff == cplx{0.0, 0.0}) continue;
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k) {
              int s = levi_civita_sign({a, b, c, i, j, k});
              if (s != 0) total += coeff * static_cast<double>(s) * at0(i, j, k);
            }
      }
  return (std::pow(pi, 3) / 4.0) * p2m * total;
}

/// Scalar curvature functional density for D = D0 + B:
/// ((n-2) nu / 24) f [ -R dim(V) + Tr(-12 B0^2 + 6 g^a {g^a, B0} B0) ].
/// The torsionless part carries the fiber dimension.
inline cplx scalar_density(double f, const Mat& b0, const CliffordRep& rep,
                           const GeometryJet& geom) {
  const int n = rep.n;
  const double nu = sphere_volume(n);
  Mat delta = -12.0 * b0 * b0;
  for (int a = 0; a < n; ++a) delta += 6.0 * rep.gamma[a] * anticomm(rep.gamma[a], b0) * b0;
  cplx tr = delta.trace() - geom.scalar * static_cast<double>(rep.fiber_dim);
  return ((n - 2) * nu / 24.0) * f * tr;
}

/// Closed forms of the scalar functional for the named torsion couplings.
inline cplx scalar_density_closed(double f, const TorsionJet& t, const GeometryJet& geom, int n,
                                  ModuleKind kind) {
  const double nu = sphere_volume(n);
  Tensor at0 = antisymmetrize_torsion(t.value);
  cplx at0sq = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) at0sq += at0(a, b, c) * at0(a, b, c);
  if (kind == ModuleKind::spin)
    return (std::pow(2.0, n / 2) * (n - 2) * nu / 24.0) * f * (-geom.scalar + 2.25 * at0sq);
  cplx vecsq = 0.0;
  for (int b = 0; b < n; ++b) {
    cplx vb = 0.0;
    for (int a = 0; a < n; ++a) vb += t.value(b, a, a);
    vecsq += vb * vb;
  }
  return (std::pow(2.0, n - 3) / 3.0) * (n - 2) * nu * f *
         (-geom.scalar - 3.0 * vecsq + 2.25 * at0sq);
}

/// Effective scalar curvature in the presence of torsion:
/// R - (9/4) (AT0)^2, plus 3 T0_{baa} T0_{bcc} for the Hodge coupling.
inline cplx effective_RT(const TorsionJet& t, const GeometryJet& geom, ModuleKind kind) {
  const int n = t.dim();
  Tensor at0 = antisymmetrize_torsion(t.value);
  cplx at0sq = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) at0sq += at0(a, b, c) * at0(a, b, c);
  cplx out = geom.scalar - 2.25 * at0sq;
  if (kind == ModuleKind::hodge) {
    cplx vecsq = 0.0;
    for (int b = 0; b < n; ++b) {
      cplx vb = 0.0;
      for (int a = 0; a < n; ++a) vb += t.value(b, a, a);
      vecsq += vb * vb;
    }
    out += 3.0 * vecsq;
  }
  return out;
}

/// Chiral scalar functional density: the unperturbed part vanishes for the
/// spin chirality, and the shift is the pure divergence term
/// -(i/2)(n-2) nu f Tr(chi g^a B_a).
inline cplx chiral_scalar_density(double f, const PerturbationJet& b, const CliffordRep& rep,
                                  const Grading& chi) {
  const int n = rep.n;
  const double nu = sphere_volume(n);
  cplx tr = 0.0;
  for (int a = 0; a < n; ++a) tr += trace_prod(chi.chi, rep.gamma[a] * b.Ba[a]);
  return cplx{0.0, -0.5} * static_cast<double>(n - 2) * nu * f * tr;
}

/// Spin closed form of the chiral scalar density:
/// -2^m (nu_3 / 8) delta_{n,4} f eps^{abcd} T^a_{bcd}.
inline cplx chiral_scalar_spin_closed(double f, const TorsionJet& t, int n) {
  if (n != 4) return {0.0, 0.0};
  cplx total = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          int s = levi_civita_sign({a, b, c, d});
          if (s != 0) total += static_cast<double>(s) * t.deriv(a, b, c, d);
        }
  const double nu3 = sphere_volume(4);
  return -std::pow(2.0, 2) * (nu3 / 8.0) * f * total;
}

/// Chiral Einstein density for the spin Dirac operator with antisymmetric
/// torsion: closed forms at n = 4 and n = 6, zero otherwise. (The n = 4 form
/// reads the derivative factor in the linear w_b term as T^b, matching the
/// general formula; the contracted free index makes any other reading
/// ill-formed.)
inline DensityReport chiral_einstein_spin_torsion(const OneFormJet& u, const OneFormJet& w,
                                                  const TorsionJet& t, int n) {
  if (!detail::torsion_value_antisymmetric(t.value))
    throw std::invalid_argument("chiral_einstein_spin_torsion: antisymmetric torsion required");
  DensityReport r;
  r.functional = "einstein";
  r.n = n;
  r.kind = ModuleKind::spin;
  r.chiral = true;
  r.coeff_uw = Tensor(2, n);
  r.coeff_u_dw = Tensor(3, n);
  const double pi = std::numbers::pi;
  if (n == 4) {
    const double pref = 2.0 * pi * pi;
    // eps_ijkd-contractions of T0 and the derivative slices.
    std::vector<cplx> et0(4, 0.0);
    std::vector<std::vector<cplx>> etd(4, std::vector<cplx>(4, 0.0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int d = 0; d < 4; ++d) {
            int s = levi_civita_sign({i, j, k, d});
            if (s == 0) continue;
            et0[d] += static_cast<double>(s) * t.value(i, j, k);
            for (int c = 0; c < 4; ++c)
              etd[c][d] += static_cast<double>(s) * t.deriv(c, i, j, k);
          }
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
          cplx v = 0.0;
          if (b == c) v += et0[a];
          if (a == b) v -= et0[c];
          if (a == c) v += et0[b];
          r.coeff_u_dw(a, b, c) = pref * v;
        }
        cplx quad = 0.0;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
              for (int l = 0; l < 4; ++l) {
                int s = levi_civita_sign({i, j, k, l});
                if (s != 0) quad += static_cast<double>(s) * t.value(i, j, k) * t.value(a, b, l);
              }
        r.coeff_uw(a, b) = pref * (etd[b][a] + 0.75 * quad);
      }
  } else if (n == 6) {
    const cplx pref{0.0, std::pow(pi, 3)};
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        for (int c = 0; c < 6; ++c) {
          cplx v = 0.0;
          for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
              for (int k = 0; k < 6; ++k) {
                int s = levi_civita_sign({i, j, k, a, b, c});
                if (s != 0) v += static_cast<double>(s) * t.value(i, j, k);
              }
          r.coeff_u_dw(a, b, c) = pref * 2.0 * v;
        }
        cplx dv = 0.0;
        for (int c = 0; c < 6; ++c)
          for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
              for (int k = 0; k < 6; ++k) {
                int s = levi_civita_sign({i, j, k, a, b, c});
                if (s != 0) dv += static_cast<double>(s) * t.deriv(c, i, j, k);
              }
        r.coeff_uw(a, b) = -pref * dv;
      }
  }
  r.value = r.contract(u, w);
  return r;
}

/// Wres(u_a gamma g^a D D^{-2m}) for the torsion-coupled spin Dirac operator:
/// 2^m (i nu_3 / 4) delta_{n,4} u_a T_{ijk} eps_{aijk}.
inline cplx chiral_remark_density(const Tensor& u, const TorsionJet& t, int n) {
  if (n != 4) return {0.0, 0.0};
  cplx total = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          int s = levi_civita_sign({a, i, j, k});
          if (s != 0) total += u(a) * static_cast<double>(s) * t.value(i, j, k);
        }
  const double nu3 = sphere_volume(4);
  return std::pow(2.0, 2) * cplx{0.0, nu3 / 4.0} * total;
}

/// Chiral Einstein density of the torsionless spin Dirac operator, through
/// the reduced trace formula (nu/6) Tr(6H - F^{ab} Ric_{ab}). Expected to
/// vanish for every geometry.
inline cplx chiral_einstein_torsionless_spin(const Tensor& u, const Tensor& w,
                                             const GeometryJet& geom, const CliffordRep& rep,
                                             const Grading& chi) {
  const int n = rep.n;
  const double nu = sphere_volume(n);
  const int d = rep.fiber_dim;
  Mat uhat = clifford_one_form(u, rep);
  cplx total = 0.0;
  // H = (1/2) u_a w_b Ric_{jb} chi g^a g^j - (1/4) R u_a w_b chi g^a g^b.
  Mat h = Mat::Zero(d, d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (u(a) * w(b) == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j)
        h += 0.5 * u(a) * w(b) * geom.ricci(j, b) * chi.chi * rep.gamma[a] * rep.gamma[j];
      h -= 0.25 * u(a) * w(b) * geom.scalar * chi.chi * rep.gamma[a] * rep.gamma[b];
    }
  total += 6.0 * h.trace();
  // F^{jk} = u_a (w_k chi g^a g^j + w_j chi g^a g^k - w_b chi g^a g^b d^{jk}).
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Mat f = Mat::Zero(d, d);
      f += w(k) * chi.chi * uhat * rep.gamma[j] + w(j) * chi.chi * uhat * rep.gamma[k];
      if (j == k)
        for (int b = 0; b < n; ++b) f -= w(b) * chi.chi * uhat * rep.gamma[b];
      total -= geom.ricci(j, k) * f.trace();
    }
  return (nu / 6.0) * total;
}

}  // namespace specwres

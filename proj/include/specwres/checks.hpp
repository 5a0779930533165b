#pragma once

#include <functional>
#include <string>
#include <vector>

#include "specwres/functionals.hpp"
#include "specwres/operators.hpp"
#include "specwres/scenario.hpp"
#include "specwres/symbol.hpp"
#include "specwres/wres_engine.hpp"

namespace specwres {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct CheckGroup {
  std::string name;
  std::vector<CheckResult> results;

  void add(std::string check, double residual, double tol) {
    results.push_back({std::move(check), residual, tol, residual <= tol});
  }
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return !results.empty();
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& r : results) m = std::max(m, r.residual);
    return m;
  }
};

namespace detail {

inline double rel_err(cplx a, cplx b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double rel_err(const Mat& a, const Mat& b) {
  double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

inline double tensor_rel_err(const Tensor& a, const Tensor& b) {
  double scale = std::max({1.0, a.max_norm(), b.max_norm()});
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m / scale;
}

/// Pointwise evaluation distance between two symbols over random samples.
inline double symbol_diff_residual(const SymbolPoly& a, const SymbolPoly& b, Rng& rng,
                                   bool with_x) {
  const int n = a.n();
  double res = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<double> x(n, 0.0), xi(n);
    if (with_x)
      for (double& v : x) v = 0.3 * rng.normal();
    for (double& v : xi) v = rng.normal() + (v == 0.0 ? 1e-3 : 0.0);
    res = std::max(res, rel_err(a.eval(x, xi), b.eval(x, xi)));
  }
  return res;
}

inline Tensor basis_one_form(int n, int a) {
  Tensor t(1, n);
  t(a) = 1.0;
  return t;
}

inline Tensor random_real_tensor(int rank, int n, Rng& rng) {
  Tensor t(rank, n);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.normal();
  return t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Clifford and CAR algebra axioms; exact integer arithmetic, residual 0.
inline CheckGroup check_clifford_axioms() {
  CheckGroup g{"clifford"};
  for (int n = 2; n <= 8; n += 2) {
    CliffordRep rep = build_spin_gammas(n);
    double res = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Mat expect = (a == b) ? Mat(2.0 * rep.id()) : Mat(Mat::Zero(rep.fiber_dim, rep.fiber_dim));
        res = std::max(res, (anticomm(rep.gamma[a], rep.gamma[b]) - expect).cwiseAbs().maxCoeff());
      }
    g.add("spin anticommutators n=" + std::to_string(n), res, 0.0);
    Grading chi = build_spin_chirality(rep);
    double cres = (chi.chi * chi.chi - rep.id()).cwiseAbs().maxCoeff();
    for (int a = 0; a < n; ++a)
      cres = std::max(cres, anticomm(chi.chi, rep.gamma[a]).cwiseAbs().maxCoeff());
    cres = std::max(cres, (chi.chi - chi.chi.adjoint()).cwiseAbs().maxCoeff());
    g.add("spin chirality n=" + std::to_string(n), cres, 0.0);
  }
  for (int n = 2; n <= 6; n += 2) {
    CliffordRep rep = build_lambda_ops(n);
    const Mat zero = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
    double res = 0.0;
    for (int p = 0; p < n; ++p)
      for (int r = 0; r < n; ++r) {
        res = std::max(res, anticomm(rep.lambda_plus[p], rep.lambda_plus[r]).cwiseAbs().maxCoeff());
        res = std::max(res, anticomm(rep.lambda_minus[p], rep.lambda_minus[r]).cwiseAbs().maxCoeff());
        Mat mixed = anticomm(rep.lambda_plus[p], rep.lambda_minus[r]) - (p == r ? rep.id() : zero);
        res = std::max(res, mixed.cwiseAbs().maxCoeff());
      }
    g.add("CAR relations n=" + std::to_string(n), res, 0.0);
    double gres = 0.0;
    for (int p = 0; p < n; ++p)
      for (int r = 0; r < n; ++r) {
        Mat dd = (p == r) ? Mat(2.0 * rep.id()) : zero;
        gres = std::max(gres, (anticomm(rep.gamma[p], rep.gamma[r]) - dd).cwiseAbs().maxCoeff());
        gres = std::max(gres,
                        (anticomm(rep.gamma_tilde[p], rep.gamma_tilde[r]) - dd).cwiseAbs().maxCoeff());
        gres = std::max(gres, anticomm(rep.gamma_tilde[p], rep.gamma[r]).cwiseAbs().maxCoeff());
      }
    g.add("form-module gamma relations n=" + std::to_string(n), gres, 0.0);
    HodgeGradings gr = build_hodge_gradings(rep);
    double grres = 0.0;
    for (const Grading* chi : {&gr.euler, &gr.hodge, &gr.hat})
      grres = std::max(grres, (chi->chi * chi->chi - rep.id()).cwiseAbs().maxCoeff());
    grres = std::max(grres, (gr.hat.chi - gr.hodge.chi * gr.euler.chi).cwiseAbs().maxCoeff());
    for (int p = 0; p < n; ++p) {
      grres = std::max(grres, anticomm(gr.euler.chi, rep.gamma[p]).cwiseAbs().maxCoeff());
      grres = std::max(grres, anticomm(gr.hodge.chi, rep.gamma[p]).cwiseAbs().maxCoeff());
      grres = std::max(grres, comm(gr.hat.chi, rep.gamma[p]).cwiseAbs().maxCoeff());
      // chi_h l+- = l-+ chi_h;  chi^ l+- = -l-+ chi^.
      grres = std::max(grres, (gr.hodge.chi * rep.lambda_plus[p] -
                               rep.lambda_minus[p] * gr.hodge.chi).cwiseAbs().maxCoeff());
      grres = std::max(grres, (gr.hat.chi * rep.lambda_plus[p] +
                               rep.lambda_minus[p] * gr.hat.chi).cwiseAbs().maxCoeff());
    }
    g.add("form-module gradings n=" + std::to_string(n), grres, 0.0);
  }
  return g;
}

// ---------------------------------------------------------------------------
// 2. Trace identities of the form module: the six gamma/lambda sweeps and the
// seven torsion-endomorphism identities.
inline double trb_identities_residual(const Tensor& t, const CliffordRep& rep) {
  const int n = rep.n;
  const int d = rep.fiber_dim;
  const cplx I{0.0, 1.0};
  const double p2 = std::pow(2.0, n);
  Mat b = hodge_torsion_endo(t, rep);
  std::vector<Mat> ac(n), gb(n);
  for (int c = 0; c < n; ++c) {
    ac[c] = anticomm(rep.gamma[c], b);
    gb[c] = rep.gamma[c] * b;
  }
  auto cyc = [&](int a, int bb, int c) { return t(a, bb, c) + t(c, a, bb) + t(bb, c, a); };
  double scale = std::max(1.0, t.max_norm());
  scale = p2 * std::max(scale, scale * scale);
  double res = 0.0;
  auto upd = [&](cplx lhs, cplx rhs) { res = std::max(res, std::abs(lhs - rhs) / scale); };

  for (int a = 0; a < n; ++a) upd(gb[a].trace(), 0.0);
  std::vector<Mat> gg(n * n);
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) gg[a * n + bb] = rep.gamma[a] * rep.gamma[bb];
  Mat s4 = Mat::Zero(d, d);  // gamma^d {gamma^d, B}
  for (int dd = 0; dd < n; ++dd) s4 += rep.gamma[dd] * ac[dd];
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int c = 0; c < n; ++c) {
        upd(trace_prod(gg[a * n + bb], gb[c]), I * (p2 / 4.0) * cyc(a, bb, c));
        upd(trace_prod(gg[a * n + bb], ac[c]), I * (p2 / 2.0) * cyc(a, bb, c));
        upd(trace_prod(gg[a * n + bb], rep.gamma[c] * s4), 3.0 * I * (p2 / 2.0) * cyc(a, bb, c));
      }
  {
    cplx vec = 0.0, sq = 0.0;
    for (int bb = 0; bb < n; ++bb) {
      cplx vb = 0.0;
      for (int a = 0; a < n; ++a) vb += t(bb, a, a);
      vec += vb * vb;
    }
    for (int a = 0; a < n; ++a)
      for (int bb = 0; bb < n; ++bb)
        for (int c = 0; c < n; ++c) sq += t(a, bb, c) * t(a, bb, c);
    upd(trace_prod(b, b), (p2 / 4.0) * vec + (p2 / 8.0) * sq);
  }
  Mat z = Mat::Zero(d, d);  // {gamma^c, B} gamma^c
  for (int c = 0; c < n; ++c) z += ac[c] * rep.gamma[c];
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) {
      cplx s6 = 0.0, s7 = 0.0;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          s6 += -t(a, j, k) * t(bb, k, j) + t(a, j, k) * t(bb, j, k) +
                0.5 * t(j, k, a) * t(j, k, bb);
          s7 += t(j, k, bb) * (t(j, k, a) + t(a, j, k)) +
                t(bb, k, j) * (t(k, j, a) + 2.0 * t(a, k, j) - 2.0 * t(a, j, k));
        }
      upd(trace_prod(rep.gamma[a], ac[bb] * b), (p2 / 4.0) * s6);
      upd(trace_prod(z, rep.gamma[a] * ac[bb]), (p2 / 2.0) * s7);
    }
  return res;
}

inline CheckGroup check_trace_lemmas(std::uint64_t seed) {
  CheckGroup g{"trace-lemmas"};
  for (int n = 2; n <= 6; n += 2) {
    CliffordRep rep = build_lambda_ops(n);
    g.add("gamma/lambda trace sweep n=" + std::to_string(n),
          verify_trace_lemma_hodge(rep).max_residual(), 1e-12);
    Rng rng(seed + n);
    double res = 0.0;
    for (int draw = 0; draw < 5; ++draw) {
      Tensor t = random_torsion_jet(n, rng.raw(), false).value;
      res = std::max(res, trb_identities_residual(t, rep));
    }
    g.add("torsion endomorphism traces n=" + std::to_string(n), res, 1e-12);
  }
  return g;
}

// ---------------------------------------------------------------------------
// 3. Spin torsion trace identities.
inline CheckGroup check_spin_traces(std::uint64_t seed, int count = 100) {
  CheckGroup g{"spin-traces"};
  const cplx I{0.0, 1.0};
  for (int n = 2; n <= 6; n += 2) {
    CliffordRep rep = build_spin_gammas(n);
    const double p2m = std::pow(2.0, rep.m());
    Rng rng(seed + 31 * n);
    double res = 0.0;
    for (int draw = 0; draw < count; ++draw) {
      TorsionJet t = random_torsion_jet(n, rng.raw(), true);
      Mat b = spin_torsion_endo(t.value, rep);
      double scale = std::max(1.0, t.value.max_norm());
      Mat lhs = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
      Mat rhs = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
      for (int a = 0; a < n; ++a) {
        Mat aca = anticomm(rep.gamma[a], b);
        lhs += rep.gamma[a] * aca;
        rhs += aca * rep.gamma[a];
        Mat expect = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            expect += -0.75 * I * t.value(a, j, k) * rep.gamma[j] * rep.gamma[k];
        res = std::max(res, (aca - expect).cwiseAbs().maxCoeff() / scale);
      }
      res = std::max(res, (lhs - 6.0 * b).cwiseAbs().maxCoeff() / scale);
      res = std::max(res, (rhs - 6.0 * b).cwiseAbs().maxCoeff() / scale);
      for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb)
          for (int c = 0; c < n; ++c) {
            cplx tr = trace_prod(rep.gamma[a] * rep.gamma[bb], anticomm(rep.gamma[c], b));
            cplx expect = -p2m * 1.5 * I * t.value(c, bb, a);
            res = std::max(res, std::abs(tr - expect) / (p2m * scale));
          }
    }
    g.add("spin torsion traces n=" + std::to_string(n), res, 1e-12);
  }
  return g;
}

// ---------------------------------------------------------------------------
// 4. Spectral closedness: ED residues vanish when either factor is a
// one-form-type element.
inline CheckGroup check_vanishing(std::uint64_t seed, int count = 200) {
  CheckGroup g{"vanishing"};
  for (ModuleKind kind : {ModuleKind::spin, ModuleKind::hodge}) {
    for (int n = 2; n <= 6; n += 2) {
      CliffordRep rep = kind == ModuleKind::spin ? build_spin_gammas(n) : build_lambda_ops(n);
      Rng rng(seed + 7 * n + (kind == ModuleKind::hodge ? 1000 : 0));
      const double nu = sphere_volume(n);
      double res = 0.0;
      for (int draw = 0; draw < count; ++draw) {
        Mat one_form = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
        for (int a = 0; a < n; ++a) one_form += rng.cnormal() * rep.gamma[a];
        Mat other = rng.matrix(rep.fiber_dim, rep.fiber_dim);
        cplx v1 = wres_density_ED(other, one_form, rep);  // B one-form-type
        cplx v2 = wres_density_ED(one_form, other, rep);  // E one-form-type
        double scale = nu * rep.fiber_dim *
                       std::max(1.0, one_form.cwiseAbs().maxCoeff() * other.cwiseAbs().maxCoeff());
        res = std::max({res, std::abs(v1) / scale, std::abs(v2) / scale});
      }
      g.add(std::string(kind == ModuleKind::spin ? "spin" : "hodge") +
                " spectral closedness n=" + std::to_string(n),
            res, 1e-12);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// 5. Two-path agreement between closed-form densities and the general trace
// engine.
inline CheckGroup check_two_path(std::uint64_t seed, int count = 50) {
  CheckGroup g{"two-path"};
  for (int n = 2; n <= 6; n += 2) {
    // Spin module.
    {
      CliffordRep rep = build_spin_gammas(n);
      Rng rng(seed + 11 * n);
      double res_e = 0.0, res_t = 0.0, res_s = 0.0;
      for (int draw = 0; draw < count; ++draw) {
        Scenario s = random_scenario(n, ModuleKind::spin, rng.raw());
        PerturbationJet b = spin_torsion_B(s.torsion, rep);

        DensityReport closed = einstein_spin_torsion(s.u, s.w, s.torsion, n);
        DensityReport engine = einstein_delta_general(s.u, s.w, b, rep);
        res_e = std::max(res_e, detail::rel_err(closed.value, engine.value));
        res_e = std::max(res_e, detail::tensor_rel_err(closed.coeff_uw, engine.coeff_uw));
        res_e = std::max(res_e, detail::tensor_rel_err(closed.coeff_u_dw, engine.coeff_u_dw));

        OneFormJet v = random_one_form_jet(n, rng.raw());
        res_t = std::max(res_t, detail::rel_err(
                                    torsion_functional_closed(s.u.value, v.value, s.w.value,
                                                              s.torsion, n, ModuleKind::spin),
                                    torsion_functional(s.u.value, v.value, s.w.value, b.B0, rep)));

        LaplaceJet lj = perturb_laplace_data(spin_laplace_jet(s.geometry, rep), b, rep);
        cplx scalar_engine = wres_density_endo(s.f * rep.id(), lj, s.geometry);
        cplx scalar_closed = scalar_density_closed(s.f, s.torsion, s.geometry, n, ModuleKind::spin);
        res_s = std::max(res_s, detail::rel_err(scalar_closed, scalar_engine));
        res_s = std::max(res_s, detail::rel_err(scalar_closed,
                                                scalar_density(s.f, b.B0, rep, s.geometry)));
      }
      g.add("spin einstein two-path n=" + std::to_string(n), res_e, 1e-9);
      g.add("spin torsion two-path n=" + std::to_string(n), res_t, 1e-9);
      g.add("spin scalar two-path n=" + std::to_string(n), res_s, 1e-9);
    }
    // Form module.
    {
      CliffordRep rep = build_lambda_ops(n);
      Rng rng(seed + 13 * n);
      double res_e = 0.0, res_t = 0.0, res_s = 0.0;
      for (int draw = 0; draw < count; ++draw) {
        Scenario s = random_scenario(n, ModuleKind::hodge, rng.raw());
        PerturbationJet b = hodge_torsion_B(s.torsion, rep);

        DensityReport closed = einstein_hodge_torsion(s.u, s.w, s.torsion, n);
        DensityReport engine = einstein_delta_general(s.u, s.w, b, rep);
        res_e = std::max(res_e, detail::rel_err(closed.value, engine.value));
        res_e = std::max(res_e, detail::tensor_rel_err(closed.coeff_uw, engine.coeff_uw));
        res_e = std::max(res_e, detail::tensor_rel_err(closed.coeff_u_dw, engine.coeff_u_dw));

        OneFormJet v = random_one_form_jet(n, rng.raw());
        res_t = std::max(res_t, detail::rel_err(
                                    torsion_functional_closed(s.u.value, v.value, s.w.value,
                                                              s.torsion, n, ModuleKind::hodge),
                                    torsion_functional(s.u.value, v.value, s.w.value, b.B0, rep)));

        // Trace route: only Tr(P0_aa) and Tr(Q0) of the unperturbed square
        // are known, which is all the endomorphism formula needs for E = f.
        auto [trp, trq] = hodge_laplace_trace_data(s.geometry, rep);
        const double nu = sphere_volume(n);
        cplx trsum = -12.0 * (trq + trace_prod(b.B0, b.B0));
        for (int a = 0; a < n; ++a) {
          Mat aca = anticomm(rep.gamma[a], b.B0);
          trsum += 3.0 * trace_prod(aca, aca);
        }
        trsum += 6.0 * trp - 2.0 * s.geometry.scalar * rep.fiber_dim;
        cplx scalar_engine = ((n - 2) * nu / 24.0) * s.f * trsum;
        cplx scalar_closed = scalar_density_closed(s.f, s.torsion, s.geometry, n, ModuleKind::hodge);
        res_s = std::max(res_s, detail::rel_err(scalar_closed, scalar_engine));
        res_s = std::max(res_s, detail::rel_err(scalar_closed,
                                                scalar_density(s.f, b.B0, rep, s.geometry)));
      }
      g.add("hodge einstein two-path n=" + std::to_string(n), res_e, 1e-9);
      g.add("hodge torsion two-path n=" + std::to_string(n), res_t, 1e-9);
      g.add("hodge scalar two-path n=" + std::to_string(n), res_s, 1e-9);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// 6. Invariance under one-form fluctuations B -> B + A_a gamma^a.
inline CheckGroup check_fluctuation(std::uint64_t seed, int count = 20) {
  CheckGroup g{"fluctuation"};
  for (ModuleKind kind : {ModuleKind::spin, ModuleKind::hodge}) {
    for (int n = 2; n <= 6; n += 2) {
      CliffordRep rep = kind == ModuleKind::spin ? build_spin_gammas(n) : build_lambda_ops(n);
      Rng rng(seed + 17 * n + (kind == ModuleKind::hodge ? 500 : 0));
      double res = 0.0;
      for (int draw = 0; draw < count; ++draw) {
        PerturbationJet b = random_perturbation_jet(rep, rng.raw());
        PerturbationJet bf = b;
        for (int a = 0; a < n; ++a) bf.B0 += rng.cnormal() * rep.gamma[a];
        for (int c = 0; c < n; ++c)
          for (int a = 0; a < n; ++a) bf.Ba[c] += rng.cnormal() * rep.gamma[a];
        OneFormJet u = random_one_form_jet(n, rng.raw());
        OneFormJet w = random_one_form_jet(n, rng.raw());
        DensityReport r1 = einstein_delta_general(u, w, b, rep);
        DensityReport r2 = einstein_delta_general(u, w, bf, rep);
        res = std::max(res, detail::tensor_rel_err(r1.coeff_uw, r2.coeff_uw));
        res = std::max(res, detail::tensor_rel_err(r1.coeff_u_dw, r2.coeff_u_dw));
        OneFormJet v = random_one_form_jet(n, rng.raw());
        res = std::max(res, detail::rel_err(
                                torsion_functional(u.value, v.value, w.value, b.B0, rep),
                                torsion_functional(u.value, v.value, w.value, bf.B0, rep)));
      }
      g.add(std::string(kind == ModuleKind::spin ? "spin" : "hodge") +
                " fluctuation invariance n=" + std::to_string(n),
            res, 1e-12);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// 7. Independent symbol-calculus oracle: raw residue of the composed symbols
// against the closed-form engine, and the printed parametrix corrections.
inline CheckGroup check_parametrix(std::uint64_t seed, int count = 3) {
  CheckGroup g{"parametrix"};
  const cplx I{0.0, 1.0};
  {
    // Flat torsionless operator: parametrix is exactly ||xi||^{-2} Id.
    CliffordRep rep = build_spin_gammas(2);
    PerturbationJet zero{Mat::Zero(rep.fiber_dim, rep.fiber_dim),
                         std::vector<Mat>(2, Mat::Zero(rep.fiber_dim, rep.fiber_dim))};
    LaplaceJet lj = perturb_laplace_data(zero_laplace_jet(rep), zero, rep);
    SymbolPoly l = laplace_symbol(lj, flat_geometry(2), rep);
    SymbolPoly b = parametrix_inverse_square(l, -4);
    double res = 0.0;
    for (const auto& [key, m] : b.terms()) {
      bool leading = SymbolPoly::homogeneity(key) == -2 && SymbolPoly::xdeg_total(key) == 0;
      Mat expect = leading ? rep.id() : Mat(Mat::Zero(rep.fiber_dim, rep.fiber_dim));
      res = std::max(res, (m - expect).cwiseAbs().maxCoeff());
    }
    g.add("flat parametrix exactness", res, 1e-12);
  }
  for (int n : {2, 4}) {
    CliffordRep rep = build_spin_gammas(n);
    Rng rng(seed + 41 * n);
    const int m = rep.m();
    double res_ed = 0.0, res_gen = 0.0, res_delta = 0.0, res_resid = 0.0;
    for (int draw = 0; draw < count; ++draw) {
      PerturbationJet b = random_perturbation_jet(rep, rng.raw());
      LaplaceJet lj = perturb_laplace_data(zero_laplace_jet(rep), b, rep);
      GeometryJet geom = flat_geometry(n);
      SymbolPoly l = laplace_symbol(lj, geom, rep);
      SymbolPoly inv1 = parametrix_inverse_square(l, -4);
      {
        SymbolPoly resid = SymbolPoly::identity(n, rep.fiber_dim) - compose(l, inv1, -2);
        for (const auto& [key, mat] : resid.terms())
          res_resid = std::max(res_resid, mat.cwiseAbs().maxCoeff());
      }
      SymbolPoly invm = m == 1 ? inv1 : power_symbol(inv1, m);

      Mat e = rng.matrix(rep.fiber_dim, rep.fiber_dim);
      SymbolPoly op_ed = left_mul(e, dirac_symbol(b, rep));
      res_ed = std::max(res_ed, detail::rel_err(raw_wres(op_ed, invm, n),
                                                wres_density_ED(e, b.B0, rep)));

      OperatorData od = OperatorData::zero(rep);
      for (int a = 0; a < n; ++a) {
        od.G[a] = rng.matrix(rep.fiber_dim, rep.fiber_dim);
        for (int bb = a; bb < n; ++bb) {
          od.F[a][bb] = rng.matrix(rep.fiber_dim, rep.fiber_dim);
          od.F[bb][a] = od.F[a][bb];
        }
      }
      od.H = rng.matrix(rep.fiber_dim, rep.fiber_dim);
      SymbolPoly op_gen(n, rep.fiber_dim);
      std::vector<int> z(n, 0);
      op_gen.add_term(od.H, z, z, 0);
      for (int a = 0; a < n; ++a) {
        std::vector<int> mu1 = z;
        mu1[a] = 1;
        op_gen.add_term(I * od.G[a], z, mu1, 0);
        for (int bb = 0; bb < n; ++bb) {
          std::vector<int> mu2 = z;
          mu2[a] += 1;
          mu2[bb] += 1;
          op_gen.add_term(od.F[a][bb], z, mu2, 0);
        }
      }
      res_gen = std::max(res_gen, detail::rel_err(raw_wres(op_gen, invm, n),
                                                  wres_density_general(od, lj, geom)));

      // Printed corrections of sigma(D^{-2k}) relative to the flat inverse,
      // orders -(2k+1) and -(2k+2), for k in {1, 2}.
      for (int k : {1, 2}) {
        SymbolPoly invk = k == 1 ? inv1 : power_symbol(inv1, k);
        SymbolPoly expect_odd(n, rep.fiber_dim);
        SymbolPoly expect_even(n, rep.fiber_dim);
        for (int a = 0; a < n; ++a) {
          std::vector<int> mu = z;
          mu[a] = 1;
          expect_odd.add_term(static_cast<double>(k) * anticomm(rep.gamma[a], b.B0), z, mu,
                              -k - 1);
          for (int c = 0; c < n; ++c) {
            std::vector<int> xd = z;
            xd[c] = 1;
            expect_odd.add_term(static_cast<double>(k) * anticomm(rep.gamma[a], b.Ba[c]), xd, mu,
                                -k - 1);
          }
        }
        Mat c0 = b.B0 * b.B0;
        for (int a = 0; a < n; ++a) c0 += I * rep.gamma[a] * b.Ba[a];
        expect_even.add_term(-static_cast<double>(k) * c0, z, z, -k - 1);
        for (int a = 0; a < n; ++a)
          for (int bb = 0; bb < n; ++bb) {
            std::vector<int> mu = z;
            mu[a] += 1;
            mu[bb] += 1;
            Mat coeff = I * anticomm(rep.gamma[a], b.Ba[bb]) +
                        0.5 * anticomm(rep.gamma[a], b.B0) * anticomm(rep.gamma[bb], b.B0);
            expect_even.add_term(static_cast<double>(k * (k + 1)) * coeff, z, mu, -k - 2);
          }
        res_delta = std::max(res_delta,
                             detail::symbol_diff_residual(invk.homogeneous_part(-2 * k - 1, 1),
                                                          expect_odd, rng, true));
        res_delta = std::max(res_delta,
                             detail::symbol_diff_residual(invk.homogeneous_part(-2 * k - 2, 0),
                                                          expect_even, rng, false));
      }
    }
    g.add("parametrix residual n=" + std::to_string(n), res_resid, 1e-12);
    g.add("raw residue vs ED formula n=" + std::to_string(n), res_ed, 1e-9);
    g.add("raw residue vs general formula n=" + std::to_string(n), res_gen, 1e-9);
    g.add("inverse-square corrections n=" + std::to_string(n), res_delta, 1e-9);
  }
  return g;
}

// ---------------------------------------------------------------------------
// 8. Chiral functionals: closed forms against the chiral trace engine.
inline CheckGroup check_chiral(std::uint64_t seed, int count = 10) {
  CheckGroup g{"chiral"};
  const double pi = std::numbers::pi;
  const cplx I{0.0, 1.0};
  {
    // Metric values at n = 2 and the vanishing above it.
    CliffordRep spin2 = build_spin_gammas(2);
    Grading chi2 = build_spin_chirality(spin2);
    cplx v = chiral_metric_density(detail::basis_one_form(2, 0), detail::basis_one_form(2, 1),
                                   spin2, chi2);
    g.add("chiral metric spin n=2", detail::rel_err(v, cplx{0.0, 8.0 * pi}), 1e-9);

    CliffordRep hodge2 = build_lambda_ops(2);
    HodgeGradings hg2 = build_hodge_gradings(hodge2);
    cplx vh = chiral_metric_density(detail::basis_one_form(2, 0), detail::basis_one_form(2, 1),
                                    hodge2, hg2.hodge);
    g.add("chiral metric hodge n=2", detail::rel_err(vh, cplx{0.0, -8.0 * pi}), 1e-9);
    // Engine value for the Hodge grading at n=2: nu Tr(chi_h u^ w^).
    cplx engine_h = sphere_volume(2) * trace_prod(hg2.hodge.chi, hodge2.gamma[0] * hodge2.gamma[1]);
    g.add("chiral metric hodge n=2 engine", detail::rel_err(vh, engine_h), 1e-9);

    double res_e = 0.0;
    Rng rng(seed + 3);
    for (int n = 2; n <= 6; n += 2) {
      CliffordRep rep = build_lambda_ops(n);
      HodgeGradings hgr = build_hodge_gradings(rep);
      Tensor u = detail::random_real_tensor(1, n, rng);
      Tensor w = detail::random_real_tensor(1, n, rng);
      res_e = std::max(res_e, std::abs(chiral_metric_density(u, w, rep, hgr.euler)));
      // Engine: nu Tr(chi_e u^ w^) must vanish too.
      Mat uw = clifford_one_form(u, rep) * clifford_one_form(w, rep);
      res_e = std::max(res_e, std::abs(sphere_volume(n) * trace_prod(hgr.euler.chi, uw)) /
                                  (sphere_volume(n) * rep.fiber_dim));
    }
    g.add("chiral metric euler vanishing", res_e, 1e-12);

    CliffordRep spin4 = build_spin_gammas(4);
    Grading chi4 = build_spin_chirality(spin4);
    Tensor u4 = detail::random_real_tensor(1, 4, rng);
    Tensor w4 = detail::random_real_tensor(1, 4, rng);
    Mat uw4 = clifford_one_form(u4, spin4) * clifford_one_form(w4, spin4);
    double r4 = std::abs(chiral_metric_density(u4, w4, spin4, chi4)) +
                std::abs(sphere_volume(4) * trace_prod(chi4.chi, uw4));
    g.add("chiral metric spin n=4 vanishing", r4, 1e-12);
  }
  {
    // Torsion case split.
    double res = 0.0, res_zero = 0.0;
    for (int n = 2; n <= 8; n += 2) {
      CliffordRep rep = build_spin_gammas(n);
      Grading chi = build_spin_chirality(rep);
      Rng rng(seed + 19 * n);
      for (int draw = 0; draw < count; ++draw) {
        TorsionJet t = random_torsion_jet(n, rng.raw(), true);
        PerturbationJet b = spin_torsion_B(t, rep);
        Tensor u = detail::random_real_tensor(1, n, rng);
        Tensor v = detail::random_real_tensor(1, n, rng);
        Tensor w = detail::random_real_tensor(1, n, rng);
        Mat e = clifford_one_form(u, rep) * clifford_one_form(v, rep) * clifford_one_form(w, rep);
        cplx engine = wres_density_ED(e, b.B0, rep, chi);
        cplx closed = chiral_torsion_spin(u, v, w, t, n);
        if (n == 2 || n == 8) {
          res_zero = std::max({res_zero, std::abs(engine) / rep.fiber_dim, std::abs(closed)});
        } else {
          res = std::max(res, detail::rel_err(engine, closed));
        }
      }
    }
    g.add("chiral torsion spin closed forms", res, 1e-9);
    g.add("chiral torsion spin vanishing n=2,8", res_zero, 1e-12);
  }
  {
    // Einstein: torsionless vanishing, and the n = 4, 6 closed forms.
    double res_zero = 0.0, res = 0.0;
    for (int n = 2; n <= 6; n += 2) {
      CliffordRep rep = build_spin_gammas(n);
      Grading chi = build_spin_chirality(rep);
      Rng rng(seed + 23 * n);
      for (int draw = 0; draw < count; ++draw) {
        GeometryJet geom = random_geometry_jet(n, rng.raw());
        Tensor u = detail::random_real_tensor(1, n, rng);
        Tensor w = detail::random_real_tensor(1, n, rng);
        res_zero = std::max(res_zero,
                            std::abs(chiral_einstein_torsionless_spin(u, w, geom, rep, chi)) /
                                (sphere_volume(n) * rep.fiber_dim *
                                 std::max(1.0, geom.riemann.max_norm())));
        if (n == 4 || n == 6) {
          TorsionJet t = random_torsion_jet(n, rng.raw(), true);
          PerturbationJet b = spin_torsion_B(t, rep);
          OneFormJet uj = random_one_form_jet(n, rng.raw());
          OneFormJet wj = random_one_form_jet(n, rng.raw());
          DensityReport closed = chiral_einstein_spin_torsion(uj, wj, t, n);
          DensityReport engine = einstein_delta_general(uj, wj, b, rep, chi);
          res = std::max(res, detail::rel_err(closed.value, engine.value));
          res = std::max(res, detail::tensor_rel_err(closed.coeff_uw, engine.coeff_uw));
          res = std::max(res, detail::tensor_rel_err(closed.coeff_u_dw, engine.coeff_u_dw));
        }
      }
    }
    g.add("chiral einstein torsionless vanishing", res_zero, 1e-9);
    g.add("chiral einstein spin closed forms", res, 1e-9);
  }
  {
    // Scalar: spin closed form at n = 4, vanishing at n = 6; remark density.
    double res = 0.0, res6 = 0.0, res_rem = 0.0;
    for (int n : {4, 6}) {
      CliffordRep rep = build_spin_gammas(n);
      Grading chi = build_spin_chirality(rep);
      Rng rng(seed + 29 * n);
      for (int draw = 0; draw < count; ++draw) {
        TorsionJet t = random_torsion_jet(n, rng.raw(), true);
        PerturbationJet b = spin_torsion_B(t, rep);
        cplx engine = chiral_scalar_density(1.0, b, rep, chi);
        if (n == 4) {
          res = std::max(res, detail::rel_err(engine, chiral_scalar_spin_closed(1.0, t, 4)));
          Tensor u = detail::random_real_tensor(1, 4, rng);
          Mat e = chi.chi * clifford_one_form(u, rep);
          res_rem = std::max(res_rem, detail::rel_err(wres_density_ED(e, b.B0, rep),
                                                      chiral_remark_density(u, t, 4)));
        } else {
          res6 = std::max(res6, std::abs(engine) / rep.fiber_dim);
          res6 = std::max(res6, std::abs(chiral_scalar_spin_closed(1.0, t, 6)));
        }
      }
    }
    g.add("chiral scalar spin n=4 closed form", res, 1e-9);
    g.add("chiral scalar spin n=6 vanishing", res6, 1e-12);
    g.add("chiral remark density n=4", res_rem, 1e-9);
  }
  return g;
}

// ---------------------------------------------------------------------------
// 9. Grading compatibility of the form-module torsion coupling.
inline CheckGroup check_grading(std::uint64_t seed) {
  CheckGroup g{"grading"};
  for (int n = 2; n <= 6; n += 2) {
    CliffordRep rep = build_lambda_ops(n);
    HodgeGradings gr = build_hodge_gradings(rep);
    Rng rng(seed + 37 * n);
    double res = 0.0;
    bool direction_ok = true;
    for (int draw = 0; draw < 10; ++draw) {
      TorsionJet t = random_torsion_jet(n, rng.raw(), false);
      PerturbationJet b = hodge_torsion_B(t, rep);
      // Euler grading anticommutes with every torsion coupling.
      res = std::max(res, grading_compatibility(b, gr.euler).residual);
      // Remove the vector part (v_i d_jk - v_j d_ik)/(n-1): chi_h compatible.
      TorsionJet tless = t;
      for (int i = 0; i < n; ++i) {
        cplx vi = 0.0;
        for (int j = 0; j < n; ++j) vi += t.value(i, j, j);
        for (int j = 0; j < n; ++j) {
          tless.value(i, j, j) -= vi / static_cast<double>(n - 1);
          tless.value(j, i, j) += vi / static_cast<double>(n - 1);
        }
        for (int c = 0; c < n; ++c) {
          cplx vci = 0.0;
          for (int j = 0; j < n; ++j) vci += t.deriv(c, i, j, j);
          for (int j = 0; j < n; ++j) {
            tless.deriv(c, i, j, j) -= vci / static_cast<double>(n - 1);
            tless.deriv(c, j, i, j) += vci / static_cast<double>(n - 1);
          }
        }
      }
      PerturbationJet bless = hodge_torsion_B(tless, rep);
      res = std::max(res, grading_compatibility(bless, gr.hodge).residual);
    }
    // Nonzero vector part must break chi_h compatibility.
    TorsionJet tv{Tensor(3, n), Tensor(4, n)};
    tv.value(0, 1, 1) = 1.0;
    tv.value(1, 0, 1) = -1.0;
    PerturbationJet bv = hodge_torsion_B(tv, rep);
    if (grading_compatibility(bv, gr.hodge).compatible) direction_ok = false;
    g.add("euler/traceless-hodge compatibility n=" + std::to_string(n), res, 1e-12);
    g.add("hodge grading rejects vector torsion n=" + std::to_string(n),
          direction_ok ? 0.0 : 1.0, 0.0);
  }
  return g;
}

// ---------------------------------------------------------------------------
// 10. Antisymmetry of the torsion functional and the total-derivative
// symmetry of the spin Einstein non-tensorial part.
inline CheckGroup check_antisymmetry(std::uint64_t seed) {
  CheckGroup g{"antisymmetry"};
  for (ModuleKind kind : {ModuleKind::spin, ModuleKind::hodge}) {
    const int n = 4;
    CliffordRep rep = kind == ModuleKind::spin ? build_spin_gammas(n) : build_lambda_ops(n);
    Rng rng(seed + (kind == ModuleKind::hodge ? 100 : 0));
    // Small integer entries keep every trace product exact in floating point,
    // so the transposition flips on basis triples can be checked at tol 0.
    Mat b0 = Mat::Zero(rep.fiber_dim, rep.fiber_dim);
    for (int r = 0; r < rep.fiber_dim; ++r)
      for (int c = 0; c < rep.fiber_dim; ++c)
        b0(r, c) = cplx(static_cast<double>(static_cast<int>(rng.raw() % 5)) - 2.0,
                        static_cast<double>(static_cast<int>(rng.raw() % 5)) - 2.0);
    double exact_res = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Tensor ei = detail::basis_one_form(n, i), ej = detail::basis_one_form(n, j),
                 ek = detail::basis_one_form(n, k);
          cplx base = torsion_functional(ei, ej, ek, b0, rep);
          exact_res = std::max(exact_res,
                               std::abs(torsion_functional(ej, ei, ek, b0, rep) + base));
          exact_res = std::max(exact_res,
                               std::abs(torsion_functional(ei, ek, ej, b0, rep) + base));
          exact_res = std::max(exact_res,
                               std::abs(torsion_functional(ek, ej, ei, b0, rep) + base));
        }
    g.add(std::string(kind == ModuleKind::spin ? "spin" : "hodge") +
              " torsion transpositions on basis triples",
          exact_res, 0.0);
    double rand_res = 0.0;
    for (int draw = 0; draw < 10; ++draw) {
      Tensor u = detail::random_real_tensor(1, n, rng);
      Tensor v = detail::random_real_tensor(1, n, rng);
      Tensor w = detail::random_real_tensor(1, n, rng);
      cplx base = torsion_functional(u, v, w, b0, rep);
      rand_res = std::max(rand_res,
                          detail::rel_err(torsion_functional(v, u, w, b0, rep), -base));
      rand_res = std::max(rand_res,
                          detail::rel_err(torsion_functional(u, w, v, b0, rep), -base));
      rand_res = std::max(rand_res,
                          detail::rel_err(torsion_functional(w, v, u, b0, rep), -base));
    }
    g.add(std::string(kind == ModuleKind::spin ? "spin" : "hodge") +
              " torsion transpositions random",
          rand_res, 1e-12);
  }
  {
    // -u_a w_bc T0_abc - (1/2) u_a w_b T^c_abc
    //   = -d_c(u_a w_b T_abc) - (u <-> w terms), on jets.
    double res = 0.0;
    for (int n = 2; n <= 6; n += 2) {
      Rng rng(seed + 71 * n);
      for (int draw = 0; draw < 10; ++draw) {
        TorsionJet t = random_torsion_jet(n, rng.raw(), true);
        OneFormJet u = random_one_form_jet(n, rng.raw());
        OneFormJet w = random_one_form_jet(n, rng.raw());
        cplx lhs = 0.0, rhs = 0.0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
              lhs += -u.value(a) * w.deriv(b, c) * t.value(a, b, c) -
                     0.5 * u.value(a) * w.value(b) * t.deriv(c, a, b, c);
              rhs += -(u.deriv(a, c) * w.value(b) * t.value(a, b, c) +
                       u.value(a) * w.deriv(b, c) * t.value(a, b, c) +
                       u.value(a) * w.value(b) * t.deriv(c, a, b, c));
              rhs += -w.value(a) * u.deriv(b, c) * t.value(a, b, c) -
                     0.5 * w.value(a) * u.value(b) * t.deriv(c, a, b, c);
            }
        res = std::max(res, detail::rel_err(lhs, rhs));
      }
    }
    g.add("einstein non-tensorial total-derivative symmetry", res, 1e-12);
  }
  return g;
}

// ---------------------------------------------------------------------------

inline std::vector<std::string> check_group_names() {
  return {"clifford",   "trace-lemmas", "spin-traces", "vanishing",   "two-path",
          "fluctuation", "parametrix",   "chiral",      "grading",     "antisymmetry"};
}

inline CheckGroup run_check_group(const std::string& name, std::uint64_t seed) {
  if (name == "clifford") return check_clifford_axioms();
  if (name == "trace-lemmas") return check_trace_lemmas(seed);
  if (name == "spin-traces") return check_spin_traces(seed);
  if (name == "vanishing") return check_vanishing(seed);
  if (name == "two-path") return check_two_path(seed);
  if (name == "fluctuation") return check_fluctuation(seed);
  if (name == "parametrix") return check_parametrix(seed);
  if (name == "chiral") return check_chiral(seed);
  if (name == "grading") return check_grading(seed);
  if (name == "antisymmetry") return check_antisymmetry(seed);
  throw std::invalid_argument("unknown check group: " + name);
}

}  // namespace specwres

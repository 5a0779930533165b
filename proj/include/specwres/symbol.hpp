#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "specwres/jets.hpp"
#include "specwres/tensor.hpp"

namespace specwres {

// Matrix-valued polynomial symbol in normal coordinates. Each term is
//   coeff * x^xdeg * xi^mu * ||xi||^{2k},
// with the x-degree capped at 2 (all jet data is quadratic at most, and two
// x-derivatives exhaust what survives evaluation at x = 0 after one
// composition). Homogeneity in xi of a term is |mu| + 2k.
class SymbolPoly {
 public:
  struct Key {
    std::vector<int> xdeg;  // per-axis x exponents
    std::vector<int> mu;    // per-axis xi exponents
    int k = 0;              // ||xi||^{2k}

    bool operator<(const Key& o) const {
      return std::tie(xdeg, mu, k) < std::tie(o.xdeg, o.mu, o.k);
    }
  };

  SymbolPoly(int n, int fiber_dim)
      : n_(n), fiber_dim_(fiber_dim), hi_(kExactLo), lo_(kExactLo) {}

  // Exact polynomial symbols are valid at every homogeneity; composition
  // narrows the window from below.
  static constexpr int kExactLo = -1000;

  int n() const { return n_; }
  int fiber_dim() const { return fiber_dim_; }
  int hi() const { return hi_; }
  int lo() const { return lo_; }
  void set_lo(int lo) { lo_ = lo; }

  static int xdeg_total(const Key& key) {
    return std::accumulate(key.xdeg.begin(), key.xdeg.end(), 0);
  }
  static int homogeneity(const Key& key) {
    return std::accumulate(key.mu.begin(), key.mu.end(), 0) + 2 * key.k;
  }

  void add_term(const Mat& coeff, std::vector<int> xdeg, std::vector<int> mu, int k) {
    if (static_cast<int>(xdeg.size()) != n_ || static_cast<int>(mu.size()) != n_)
      throw std::invalid_argument("symbol term: multidegree size mismatch");
    Key key{std::move(xdeg), std::move(mu), k};
    if (xdeg_total(key) > 2) return;
    hi_ = std::max(hi_, homogeneity(key));
    auto [it, fresh] = terms_.try_emplace(key, coeff);
    if (!fresh) it->second += coeff;
  }

  const std::map<Key, Mat>& terms() const { return terms_; }

  /// Drops terms with negligible coefficients, and terms below the validity
  /// window (they carry no trustworthy information).
  SymbolPoly& prune(double tol = 1e-14) {
    double scale = 1.0;
    for (const auto& [key, m] : terms_) scale = std::max(scale, m.cwiseAbs().maxCoeff());
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (homogeneity(it->first) < lo_ || it->second.cwiseAbs().maxCoeff() <= tol * scale)
        it = terms_.erase(it);
      else
        ++it;
    }
    hi_ = kExactLo;
    for (const auto& [key, m] : terms_) hi_ = std::max(hi_, homogeneity(key));
    return *this;
  }

  static SymbolPoly constant(const Mat& m, int n) {
    SymbolPoly s(n, static_cast<int>(m.rows()));
    s.add_term(m, std::vector<int>(n, 0), std::vector<int>(n, 0), 0);
    return s;
  }
  static SymbolPoly identity(int n, int fiber_dim) {
    return constant(Mat::Identity(fiber_dim, fiber_dim), n);
  }

  SymbolPoly& operator+=(const SymbolPoly& o) {
    if (o.n_ != n_ || o.fiber_dim_ != fiber_dim_)
      throw std::invalid_argument("symbol addition: shape mismatch");
    for (const auto& [key, m] : o.terms_) add_term(m, key.xdeg, key.mu, key.k);
    lo_ = std::max(lo_, o.lo_);
    return *this;
  }
  SymbolPoly& operator*=(cplx s) {
    for (auto& [key, m] : terms_) m *= s;
    return *this;
  }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) {
    SymbolPoly nb = b;
    nb *= -1.0;
    a += nb;
    return a;
  }

  /// Pointwise matrix value at (x, xi); ||xi||^{2k} evaluates as (xi.xi)^k.
  Mat eval(const std::vector<double>& x, const std::vector<double>& xi) const {
    Mat out = Mat::Zero(fiber_dim_, fiber_dim_);
    double norm2 = 0.0;
    for (double v : xi) norm2 += v * v;
    for (const auto& [key, m] : terms_) {
      double f = std::pow(norm2, key.k);
      for (int a = 0; a < n_; ++a) {
        for (int e = 0; e < key.xdeg[a]; ++e) f *= x[a];
        for (int e = 0; e < key.mu[a]; ++e) f *= xi[a];
      }
      out += f * m;
    }
    return out;
  }

  /// Terms of one xi-homogeneity with x-degree up to max_xdeg.
  SymbolPoly homogeneous_part(int h, int max_xdeg = 2) const {
    SymbolPoly out(n_, fiber_dim_);
    for (const auto& [key, m] : terms_)
      if (homogeneity(key) == h && xdeg_total(key) <= max_xdeg)
        out.add_term(m, key.xdeg, key.mu, key.k);
    return out;
  }

  /// Terms of one xi-homogeneity with x = 0, as (mu, k, coeff) triples.
  std::vector<std::tuple<std::vector<int>, int, Mat>> homogeneous_at_x0(int h) const {
    std::vector<std::tuple<std::vector<int>, int, Mat>> out;
    for (const auto& [key, m] : terms_)
      if (homogeneity(key) == h && xdeg_total(key) == 0)
        out.emplace_back(key.mu, key.k, m);
    return out;
  }

 private:
  int n_;
  int fiber_dim_;
  int hi_;
  int lo_;
  std::map<Key, Mat> terms_;
};

namespace detail {

// One xi-derivative of xi^mu ||xi||^{2k}: up to two terms.
struct XiTerm {
  std::vector<int> mu;
  int k;
  double factor;
};

inline std::vector<XiTerm> d_xi(const XiTerm& t, int p) {
  std::vector<XiTerm> out;
  if (t.mu[p] > 0) {
    XiTerm a = t;
    a.factor *= t.mu[p];
    a.mu[p] -= 1;
    out.push_back(std::move(a));
  }
  if (t.k != 0) {
    XiTerm b = t;
    b.factor *= 2.0 * t.k;
    b.k -= 1;
    b.mu[p] += 1;
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace detail

/// Symbol of the operator product, with the quantization sigma(d_a) = i xi_a:
///   sigma(AB) = sum_alpha (1/alpha!) d_xi^alpha sigma(A) (-i)^|alpha| d_x^alpha sigma(B),
/// truncated at x-degree 2 and below homogeneity drop_below. Terms needing
/// |alpha| > 2 vanish since x-degrees never exceed 2.
inline SymbolPoly compose(const SymbolPoly& a, const SymbolPoly& b, int drop_below) {
  if (a.n() != b.n() || a.fiber_dim() != b.fiber_dim())
    throw std::invalid_argument("compose: incompatible symbols");
  const int n = a.n();
  SymbolPoly out(n, a.fiber_dim());
  out.set_lo(std::max({a.lo() == SymbolPoly::kExactLo ? SymbolPoly::kExactLo : a.lo() + b.hi(),
                       b.lo() == SymbolPoly::kExactLo ? SymbolPoly::kExactLo : b.lo() + a.hi(),
                       drop_below}));
  const cplx mi{0.0, -1.0};

  for (const auto& [bkey, bmat] : b.terms()) {
    // Enumerate alpha <= bkey.xdeg with |alpha| <= 2, carrying the x-derivative
    // combinatorial factor and the reduced x-degree of b's term.
    struct Alpha {
      std::vector<int> alpha;
      std::vector<int> bx;
      double xfact;
    };
    std::vector<Alpha> alphas;
    alphas.push_back({std::vector<int>(n, 0), bkey.xdeg, 1.0});
    for (int p = 0; p < n; ++p)
      if (bkey.xdeg[p] > 0) {
        Alpha a1{std::vector<int>(n, 0), bkey.xdeg, static_cast<double>(bkey.xdeg[p])};
        a1.alpha[p] = 1;
        a1.bx[p] -= 1;
        alphas.push_back(a1);
      }
    for (int p = 0; p < n; ++p)
      for (int q = p; q < n; ++q) {
        std::vector<int> al(n, 0);
        al[p] += 1;
        al[q] += 1;
        double fact = 1.0;
        std::vector<int> bx = bkey.xdeg;
        bool ok = true;
        for (int r = 0; r < n; ++r) {
          for (int e = 0; e < al[r]; ++e) {
            if (bx[r] <= 0) { ok = false; break; }
            fact *= bx[r];
            bx[r] -= 1;
          }
          if (!ok) break;
        }
        if (!ok) continue;
        // 1/alpha! for the repeated-index case.
        if (p == q) fact *= 0.5;
        alphas.push_back({al, bx, fact});
      }

    for (const auto& al : alphas) {
      int order = std::accumulate(al.alpha.begin(), al.alpha.end(), 0);
      cplx phase = 1.0;
      for (int e = 0; e < order; ++e) phase *= mi;
      for (const auto& [akey, amat] : a.terms()) {
        // x-degree of the product.
        int xtot = 0;
        std::vector<int> xdeg(n);
        for (int r = 0; r < n; ++r) {
          xdeg[r] = akey.xdeg[r] + al.bx[r];
          xtot += xdeg[r];
        }
        if (xtot > 2) continue;
        std::vector<detail::XiTerm> xi{{akey.mu, akey.k, 1.0}};
        bool dead = false;
        for (int p = 0; p < n && !dead; ++p)
          for (int e = 0; e < al.alpha[p] && !dead; ++e) {
            std::vector<detail::XiTerm> next;
            for (const auto& t : xi) {
              auto d = detail::d_xi(t, p);
              next.insert(next.end(), d.begin(), d.end());
            }
            xi = std::move(next);
            dead = xi.empty();
          }
        if (dead) continue;
        Mat prod = amat * bmat;
        for (const auto& t : xi) {
          std::vector<int> mu(n);
          int h = 2 * (t.k + bkey.k);
          for (int r = 0; r < n; ++r) {
            mu[r] = t.mu[r] + bkey.mu[r];
            h += mu[r];
          }
          if (h < drop_below) continue;
          out.add_term((t.factor * al.xfact * phase) * prod, xdeg, mu, t.k + bkey.k);
        }
      }
    }
  }
  return out.prune();
}

/// Left multiplication by a constant endomorphism: sigma(E A) = E sigma(A).
inline SymbolPoly left_mul(const Mat& e, const SymbolPoly& s) {
  SymbolPoly out(s.n(), s.fiber_dim());
  for (const auto& [key, m] : s.terms()) out.add_term(e * m, key.xdeg, key.mu, key.k);
  out.set_lo(s.lo());
  return out;
}

/// Symbol of the Laplace-type operator in normal coordinates:
///   a2 = (delta_ab + (1/3) R_{acbd} x^c x^d) xi_a xi_b,
///   a1 = i (P_{ab} x^b + S_a) xi_a,  a0 = Q.
inline SymbolPoly laplace_symbol(const LaplaceJet& lj, const GeometryJet& geom,
                                 const CliffordRep& rep) {
  const int n = rep.n;
  SymbolPoly s(n, rep.fiber_dim);
  std::vector<int> z(n, 0);
  s.add_term(rep.id(), z, z, 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          cplx r = geom.riemann(a, c, b, d);
          if (r == cplx{0.0, 0.0}) continue;
          std::vector<int> xdeg = z, mu = z;
          xdeg[c] += 1;
          xdeg[d] += 1;
          mu[a] += 1;
          mu[b] += 1;
          s.add_term((r / 3.0) * rep.id(), std::move(xdeg), std::move(mu), 0);
        }
  const cplx I{0.0, 1.0};
  for (int a = 0; a < n; ++a) {
    std::vector<int> mu = z;
    mu[a] = 1;
    for (int b = 0; b < n; ++b) {
      std::vector<int> xdeg = z;
      xdeg[b] = 1;
      s.add_term(I * lj.P[a][b], std::move(xdeg), mu, 0);
    }
    s.add_term(I * lj.S[a], z, mu, 0);
  }
  s.add_term(lj.Q, z, z, 0);
  return s.prune();
}

/// Flat-background symbol of D = i g^a d_a + B(x), B(x) = B0 + B_a x^a:
/// sigma(D) = -g^a xi_a + B0 + B_a x^a.
inline SymbolPoly dirac_symbol(const PerturbationJet& b, const CliffordRep& rep) {
  const int n = rep.n;
  SymbolPoly s(n, rep.fiber_dim);
  std::vector<int> z(n, 0);
  for (int a = 0; a < n; ++a) {
    std::vector<int> mu = z;
    mu[a] = 1;
    s.add_term(-rep.gamma[a], z, std::move(mu), 0);
  }
  s.add_term(b.B0, z, z, 0);
  for (int c = 0; c < n; ++c) {
    std::vector<int> xdeg = z;
    xdeg[c] = 1;
    s.add_term(b.Ba[c], std::move(xdeg), z, 0);
  }
  return s;
}

/// Parametrix of a Laplace-type symbol: b with compose(l, b) = Id up to
/// homogeneity `lowest` and x-degree 2, by Neumann refinement from
/// ||xi||^{-2} Id. Requires the elliptic leading part ||xi||^2 Id.
inline SymbolPoly parametrix_inverse_square(const SymbolPoly& l, int lowest = -4) {
  const int n = l.n();
  const int d = l.fiber_dim();
  std::vector<int> z(n, 0);
  {
    // Leading (homogeneity 2, x-independent) part must be exactly ||xi||^2 Id.
    SymbolPoly lead(n, d);
    for (const auto& [key, m] : l.terms())
      if (SymbolPoly::homogeneity(key) == 2 && SymbolPoly::xdeg_total(key) == 0)
        lead.add_term(m, key.xdeg, key.mu, key.k);
    Rng rng(17);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<double> xi(n);
      double norm2 = 0.0;
      for (double& v : xi) {
        v = rng.normal();
        norm2 += v * v;
      }
      if (!approx_equal(lead.eval(std::vector<double>(n, 0.0), xi),
                        norm2 * Mat::Identity(d, d), 1e-9))
        throw std::invalid_argument("parametrix: non-elliptic principal symbol");
    }
  }
  SymbolPoly b0(n, d);
  b0.add_term(Mat::Identity(d, d), z, z, -1);
  SymbolPoly b = b0;
  const int iterations = (2 - lowest) + 1;
  for (int it = 0; it < iterations; ++it) {
    SymbolPoly res = SymbolPoly::identity(n, d) - compose(l, b, lowest + 2);
    SymbolPoly corr = compose(b0, res, lowest);
    corr.set_lo(SymbolPoly::kExactLo);  // window recomputed below
    b += corr;
    b.prune();
  }
  b.set_lo(lowest);
  b.prune();
  return b;
}

/// k-fold composition of a parametrix with itself (sigma of the k-th power).
inline SymbolPoly power_symbol(const SymbolPoly& b, int k) {
  if (k < 1) throw std::invalid_argument("power_symbol: k >= 1 required");
  SymbolPoly out = b;
  for (int i = 1; i < k; ++i) {
    int drop = out.lo() + b.hi() >= b.lo() + out.hi() ? out.lo() + b.hi() : b.lo() + out.hi();
    out = compose(out, b, drop);
    if (out.hi() < out.lo())
      throw std::invalid_argument("power_symbol: truncation underflow");
  }
  return out;
}

/// Pointwise Wodzicki residue density: trace of the homogeneity -n part of
/// op composed with inv, at x = 0, integrated over the unit cosphere.
inline cplx raw_wres(const SymbolPoly& op, const SymbolPoly& inv, int n) {
  SymbolPoly c = compose(op, inv, -n);
  if (c.lo() > -n) throw std::invalid_argument("raw_wres: insufficient truncation order");
  cplx total = 0.0;
  for (const auto& [mu, k, m] : c.homogeneous_at_x0(-n))
    total += m.trace() * sphere_monomial_integral(mu);
  return total;
}

inline nlohmann::json symbol_to_json(const SymbolPoly& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, m] : s.terms()) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        entries.push_back({m(i, j).real(), m(i, j).imag()});
    terms.push_back({{"xdeg", key.xdeg}, {"mu", key.mu}, {"k", key.k}, {"entries", entries}});
  }
  return {{"n", s.n()}, {"fiber_dim", s.fiber_dim()}, {"hi", s.hi()}, {"lo", s.lo()},
          {"terms", terms}};
}

}  // namespace specwres

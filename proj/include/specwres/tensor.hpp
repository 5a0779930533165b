#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "specwres/numerics.hpp"

namespace specwres {

// Ordered list of axis indices. Form indices are kept strictly increasing.
using MultiIndex = std::vector<int>;

inline bool strictly_increasing(const MultiIndex& idx) {
  return std::adjacent_find(idx.begin(), idx.end(),
                            std::greater_equal<int>()) == idx.end();
}

/// Sign of the permutation mapping `from` onto `to`; 0 if they are not
/// permutations of each other or contain repeats.
inline int permutation_sign(MultiIndex from, const MultiIndex& to) {
  if (from.size() != to.size()) return 0;
  {
    MultiIndex sorted = from;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
  }
  int sign = 1;
  for (std::size_t i = 0; i < to.size(); ++i) {
    auto it = std::find(from.begin() + i, from.end(), to[i]);
    if (it == from.end()) return 0;
    auto j = static_cast<std::size_t>(it - from.begin());
    if (j != i) {
      std::swap(from[i], from[j]);
      sign = -sign;
    }
  }
  // Any repeated index means `to` was matched out of a multiset; reject.
  for (std::size_t i = 0; i + 1 < from.size(); ++i)
    if (from[i] == from[i + 1]) return 0;
  return sign;
}

/// epsilon^I_{pJ}: +/-1 if (p,J...) is a permutation of I with that parity,
/// 0 otherwise.
inline int epsilon_generalized(const MultiIndex& I, int p, const MultiIndex& J) {
  MultiIndex pj;
  pj.reserve(J.size() + 1);
  pj.push_back(p);
  pj.insert(pj.end(), J.begin(), J.end());
  std::vector<int> sorted_pj = pj, sorted_i = I;
  std::sort(sorted_pj.begin(), sorted_pj.end());
  std::sort(sorted_i.begin(), sorted_i.end());
  if (sorted_pj != sorted_i) return 0;
  if (std::adjacent_find(sorted_pj.begin(), sorted_pj.end()) != sorted_pj.end())
    return 0;
  return permutation_sign(pj, I);
}

/// Full Levi-Civita symbol of a (0-based) index list.
inline int levi_civita_sign(const MultiIndex& idx) {
  MultiIndex sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
  return permutation_sign(idx, sorted);
}

// Dense complex tensor of small rank over a fixed dimension. Entries are
// stored in row-major multi-index order.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int rank, int dim)
      : rank_(rank), dim_(dim), data_(size_for(rank, dim), cplx{0.0, 0.0}) {
    if (rank < 0 || rank > 6) throw std::invalid_argument("tensor rank out of range");
    if (dim < 1 || dim > 8) throw std::invalid_argument("tensor dim out of range");
  }

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }

  cplx& operator[](std::size_t flat) { return data_[flat]; }
  const cplx& operator[](std::size_t flat) const { return data_[flat]; }

  template <typename... Ix>
  cplx& operator()(Ix... ix) {
    return data_[flatten({static_cast<int>(ix)...})];
  }
  template <typename... Ix>
  const cplx& operator()(Ix... ix) const {
    return data_[flatten({static_cast<int>(ix)...})];
  }

  cplx at(const MultiIndex& idx) const { return data_[flatten_checked(idx)]; }
  cplx& at(const MultiIndex& idx) { return data_[flatten_checked(idx)]; }

  double max_norm() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  Tensor& operator+=(const Tensor& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor& operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend Tensor operator*(cplx s, Tensor t) { return t *= s; }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  bool approx(const Tensor& o, double tol = kAbsTol) const {
    check_shape(o);
    double scale = std::max({1.0, max_norm(), o.max_norm()});
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (std::abs(data_[i] - o.data_[i]) > tol * scale) return false;
    return true;
  }

  const std::vector<cplx>& entries() const { return data_; }

 private:
  static std::size_t size_for(int rank, int dim) {
    std::size_t s = 1;
    for (int i = 0; i < rank; ++i) s *= static_cast<std::size_t>(dim);
    return s;
  }

  std::size_t flatten(std::initializer_list<int> idx) const {
    assert(static_cast<int>(idx.size()) == rank_);
    std::size_t flat = 0;
    for (int i : idx) {
      assert(i >= 0 && i < dim_);
      flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return flat;
  }
  std::size_t flatten_checked(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != rank_)
      throw std::out_of_range("tensor index rank mismatch");
    for (int i : idx)
      if (i < 0 || i >= dim_) throw std::out_of_range("tensor index out of range");
    return flatten_vec(idx);
  }
  std::size_t flatten_vec(const MultiIndex& idx) const {
    assert(static_cast<int>(idx.size()) == rank_);
    std::size_t flat = 0;
    for (int i : idx) flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    return flat;
  }
  void check_shape(const Tensor& o) const {
    if (rank_ != o.rank_ || dim_ != o.dim_)
      throw std::invalid_argument("tensor shape mismatch");
  }

  int rank_ = 0;
  int dim_ = 1;
  std::vector<cplx> data_{cplx{0.0, 0.0}};
};

inline void to_json(nlohmann::json& j, const Tensor& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& v : t.entries())
    entries.push_back({v.real(), v.imag()});
  j = {{"rank", t.rank()}, {"dim", t.dim()}, {"entries", std::move(entries)}};
}

inline void from_json(const nlohmann::json& j, Tensor& t) {
  t = Tensor(j.at("rank").get<int>(), j.at("dim").get<int>());
  const auto& entries = j.at("entries");
  if (entries.size() != t.size())
    throw std::invalid_argument("tensor entry count does not match rank/dim");
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = cplx{entries[i][0].get<double>(), entries[i][1].get<double>()};
}

/// Cyclic average (1/3)(T_ijk + T_kij + T_jki).
inline Tensor antisymmetrize_torsion(const Tensor& t) {
  if (t.rank() != 3) throw std::invalid_argument("antisymmetrize_torsion: rank 3 required");
  const int n = t.dim();
  Tensor out(3, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out(i, j, k) = (t(i, j, k) + t(k, i, j) + t(j, k, i)) / 3.0;
  return out;
}

/// Vol(S^{n-1}) = 2 pi^{n/2} / Gamma(n/2).
inline double sphere_volume(int n) {
  if (n < 2) throw std::invalid_argument("sphere_volume: n >= 2 required");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

/// Exact moment of xi^degrees over the unit sphere S^{n-1}:
/// 2 prod Gamma((d_i+1)/2) / Gamma((|d|+n)/2), zero if any d_i is odd.
inline double sphere_monomial_integral(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  if (n < 2) throw std::invalid_argument("sphere_monomial_integral: n >= 2 required");
  int total = 0;
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("negative degree");
    total += d;
  }
  if (total > 8) throw std::invalid_argument("sphere_monomial_integral: degree overflow");
  for (int d : degrees)
    if (d % 2 != 0) return 0.0;
  double num = 2.0;
  for (int d : degrees) num *= std::tgamma(0.5 * (d + 1));
  return num / std::tgamma(0.5 * (total + n));
}

}  // namespace specwres

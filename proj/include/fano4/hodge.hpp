#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "fano4/catalog.hpp"
#include "fano4/errors.hpp"
#include "fano4/rational.hpp"

namespace fano4 {

/// Sparse two-variable polynomial e(W)(u, v) = sum h^{p,q} u^p v^q.
/// Zero coefficients are never stored.
class HodgePolynomial {
 public:
  using Key = std::pair<int, int>;
  using Coeff = std::int64_t;

  HodgePolynomial() = default;

  static HodgePolynomial constant(Coeff c) {
    HodgePolynomial e;
    e.set(0, 0, c);
    return e;
  }

  Coeff operator()(int p, int q) const {
    auto it = coeffs_.find({p, q});
    return it == coeffs_.end() ? 0 : it->second;
  }

  void set(int p, int q, Coeff c) {
    if (p < 0 || q < 0) throw DomainError("Hodge indices must be non-negative");
    if (c == 0) {
      coeffs_.erase({p, q});
    } else {
      coeffs_[{p, q}] = c;
    }
  }

  const std::map<Key, Coeff>& terms() const { return coeffs_; }

  bool is_symmetric() const {
    for (const auto& [k, c] : coeffs_) {
      if ((*this)(k.second, k.first) != c) return false;
    }
    return true;
  }

  bool is_non_negative() const {
    for (const auto& [k, c] : coeffs_) {
      if (c < 0) return false;
    }
    return true;
  }

  /// Largest p or q carrying a non-zero coefficient; -1 for the zero polynomial.
  int max_degree() const {
    int m = -1;
    for (const auto& [k, c] : coeffs_) m = std::max({m, k.first, k.second});
    return m;
  }

  /// Sum of h^{p,q} over p + q = k, i.e. the Betti number b_k.
  Coeff betti(int k) const {
    Coeff s = 0;
    for (const auto& [key, c] : coeffs_) {
      if (key.first + key.second == k) s += c;
    }
    return s;
  }

  HodgePolynomial& operator+=(const HodgePolynomial& o) {
    for (const auto& [k, c] : o.coeffs_) set(k.first, k.second, (*this)(k.first, k.second) + c);
    return *this;
  }

  HodgePolynomial& operator-=(const HodgePolynomial& o) {
    for (const auto& [k, c] : o.coeffs_) set(k.first, k.second, (*this)(k.first, k.second) - c);
    return *this;
  }

  friend HodgePolynomial operator+(HodgePolynomial l, const HodgePolynomial& r) { return l += r; }
  friend HodgePolynomial operator-(HodgePolynomial l, const HodgePolynomial& r) { return l -= r; }

  friend HodgePolynomial operator*(const HodgePolynomial& l, const HodgePolynomial& r) {
    HodgePolynomial out;
    for (const auto& [kl, cl] : l.coeffs_) {
      for (const auto& [kr, cr] : r.coeffs_) {
        const int p = kl.first + kr.first;
        const int q = kl.second + kr.second;
        out.set(p, q, out(p, q) + cl * cr);
      }
    }
    return out;
  }

  friend bool operator==(const HodgePolynomial&, const HodgePolynomial&) = default;

 private:
  std::map<Key, Coeff> coeffs_;
};

inline std::string to_string(const HodgePolynomial& e) {
  std::string s;
  for (const auto& [k, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + " u^" + std::to_string(k.first) + " v^" + std::to_string(k.second);
  }
  return s.empty() ? "0" : s;
}

/// e(P^n) = sum_{i=0}^n (uv)^i.
inline HodgePolynomial projective_space(int n) {
  if (n < 0) throw DomainError("projective_space: n must be non-negative");
  HodgePolynomial e;
  for (int i = 0; i <= n; ++i) e.set(i, i, 1);
  return e;
}

/// e(P(E)) = e(W) e(P^n) for a P^n-bundle over W.
inline HodgePolynomial bundle_formula(const HodgePolynomial& e_base, int n) {
  if (n < 1) throw DomainError("bundle_formula: fibre dimension must be >= 1");
  return e_base * projective_space(n);
}

/// e(blow-up of W along V) = e(W) + e(V) (e(P^{c-1}) - 1), c = codim V.
inline HodgePolynomial blowup_formula(const HodgePolynomial& e_ambient,
                                      const HodgePolynomial& e_centre, int codim) {
  if (codim < 2) throw DomainError("blowup_formula: codimension must be >= 2");
  auto out = e_ambient + e_centre * (projective_space(codim - 1) - HodgePolynomial::constant(1));
  if (!out.is_non_negative()) throw IntegrityError("blow-up produced a negative Hodge number");
  return out;
}

struct SurfaceHodge {
  int h01 = 0;
  int h02 = 0;
  int h11 = 0;
};

namespace detail {

inline void require_surface_degree(const FanoThreefold& z, int d) {
  if (d < 1 || d > 2 * z.index - 2) {
    throw DomainError("surface degree d=" + std::to_string(d) + " outside 1.." +
                      std::to_string(2 * z.index - 2) + " for Z_" + std::to_string(z.id));
  }
}

constexpr int binomial(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace detail

/// h^{0,2} of a smooth surface A in |O_Z(d)|, i.e. h^3(O_Z(-d)). Only the
/// degrees reachable by admissible families are covered:
/// 0 for d < i_Z, 1 for d = i_Z, 5 for the quadric with d = 4, and
/// binomial(d-1, 3) on P^3.
inline int surface_h02(const FanoThreefold& z, int d) {
  detail::require_surface_degree(z, d);
  if (z.index == 4) return detail::binomial(d - 1, 3);
  if (d < z.index) return 0;
  if (d == z.index) return 1;
  if (z.index == 3 && d == 4) return 5;
  throw DomainError("surface_h02: no formula for Z_" + std::to_string(z.id) +
                    ", d=" + std::to_string(d));
}

/// h^{1,1}(A) from Noether's formula: 10 + 10 h^{0,2} - d (d - i_Z)^2 delta.
inline int surface_h11(const FanoThreefold& z, int d) {
  const int h02 = surface_h02(z, d);
  const int v = 10 + 10 * h02 - d * (d - z.index) * (d - z.index) * z.degree;
  if (v <= 0) {
    throw IntegrityError("surface_h11 is non-positive for Z_" + std::to_string(z.id) +
                         ", d=" + std::to_string(d));
  }
  return v;
}

inline SurfaceHodge surface_hodge(const FanoThreefold& z, int d) {
  return {0, surface_h02(z, d), surface_h11(z, d)};
}

/// e(A) assembled from h^{0,0} = h^{2,2} = 1, h^{0,1} = 0 and the computed
/// h^{0,2}, h^{1,1}.
inline HodgePolynomial hodge_of_surface(const FanoThreefold& z, int d) {
  const auto s = surface_hodge(z, d);
  HodgePolynomial e;
  e.set(0, 0, 1);
  e.set(2, 2, 1);
  e.set(0, 1, s.h01);
  e.set(1, 0, s.h01);
  e.set(0, 2, s.h02);
  e.set(2, 0, s.h02);
  e.set(1, 1, s.h11);
  return e;
}

/// e(Z) of a Fano 3-fold with Picard number one: h^{1,1} = h^{2,2} = 1.
inline HodgePolynomial hodge_of_threefold(const FanoThreefold& z) {
  HodgePolynomial e;
  for (int i = 0; i <= 3; ++i) e.set(i, i, 1);
  e.set(1, 2, z.h12);
  e.set(2, 1, z.h12);
  return e;
}

struct HodgeTriple {
  int h12 = 0;
  int h13 = 0;
  int h22 = 0;

  friend bool operator==(const HodgeTriple&, const HodgeTriple&) = default;
};

/// e(X) through the polynomial calculus: X is the blow-up of the P^1-bundle
/// Y over Z along a surface isomorphic to A.
inline HodgePolynomial hodge_polynomial_of_X(const FanoThreefold& z, int d) {
  const auto e_y = bundle_formula(hodge_of_threefold(z), 1);
  return blowup_formula(e_y, hodge_of_surface(z, d), 2);
}

/// The unknown Hodge numbers of X^i_{a,d}. They depend on Z and d only; `a`
/// is accepted for symmetry with the other per-family operations and must be
/// non-negative. Both the closed forms and the polynomial calculus are
/// evaluated and must agree.
inline HodgeTriple hodge_of_X(const FanoThreefold& z, int a, int d) {
  if (a < 0) throw DomainError("hodge_of_X: a must be non-negative");
  const auto s = surface_hodge(z, d);
  const HodgeTriple closed{z.h12, s.h02, 2 + s.h11};

  const auto e = hodge_polynomial_of_X(z, d);
  const HodgeTriple poly{static_cast<int>(e(1, 2)), static_cast<int>(e(1, 3)),
                         static_cast<int>(e(2, 2))};
  if (!(closed == poly) || !e.is_symmetric() || e.betti(2) != 3) {
    throw ConsistencyError("Hodge numbers disagree between closed form and polynomial "
                           "calculus for Z_" + std::to_string(z.id) + ", d=" + std::to_string(d));
  }
  return closed;
}

}  // namespace fano4

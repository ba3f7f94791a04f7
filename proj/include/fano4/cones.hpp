#pragma once

// Divisor and curve classes on X^i_{a,d}, the cone of curves NE(X), the nef
// cone and the pairing between them.
//
// Divisors are stored over the basis (phi*H, G^, E). The other named
// divisors are
//   G  = -a phi*H + G^ + E
//   E^ =  d phi*H - E
// Curves are formal non-negative combinations of F, F^, C_G, C_G^ (fibres of
// the two blow-ups and minimal curves in G, G^). Pairing table:
//
//             F    F^   C_G   C_G^
//   phi*H     0    0    1     1
//   G^        1    0    0     a-d
//   E        -1    1    0     d
//
// with H.C_Z = 1 for the minimal curve C_Z of Z.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fano4/catalog.hpp"
#include "fano4/errors.hpp"
#include "fano4/linalg.hpp"
#include "fano4/rational.hpp"

namespace fano4 {

using Coords3 = std::array<Rational, 3>;

class DivisorClass {
 public:
  DivisorClass(Coords3 coords, FamilyParams context) : coords_(coords), context_(context) {}

  const Coords3& coords() const { return coords_; }
  const FamilyParams& context() const { return context_; }

  DivisorClass& operator+=(const DivisorClass& o) {
    require_same_context(o.context_);
    for (std::size_t k = 0; k < 3; ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    require_same_context(o.context_);
    for (std::size_t k = 0; k < 3; ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  DivisorClass& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend DivisorClass operator+(DivisorClass l, const DivisorClass& r) { return l += r; }
  friend DivisorClass operator-(DivisorClass l, const DivisorClass& r) { return l -= r; }
  friend DivisorClass operator*(const Rational& s, DivisorClass d) { return d *= s; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == Rational(0); });
  }

  void require_same_context(const FamilyParams& other) const {
    if (!(other == context_)) {
      throw ContextMismatchError("classes from " + family_label(context_) + " and " +
                                 family_label(other) + " cannot be combined");
    }
  }

 private:
  Coords3 coords_;
  FamilyParams context_;
};

inline std::string to_string(const DivisorClass& D) {
  const auto& c = D.coords();
  return to_string(c[0]) + " phi*H + " + to_string(c[1]) + " G^ + " + to_string(c[2]) + " E";
}

namespace divisors {

inline DivisorClass pullback_H(const FamilyParams& p) { return {{1, 0, 0}, p}; }
inline DivisorClass G_hat(const FamilyParams& p) { return {{0, 1, 0}, p}; }
inline DivisorClass E(const FamilyParams& p) { return {{0, 0, 1}, p}; }
inline DivisorClass G(const FamilyParams& p) { return {{-p.a, 1, 1}, p}; }
inline DivisorClass E_hat(const FamilyParams& p) { return {{p.d, 0, -1}, p}; }

}  // namespace divisors

/// Coordinates of `D` over the basis (phi*H, G, E^), from
///   alpha phi*H + beta G^ + (beta + gamma) E
///     = (alpha + a beta + d gamma) phi*H + beta G - gamma E^.
inline Coords3 to_alternate_basis(const DivisorClass& D) {
  const auto& p = D.context();
  const auto& c = D.coords();
  const Rational alpha = c[0];
  const Rational beta = c[1];
  const Rational gamma = c[2] - c[1];
  return {alpha + Rational(p.a) * beta + Rational(p.d) * gamma, beta, -gamma};
}

/// Inverse of to_alternate_basis.
inline DivisorClass from_alternate_basis(const Coords3& alt, const FamilyParams& p) {
  const Rational beta = alt[1];
  const Rational gamma = -alt[2];
  const Rational alpha = alt[0] - Rational(p.a) * beta - Rational(p.d) * gamma;
  return {{alpha, beta, beta + gamma}, p};
}

/// -K_X = (i_Z - a) phi*H + 2 G^ + E. Cross-checked against
/// i_Z phi*H + G + G^ and (i_Z + a - d) phi*H + 2 G + E^.
inline DivisorClass anticanonical(const FamilyParams& p) {
  const int i = p.z().index;
  DivisorClass k{{i - p.a, 2, 1}, p};

  const auto via_sections =
      Rational(i) * divisors::pullback_H(p) + divisors::G(p) + divisors::G_hat(p);
  const auto via_alternate = Rational(i + p.a - p.d) * divisors::pullback_H(p) +
                             Rational(2) * divisors::G(p) + divisors::E_hat(p);
  const Coords3 alt{i + p.a - p.d, 2, 1};
  if (!(via_sections == k) || !(via_alternate == k) || to_alternate_basis(k) != alt) {
    throw ConsistencyError(family_label(p) + ": expressions for -K_X disagree");
  }
  return k;
}

enum class CurveGenerator { F, FHat, CG, CGHat };

inline constexpr std::array<CurveGenerator, 4> kCurveGenerators{
    CurveGenerator::F, CurveGenerator::FHat, CurveGenerator::CG, CurveGenerator::CGHat};

inline std::string to_string(CurveGenerator g) {
  switch (g) {
    case CurveGenerator::F: return "F";
    case CurveGenerator::FHat: return "F^";
    case CurveGenerator::CG: return "C_G";
    case CurveGenerator::CGHat: return "C_G^";
  }
  return "?";
}

/// A formal non-negative combination of the four curve generators.
class CurveClass {
 public:
  CurveClass(std::array<Rational, 4> coeffs, FamilyParams context)
      : coeffs_(coeffs), context_(context) {
    for (const auto& c : coeffs_) {
      if (c < Rational(0)) throw DomainError("curve classes are non-negative combinations of generators");
    }
  }

  static CurveClass generator(CurveGenerator g, const FamilyParams& p) {
    std::array<Rational, 4> c{};
    c[static_cast<std::size_t>(g)] = 1;
    return {c, p};
  }

  const std::array<Rational, 4>& coeffs() const { return coeffs_; }
  const FamilyParams& context() const { return context_; }

  /// The generator this class is a positive multiple of, if any.
  std::optional<CurveGenerator> as_generator() const {
    std::optional<CurveGenerator> g;
    for (std::size_t k = 0; k < 4; ++k) {
      if (coeffs_[k] == Rational(0)) continue;
      if (g) return std::nullopt;
      g = kCurveGenerators[k];
    }
    return g;
  }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  std::array<Rational, 4> coeffs_;
  FamilyParams context_;
};

/// Rows phi*H, G^, E; columns F, F^, C_G, C_G^.
inline linalg::Matrix<Rational> pairing_matrix(const FamilyParams& p) {
  const Rational a(p.a), d(p.d);
  return {{0, 0, 1, 1}, {1, 0, 0, a - d}, {-1, 1, 0, d}};
}

inline Rational pairing(const DivisorClass& D, const CurveClass& C) {
  D.require_same_context(C.context());
  const auto m = pairing_matrix(D.context());
  Rational s = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 4; ++c) s += D.coords()[r] * m[r][c] * C.coeffs()[c];
  }
  return s;
}

inline Rational pairing(const DivisorClass& D, CurveGenerator g) {
  return pairing(D, CurveClass::generator(g, D.context()));
}

/// Generators of NE(X): F, F^, C_G^ if a = 0; all four if 0 < a < d;
/// F, F^, C_G if a >= d.
inline std::vector<CurveGenerator> ne_generator_kinds(const FamilyParams& p) {
  using enum CurveGenerator;
  if (p.a == 0) return {F, FHat, CGHat};
  if (p.a < p.d) return {F, FHat, CG, CGHat};
  return {F, FHat, CG};
}

inline std::vector<CurveClass> ne_generators(const FamilyParams& p) {
  std::vector<CurveClass> out;
  for (auto g : ne_generator_kinds(p)) out.push_back(CurveClass::generator(g, p));
  return out;
}

enum class NefRayLabel { R1, R2, R3, R4 };
enum class ContractionType { FibreType, Divisorial };

inline std::string to_string(NefRayLabel l) {
  return "R" + std::to_string(static_cast<int>(l) + 1);
}

inline std::string to_string(ContractionType t) {
  return t == ContractionType::FibreType ? "fibre type" : "divisorial";
}

struct NefRay {
  DivisorClass generator;
  NefRayLabel label;
  std::string name;                            // e.g. "a phi*H + G"
  std::vector<CurveGenerator> vanishing_face;  // NE generators orthogonal to the ray
  ContractionType contraction;
};

/// NE generators that pair to zero with `D`.
inline std::vector<CurveGenerator> orthogonal_generators(const DivisorClass& D) {
  std::vector<CurveGenerator> out;
  for (auto g : ne_generator_kinds(D.context())) {
    if (pairing(D, g) == Rational(0)) out.push_back(g);
  }
  return out;
}

/// Extremal rays of Nef(X). Faces are derived from the pairing and checked
/// against the expected 2-faces tau = F^perp, tau^ = F^^perp,
/// eta = C_G^perp, eta^ = C_G^^perp.
inline std::vector<NefRay> nef_rays(const FamilyParams& p) {
  using namespace divisors;
  using enum CurveGenerator;
  using Face = std::vector<CurveGenerator>;
  const Rational a(p.a), d(p.d);

  struct Spec {
    DivisorClass gen;
    std::string name;
    Face face;
  };
  std::vector<Spec> specs;
  specs.push_back({pullback_H(p), "phi*H", {F, FHat}});
  if (p.a == 0) {
    specs.push_back({G(p), "G", {F, CGHat}});
    specs.push_back({G(p) + E_hat(p), "G + E^", {FHat, CGHat}});
  } else if (p.a < p.d) {
    specs.push_back({a * pullback_H(p) + G(p), "a phi*H + G", {F, CG}});
    specs.push_back({G(p) + E_hat(p), "G + E^", {FHat, CGHat}});
    specs.push_back({d * G(p) + a * E_hat(p), "d G + a E^", {CG, CGHat}});
  } else {
    specs.push_back({a * pullback_H(p) + G(p), "a phi*H + G", {F, CG}});
    specs.push_back({G_hat(p), "G^", {FHat, CG}});
  }

  std::vector<NefRay> rays;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    auto face = orthogonal_generators(specs[k].gen);
    if (face != specs[k].face) {
      throw ConsistencyError(family_label(p) + ": nef ray " + specs[k].name +
                             " does not vanish on its expected face");
    }
    rays.push_back({specs[k].gen, static_cast<NefRayLabel>(k), specs[k].name, std::move(face),
                    k == 0 ? ContractionType::FibreType : ContractionType::Divisorial});
  }
  return rays;
}

inline bool is_nef(const DivisorClass& D) {
  for (auto g : ne_generator_kinds(D.context())) {
    if (pairing(D, g) < Rational(0)) return false;
  }
  return true;
}

/// Kleiman: positive on every generator of the (closed, polyhedral) NE(X).
inline bool is_ample(const DivisorClass& D) {
  for (auto g : ne_generator_kinds(D.context())) {
    if (pairing(D, g) <= Rational(0)) return false;
  }
  return true;
}

/// Whether the construction with parameters (a, d) over Z_i yields a Fano
/// 4-fold: -K_X positive on every NE generator. Admissibility is not assumed.
/// The answer is checked against a <= i_Z - 1 and d - a <= i_Z - 1.
inline bool is_fano(const FamilyParams& p) {
  const int i = p.z().index;
  if (p.a < 0 || p.d < 1) throw DomainError("is_fano requires a >= 0 and d >= 1");
  const DivisorClass k{{i - p.a, 2, 1}, p};
  const bool by_pairing = is_ample(k);
  const bool by_inequalities = p.a <= i - 1 && p.d - p.a <= i - 1;
  if (by_pairing != by_inequalities) {
    throw ConsistencyError(family_label(p) + ": Fano criterion disagrees with the pairing");
  }
  return by_pairing;
}

enum class FibreLikeness { NotFibreLike, Undetermined };

inline std::string to_string(FibreLikeness f) {
  return f == FibreLikeness::NotFibreLike ? "NotFibreLike" : "Undetermined";
}

/// Only the negative criterion is known: a != d/2 rules fibre-likeness out.
inline FibreLikeness is_fibre_like(const FamilyParams& p) {
  return 2 * p.a != p.d ? FibreLikeness::NotFibreLike : FibreLikeness::Undetermined;
}

}  // namespace fano4

#pragma once

// Qualitative data per family: base locus of |-K_X|, rationality, toric
// identification, and the tangent-sheaf cohomology h^0(T_X), h^1(T_X).

#include <optional>
#include <string>

#include "fano4/catalog.hpp"
#include "fano4/errors.hpp"
#include "fano4/hodge.hpp"
#include "fano4/intersect.hpp"
#include "fano4/rational.hpp"

namespace fano4 {

enum class BaseLocusKind { Empty, OnePoint, TwoPoints };

struct BaseLocusResult {
  BaseLocusKind kind = BaseLocusKind::Empty;
  bool general_member_smooth = true;

  friend bool operator==(const BaseLocusResult&, const BaseLocusResult&) = default;
};

inline std::string to_string(BaseLocusKind k) {
  switch (k) {
    case BaseLocusKind::Empty: return "Empty";
    case BaseLocusKind::OnePoint: return "OnePoint";
    case BaseLocusKind::TwoPoints: return "TwoPoints";
  }
  return "?";
}

/// Point labels as used in the published table: {Q_0}, {Q_1, Q_2}.
inline std::string base_locus_points(BaseLocusKind k) {
  switch (k) {
    case BaseLocusKind::Empty: return "{}";
    case BaseLocusKind::OnePoint: return "{Q_0}";
    case BaseLocusKind::TwoPoints: return "{Q_1, Q_2}";
  }
  return "?";
}

/// |-K_X| is free whenever |H| is. On Z_1, where |H| has one simple base
/// point, X^1_{0,1} has one base point and X^1_{1,2} has two. A general
/// member is smooth in all cases.
inline BaseLocusResult base_locus(const FamilyParams& p) {
  require_admissible(p);
  if (p.z().base_locus_H == BaseLocusH::Empty) return {BaseLocusKind::Empty, true};
  if (p.a == 0 && p.d == 1) return {BaseLocusKind::OnePoint, true};
  if (p.a == 1 && p.d == 2) return {BaseLocusKind::TwoPoints, true};
  throw DomainError(family_label(p) + ": no base-locus result for this family");
}

/// Toric is a refinement of Rational.
enum class Rationality { Rational, VeryGeneralNotRational, Unknown, Toric };

inline std::string to_string(Rationality r) {
  switch (r) {
    case Rationality::Rational: return "Rational";
    case Rationality::VeryGeneralNotRational: return "VeryGeneralNotRational";
    case Rationality::Unknown: return "Unknown";
    case Rationality::Toric: return "Toric";
  }
  return "?";
}

inline bool is_rational(Rationality r) {
  return r == Rationality::Rational || r == Rationality::Toric;
}

/// Labels of the toric Fano 4-folds in Batyrev's classification.
enum class ToricLabel { E1, E2, E3 };

inline std::string to_string(ToricLabel t) {
  switch (t) {
    case ToricLabel::E1: return "E1";
    case ToricLabel::E2: return "E2";
    case ToricLabel::E3: return "E3";
  }
  return "?";
}

/// X^i_{a,d} is toric exactly when Z = P^3 and d = 1:
/// X^7_{0,1} = E3, X^7_{2,1} = E2, X^7_{3,1} = E1.
inline std::optional<ToricLabel> toric_label(const FamilyParams& p) {
  require_admissible(p);
  if (p.z_id != 7 || p.d != 1) return std::nullopt;
  switch (p.a) {
    case 0: return ToricLabel::E3;
    case 2: return ToricLabel::E2;
    case 3: return ToricLabel::E1;
  }
  throw DomainError(family_label(p) + ": unexpected toric family");
}

/// X is birational to Z x P^1. Z_4..Z_7 are rational; the very general Z_1,
/// Z_2 is not stably rational; nothing is known for the cubic Z_3.
inline Rationality rationality(const FamilyParams& p) {
  require_admissible(p);
  if (toric_label(p)) return Rationality::Toric;
  switch (p.z_id) {
    case 1:
    case 2: return Rationality::VeryGeneralNotRational;
    case 3: return Rationality::Unknown;
    default: return Rationality::Rational;
  }
}

/// h^0(O_Z(d)) = 1 + 2d/i_Z + d delta (i_Z^2 + 3 d i_Z + 2 d^2) / 12
/// (Riemann-Roch plus Kodaira vanishing).
inline Integer h0_line_bundle(const FanoThreefold& z, int d) {
  if (d < 1) throw DomainError("h0_line_bundle: d must be positive");
  const Integer i = z.index;
  const Integer dd = d;
  const Rational v = Rational(1) + Rational(2 * dd, i) +
                     Rational(dd * z.degree, 12) * (i * i + 3 * dd * i + 2 * dd * dd);
  return as_integer(v, "h^0(O_Z(d))");
}

/// chi(T_X) = 27 - 5 h^0(-K_X) + K_X^4 + 3 b_2 - h^{1,2} - h^{2,2} + 3 h^{1,3}.
inline Integer chi_tangent(const FourfoldInvariants& inv, const HodgeTriple& h, int b2 = 3) {
  return 27 - 5 * inv.h0_antiK + inv.K4 + 3 * b2 - h.h12 - h.h22 + 3 * h.h13;
}

/// Tangent-sheaf cohomology of X. `h1_deformation_bound` is the raw bound
/// h^1(T_Z) + h^0(O_Z(d)) - 1 from counting pairs (Z, A); `h1_upper` is the
/// best known upper bound, equal to `h1_exact` when that is known.
struct TangentBounds {
  Integer chi = 0;
  Integer h1_deformation_bound = 0;
  Integer h1_upper = 0;
  std::optional<Integer> h1_exact;
  Integer h0_upper = 0;
  std::optional<Integer> h0_exact;

  friend bool operator==(const TangentBounds&, const TangentBounds&) = default;
};

/// Equality in the deformation bound holds for Z_1..Z_4 (finite Aut(Z));
/// X^7_{a,1} and X^7_{a,2} are rigid. Elsewhere only the bounds are known.
inline TangentBounds tangent_bounds(const FamilyParams& p, Integer chi) {
  require_admissible(p);
  const auto& z = p.z();
  TangentBounds t;
  t.chi = chi;
  t.h1_deformation_bound = z.h1_tangent + h0_line_bundle(z, p.d) - 1;

  if (p.z_id <= 4) {
    t.h1_exact = t.h1_deformation_bound;
  } else if (p.z_id == 7 && p.d <= 2) {
    t.h1_exact = 0;
  }
  t.h1_upper = t.h1_exact.value_or(t.h1_deformation_bound);
  t.h0_upper = chi + t.h1_upper;
  if (t.h1_exact) t.h0_exact = chi + *t.h1_exact;

  if (t.h1_deformation_bound < 0 || t.h1_upper < 0 || t.h0_upper < 0 ||
      (t.h0_exact && *t.h0_exact < 0)) {
    throw IntegrityError(family_label(p) + ": negative tangent cohomology bound");
  }
  return t;
}

}  // namespace fano4

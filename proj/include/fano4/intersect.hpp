#pragma once

// Intersection numbers of 4-folds obtained as P^1-bundles over a 3-fold and
// as blow-ups of a 4-fold along a smooth surface. All arithmetic is exact.

#include <array>
#include <numeric>
#include <string>

#include "fano4/catalog.hpp"
#include "fano4/errors.hpp"
#include "fano4/hodge.hpp"
#include "fano4/rational.hpp"

namespace fano4 {

/// Intersection data of a 3-fold W and a rank-2 bundle E on it, as consumed
/// by the P^1-bundle formulas.
struct BundleInput {
  Integer KW3 = 0;       // K_W^3
  Integer KW_c1sq = 0;   // K_W . c1(E)^2
  Integer KW_c2E = 0;    // K_W . c2(E)
  Integer KW_c2W = 0;    // K_W . c2(W)
  Integer chi_O = 1;     // chi(O_{P(E)})
};

/// Data of a smooth surface V in a 4-fold W.
struct BlowupCentreData {
  Integer KYV_sq = 0;  // (K_W|_V)^2
  Integer KV_KYV = 0;  // K_V . K_W|_V
  Integer KV_sq = 0;   // K_V^2
  Integer c2N = 0;     // c2(N_{V/W})
  Integer chi_OV = 0;  // chi(O_V)
};

/// K^4, K^2.c2 and chi(O(-K)) of a smooth 4-fold.
struct AnticanonicalInvariants {
  Integer K4 = 0;
  Integer K2c2 = 0;
  Integer chi_antiK = 0;

  friend bool operator==(const AnticanonicalInvariants&, const AnticanonicalInvariants&) = default;
};

struct FourfoldInvariants {
  Integer K4 = 0;
  Integer K2c2 = 0;
  Integer h0_antiK = 0;

  friend bool operator==(const FourfoldInvariants&, const FourfoldInvariants&) = default;
};

inline std::string to_string(const AnticanonicalInvariants& v) {
  return "{K4=" + std::to_string(v.K4) + ", K2c2=" + std::to_string(v.K2c2) +
         ", chi=" + std::to_string(v.chi_antiK) + "}";
}

/// Invariants of a P^1-bundle P(E) over a 3-fold W.
inline AnticanonicalInvariants prop6(const BundleInput& in) {
  const Rational k4 = Rational(-8 * in.KW_c1sq) + 32 * in.KW_c2E - 8 * in.KW3;
  const Rational k2c2 =
      Rational(-2 * in.KW_c1sq) + 8 * in.KW_c2E - 2 * in.KW3 - 4 * in.KW_c2W;
  const Rational chi = Rational(in.chi_O) + 6 * in.KW_c2E -
                       Rational(1, 2) * (3 * in.KW3 + 3 * in.KW_c1sq) -
                       Rational(1, 3) * in.KW_c2W;
  return {as_integer(k4, "K^4 of P^1-bundle"), as_integer(k2c2, "K^2.c2 of P^1-bundle"),
          as_integer(chi, "chi(-K) of P^1-bundle")};
}

/// Invariants of the blow-up of a 4-fold along a smooth surface.
inline AnticanonicalInvariants prop5(const AnticanonicalInvariants& base,
                                     const BlowupCentreData& c) {
  const Rational k4 = Rational(base.K4) - 3 * c.KYV_sq - 2 * c.KV_KYV + c.c2N - c.KV_sq;
  const Rational k2c2 =
      Rational(base.K2c2) - 12 * c.chi_OV + 2 * c.KV_sq - 2 * c.KV_KYV - 2 * c.c2N;
  const Rational chi =
      Rational(base.chi_antiK) - c.chi_OV - Rational(1, 2) * (c.KYV_sq + c.KV_KYV);
  return {as_integer(k4, "K^4 of blow-up"), as_integer(k2c2, "K^2.c2 of blow-up"),
          as_integer(chi, "chi(-K) of blow-up")};
}

/// Hirzebruch-Riemann-Roch for -K on a 4-fold:
/// chi(O(-K)) = chi(O) + (2 K^4 + K^2.c2) / 12.
inline Rational chi_via_eq4(Integer K4, Integer K2c2, Integer chi_O) {
  return Rational(chi_O) + Rational(2 * K4 + K2c2, 12);
}

/// Specialisation of the bundle data to Y = P(O_Z + O_Z(a)):
/// c1(E) = aH, c2(E) = 0, K_Z.c2(Z) = -24.
inline BundleInput bundle_input(const FanoThreefold& z, int a) {
  const Integer i = z.index;
  const Integer delta = z.degree;
  return {-i * i * i * delta, -i * a * a * delta, 0, -24, 1};
}

/// Closed forms for Y:
/// K_Y^4 = 8 delta i (a^2 + i^2), K_Y^2.c2 = 2 delta i (a^2 + i^2) + 96,
/// chi(-K_Y) = 9 + 3/2 delta i (a^2 + i^2).
inline AnticanonicalInvariants p1_bundle_closed_form(const FanoThreefold& z, int a) {
  const Integer i = z.index;
  const Integer delta = z.degree;
  const Integer s = delta * i * (Integer{a} * a + i * i);
  return {8 * s, 2 * s + 96, as_integer(Rational(9) + Rational(3, 2) * s, "chi(-K_Y)")};
}

/// Invariants of Y, computed through the generic bundle formulas and the
/// closed forms; the two must agree.
inline AnticanonicalInvariants p1_bundle_invariants(const FanoThreefold& z, int a) {
  if (a < 0) throw DomainError("p1_bundle_invariants: a must be non-negative");
  const auto generic = prop6(bundle_input(z, a));
  const auto closed = p1_bundle_closed_form(z, a);
  if (!(generic == closed)) {
    throw ConsistencyError("P^1-bundle invariants disagree for Z_" + std::to_string(z.id) +
                           ", a=" + std::to_string(a) + ": " + to_string(generic) + " vs " +
                           to_string(closed));
  }
  return generic;
}

/// Data of the centre S = A (a surface in |O_Z(d)| lifted to a section of Y).
/// -K_Y|_S = (a + i) H|_A, -K_S = (d - i) H|_A, c2(N_{S/Y}) = a d^2 delta.
inline BlowupCentreData centre_data(const FanoThreefold& z, int a, int d) {
  const Integer i = z.index;
  const Integer dd = Integer{d} * z.degree;
  return {dd * (a + i) * (a + i), -dd * (a + i) * (d - i), dd * (d - i) * (d - i),
          Integer{a} * d * d * z.degree, 1 + surface_h02(z, d)};
}

/// The five summands of the closed form for K_X^4:
///   8 delta i (a^2+i^2), -3 d delta (a+i)^2, 2 d delta (a+i)(d-i),
///   a d^2 delta, -d delta (d-i)^2.
inline std::array<Integer, 5> k4_closed_form_terms(const FanoThreefold& z, int a, int d) {
  const Integer i = z.index;
  const Integer delta = z.degree;
  return {8 * delta * i * (Integer{a} * a + i * i), -3 * d * delta * (a + i) * (a + i),
          2 * d * delta * (a + i) * (d - i), Integer{a} * d * d * delta,
          -d * delta * (d - i) * (d - i)};
}

/// Closed forms for X^i_{a,d}.
inline FourfoldInvariants fourfold_closed_form(const FanoThreefold& z, int a, int d) {
  const Integer i = z.index;
  const Integer delta = z.degree;
  const Integer h02 = surface_h02(z, d);
  const Integer s = delta * i * (Integer{a} * a + i * i);
  const auto terms = k4_closed_form_terms(z, a, d);
  const Integer k4 = std::accumulate(terms.begin(), terms.end(), Integer{0});
  const Integer k2c2 =
      84 + 2 * s - 12 * h02 + 2 * d * delta * (d - i) * (a + d) - 2 * Integer{a} * d * d * delta;
  const Rational chi = Rational(8) + Rational(3, 2) * s - h02 -
                       Rational(1, 2) * (d * delta * (a + i) * (a - d + 2 * i));
  return {k4, k2c2, as_integer(chi, "chi(-K_X)")};
}

/// K_X^4, K_X^2.c2(X) and h^0(-K_X) of X^i_{a,d}. Three routes are
/// evaluated and compared: the closed forms, the blow-up formulas applied to
/// the bundle formulas, and Riemann-Roch reconstructed from K^4 and K^2.c2.
/// h^0(-K_X) = chi(-K_X) by Kodaira vanishing.
inline FourfoldInvariants fano4_invariants(const FamilyParams& p) {
  require_admissible(p);
  const auto& z = p.z();
  const auto closed = fourfold_closed_form(z, p.a, p.d);
  const auto pipeline = prop5(p1_bundle_invariants(z, p.a), centre_data(z, p.a, p.d));
  const Integer rr = as_integer(chi_via_eq4(pipeline.K4, pipeline.K2c2, 1), "Riemann-Roch chi");

  if (closed.K4 != pipeline.K4 || closed.K2c2 != pipeline.K2c2 ||
      closed.h0_antiK != pipeline.chi_antiK || rr != pipeline.chi_antiK) {
    throw ConsistencyError(family_label(p) + ": closed form {" + std::to_string(closed.K4) +
                           ", " + std::to_string(closed.K2c2) + ", " +
                           std::to_string(closed.h0_antiK) + "} vs pipeline " +
                           to_string(pipeline) + " vs Riemann-Roch " + std::to_string(rr));
  }
  if (closed.K4 <= 0 || closed.h0_antiK <= 0) {
    throw IntegrityError(family_label(p) + ": K^4 and h^0(-K) must be positive");
  }
  return closed;
}

inline FourfoldInvariants fano4_invariants(const FanoThreefold& z, int a, int d) {
  return fano4_invariants(FamilyParams{z.id, a, d});
}

}  // namespace fano4

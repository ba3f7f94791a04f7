#pragma once

// Smooth Fano 3-folds of Picard number one and index at least two, and the
// admissible triples (Z_i, a, d) that produce a Fano 4-fold X^i_{a,d} with
// Picard number three.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fano4/errors.hpp"
#include "fano4/rational.hpp"

namespace fano4 {

enum class BaseLocusH { Empty, OneSimplePoint };
enum class Rationality3 { Rational, NotRational };

struct FanoThreefold {
  int id;          // subscript i of Z_i
  int index;       // Fano index i_Z
  int degree;      // delta = H^3
  int h12;         // h^{1,2}(Z)
  int h0_tangent;  // h^0(T_Z)
  int h1_tangent;  // h^1(T_Z)
  BaseLocusH base_locus_H;
  Rationality3 rational;
  std::string_view description;

  /// -K_Z^3 = i_Z^3 * delta.
  constexpr int anticanonical_degree() const { return index * index * index * degree; }

  /// chi(T_Z) = h^0(T_Z) - h^1(T_Z).
  constexpr int chi_tangent() const { return h0_tangent - h1_tangent; }
};

inline constexpr std::array<FanoThreefold, 7> kThreefolds{{
    {1, 2, 1, 21, 0, 34, BaseLocusH::OneSimplePoint, Rationality3::NotRational,
     "hypersurface of degree 6 in the weighted projective space P(1,1,1,2,3)"},
    {2, 2, 2, 10, 0, 19, BaseLocusH::Empty, Rationality3::NotRational,
     "double cover of P^3 ramified along a smooth quartic surface"},
    {3, 2, 3, 5, 0, 10, BaseLocusH::Empty, Rationality3::NotRational,
     "smooth cubic in P^4"},
    {4, 2, 4, 2, 0, 3, BaseLocusH::Empty, Rationality3::Rational,
     "smooth intersection of two quadrics in P^5"},
    {5, 2, 5, 0, 3, 0, BaseLocusH::Empty, Rationality3::Rational,
     "codimension 3 linear section of Gr(2,5) in P^9"},
    {6, 3, 2, 0, 10, 0, BaseLocusH::Empty, Rationality3::Rational,
     "smooth quadric in P^4"},
    {7, 4, 1, 0, 15, 0, BaseLocusH::Empty, Rationality3::Rational, "P^3"},
}};

namespace detail {

constexpr bool catalog_is_consistent() {
  for (std::size_t k = 0; k < kThreefolds.size(); ++k) {
    const auto& z = kThreefolds[k];
    if (z.id != static_cast<int>(k) + 1) return false;
    if (z.index < 2) return false;
    // 2 chi(T_Z) = -K_Z^3 - 2 h^{1,2} - 34
    if (2 * z.chi_tangent() != z.anticanonical_degree() - 2 * z.h12 - 34) return false;
    if ((z.base_locus_H == BaseLocusH::OneSimplePoint) != (z.id == 1)) return false;
  }
  return true;
}

}  // namespace detail

static_assert(detail::catalog_is_consistent(), "Fano 3-fold catalog fails its cross-identities");

/// The seven rows, ordered by id.
inline std::vector<FanoThreefold> catalog() {
  return {kThreefolds.begin(), kThreefolds.end()};
}

inline const FanoThreefold& threefold(int z_id) {
  if (z_id < 1 || z_id > static_cast<int>(kThreefolds.size())) {
    throw DomainError("z_id must be in 1..7, got " + std::to_string(z_id));
  }
  return kThreefolds[static_cast<std::size_t>(z_id - 1)];
}

/// Names one family X^i_{a,d}. Carries no admissibility guarantee; see
/// validate_params.
struct FamilyParams {
  int z_id = 0;
  int a = 0;
  int d = 0;

  friend constexpr bool operator==(const FamilyParams&, const FamilyParams&) = default;
  friend constexpr auto operator<=>(const FamilyParams&, const FamilyParams&) = default;

  const FanoThreefold& z() const { return threefold(z_id); }
};

/// "X^i_{a,d}"
inline std::string family_label(const FamilyParams& p) {
  return "X^" + std::to_string(p.z_id) + "_{" + std::to_string(p.a) + "," +
         std::to_string(p.d) + "}";
}

namespace detail {

constexpr bool admissible(int index, int a, int d) {
  const bool normalized = a > d || 2 * a <= d;
  return normalized && a <= index - 1 && d - a <= index - 1;
}

}  // namespace detail

/// True iff (a, d) satisfies the admissibility conditions for Z_{z_id}:
/// d >= 1, (a > d or 0 <= a <= d/2), a <= i_Z - 1, d - a <= i_Z - 1.
/// Throws DomainError for z_id outside 1..7, a < 0 or d < 1.
inline bool validate_params(int z_id, int a, int d) {
  const auto& z = threefold(z_id);
  if (a < 0) throw DomainError("a must be non-negative, got " + std::to_string(a));
  if (d < 1) throw DomainError("d must be positive, got " + std::to_string(d));
  return detail::admissible(z.index, a, d);
}

inline bool validate_params(const FamilyParams& p) { return validate_params(p.z_id, p.a, p.d); }

/// Throws DomainError unless `p` is admissible.
inline void require_admissible(const FamilyParams& p) {
  if (!validate_params(p)) {
    throw DomainError(family_label(p) + " violates the admissibility conditions");
  }
}

/// All admissible triples, ordered by (z_id, a, d). The search grid
/// a <= i_Z - 1, d <= 2 i_Z - 2 is exhaustive because the conditions bound
/// both parameters.
inline std::vector<FamilyParams> enumerate_families() {
  std::vector<FamilyParams> out;
  for (const auto& z : kThreefolds) {
    for (int a = 0; a <= z.index - 1; ++a) {
      for (int d = 1; d <= 2 * z.index - 2; ++d) {
        if (detail::admissible(z.index, a, d)) out.push_back({z.id, a, d});
      }
    }
  }
  return out;
}

}  // namespace fano4

#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fano4/catalog.hpp"
#include "fano4/classify.hpp"
#include "fano4/cones.hpp"
#include "fano4/errors.hpp"
#include "fano4/hodge.hpp"
#include "fano4/intersect.hpp"

namespace fano4 {

/// Every invariant of one family X^i_{a,d}.
struct FamilyRecord {
  FamilyParams params;
  std::string label;
  Integer K4 = 0;
  Integer K2c2 = 0;
  Integer h0_antiK = 0;
  int h12 = 0;
  int h13 = 0;
  int h22 = 0;
  BaseLocusResult base_locus;
  Rationality rationality = Rationality::Unknown;
  std::optional<ToricLabel> toric_label;
  FibreLikeness fibre_like = FibreLikeness::Undetermined;
  TangentBounds tangent;
  int ne_generator_count = 0;
  int nef_ray_count = 0;
};

namespace detail {

inline FamilyRecord build_record_unchecked(const FamilyParams& p) {
  require_admissible(p);
  const auto& z = p.z();

  FamilyRecord r;
  r.params = p;
  r.label = family_label(p);

  const auto inv = fano4_invariants(p);
  r.K4 = inv.K4;
  r.K2c2 = inv.K2c2;
  r.h0_antiK = inv.h0_antiK;

  const auto h = hodge_of_X(z, p.a, p.d);
  r.h12 = h.h12;
  r.h13 = h.h13;
  r.h22 = h.h22;

  r.base_locus = base_locus(p);
  r.rationality = rationality(p);
  r.toric_label = toric_label(p);
  r.fibre_like = is_fibre_like(p);
  r.tangent = tangent_bounds(p, chi_tangent(inv, h));

  const auto ne = ne_generator_kinds(p);
  const auto rays = nef_rays(p);
  r.ne_generator_count = static_cast<int>(ne.size());
  r.nef_ray_count = static_cast<int>(rays.size());

  if (!is_fano(p)) throw ConsistencyError("admissible family is not Fano");

  // Index one: -K_X.F = 1, so the gcd of the -K_X pairings is 1.
  const auto k = anticanonical(p);
  Integer g = 0;
  for (auto c : ne) g = std::gcd(g, as_integer(pairing(k, c), "-K_X pairing"));
  if (pairing(k, CurveGenerator::F) != Rational(1) || g != 1) {
    throw ConsistencyError("Fano index is not one");
  }

  const bool interior = 0 < p.a && p.a < p.d;
  if ((r.nef_ray_count == 4) != interior || (r.ne_generator_count == 4) != interior) {
    throw ConsistencyError("cone generator counts do not match the case 0 < a < d");
  }
  return r;
}

}  // namespace detail

/// Builds the full record. Errors from any stage are rethrown with the family
/// label prefixed.
inline FamilyRecord build_record(const FamilyParams& p) {
  const auto label = family_label(p);
  try {
    return detail::build_record_unchecked(p);
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(label + ": " + e.what());
  } catch (const IntegrityError& e) {
    throw IntegrityError(label + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(label + ": " + e.what());
  }
}

inline std::vector<FamilyRecord> build_all_records() {
  std::vector<FamilyRecord> out;
  for (const auto& p : enumerate_families()) out.push_back(build_record(p));
  return out;
}

}  // namespace fano4

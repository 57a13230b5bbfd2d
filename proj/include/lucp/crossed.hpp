#pragma once

#include <cstdint>
#include <vector>

#include "lucp/cohomology.hpp"
#include "lucp/invertible.hpp"
#include "lucp/ledger.hpp"
#include "lucp/pic.hpp"

namespace lucp {

// A graded system of invertible bimodules with multiplication maps: one
// invertible slot per group element, one pairing per pair of elements, and
// an identification of the ring with the identity slot. The pairings of a
// quasi system satisfy the unit triangles only; `associative` records
// whether all associativity squares were verified to commute.
struct FactorMap {
  Ring ring;
  FiniteGroupTable g;
  std::vector<InvertibleBimodule> theta;          // per group element
  std::vector<std::vector<BimoduleTensor>> pair;  // [x][y] slot_x (x) slot_y
  std::vector<std::vector<FpMat>> f;              // [x][y] on pair coords
  FpMat iota;                                     // ring -> identity slot
  bool associative = false;

  const Bimodule& slot(std::size_t x) const { return theta[x].x; }
  // f[x][y] composed under the canonical triple-tensor projections:
  // association through (xy)z and through x(yz), both landing in slot xyz.
  FpMat assoc_left(std::size_t x, std::size_t y, std::size_t z,
                   const BimoduleTensor& triple) const;
  FpMat assoc_right(std::size_t x, std::size_t y, std::size_t z,
                    const BimoduleTensor& triple) const;
};

// Builds and fully validates the system: every slot invertible, every
// pairing an iso of bimodules (NotIso), the ring iso onto the identity
// slot, both unit triangles per slot (UnitFail), and, when require_assoc
// is set, every associativity square (AssocFail).
FactorMap make_factor_map(const Ring& r, const FiniteGroupTable& g,
                          const std::vector<Bimodule>& slots,
                          const std::vector<std::vector<FpMat>>& maps,
                          const FpMat& iota, bool require_assoc = true);

// Group ring and skew variants: slot x is the ring twisted on the right by
// the automorphism aut[x], the pairing multiplies through the twist.
FactorMap skew_factor_map(const Ring& r, const FiniteGroupTable& g,
                          const std::vector<FpMat>& auts);

// The ring on the direct sum of the slots, multiplication through the
// pairings, local units the images of the ring units in the identity slot.
struct CrossedProduct {
  Ring ring;
  FiniteGroupTable g;
  std::vector<std::size_t> offset;  // basis start per slot
  std::vector<std::size_t> degree;  // slot of each basis vector
  FactorMap fm;
};

// Requires an associative system; validates the result as a ring with
// local units and checks each graded piece multiplies onto the next.
CrossedProduct build_crossed_product(const FactorMap& fm);

// The commutant unit group of the base ring together with the cohomology
// complex it carries: the group element x acts by conjugation along slot x.
struct UnitsComplex {
  CentralUnitGroup units;
  TwistedComplex cx;

  AbelianGroup::Elem exponents_of(const FpMat& u) const;
  FpMat unit_of(const AbelianGroup::Elem& e) const;
};

UnitsComplex units_cohomology_complex(const FactorMap& fm);

// The degree-3 obstruction of a quasi system: for each triple the unique
// slot automorphism comparing the two associations, converted to a
// commutant unit and inverted. Verified to be a normalized cocycle in the
// given complex. The result of an associative system is zero; rescaling
// the pairings by a 2-cochain shifts the result by its differential.
Cochain obstruction_three_cocycle(const FactorMap& fm,
                                  const UnitsComplex& uc);

// The degree-2 comparison of two systems through per-slot isomorphisms
// a[x]: other slot -> base slot: the unique automorphism of each base slot
// closing the pairing square, as a commutant unit. The identity-slot
// comparison is pinned by the two ring identifications, so a[identity] is
// ignored. Verified normalized cocycle.
Cochain comparison_two_cocycle(const FactorMap& base, const FactorMap& other,
                               const std::vector<FpMat>& a,
                               const UnitsComplex& uc);

// Rescales every pairing by the central unit of the cochain value; the
// unit triangles survive, and `associative` is recomputed on the result.
FactorMap twist_by_two_cochain(const FactorMap& fm, const Cochain& sigma,
                               const UnitsComplex& uc);

// Reordering of a balanced tensor product, built from a witness that the
// left factor divides a finite power of the ring; independent of the
// witness. Requires both factors similar to the ring.
FpMat twist_map(const Bimodule& m, const Bimodule& n,
                const BimoduleTensor& mn, const BimoduleTensor& nm,
                Rng& rng);

// Graded isomorphism test fixing the ring: the identity-slot component is
// pinned by the two ring identifications and the remaining slots are
// searched over their hom spaces. Fail only when the search was
// exhaustive on every slot combination.
Verdict crossed_iso_test(const FactorMap& a, const FactorMap& b, Rng& rng,
                         std::uint64_t sample_cap = 100000,
                         std::uint64_t exhaustive_cap = 1u << 16);

// The product of two systems over a common base: slot x is
// first_x (x) middle_{x^-1} (x) last_x, pairings assembled from the three
// systems' pairings after reordering the middle factors. Every slot of
// all three systems must be similar to the matching base slot.
FactorMap triple_product_system(const FactorMap& first,
                                const FactorMap& middle,
                                const FactorMap& last, Rng& rng);

// Ledger of crossed-product classes generated by the given systems over
// the base: identity class the base itself, product the triple system
// through the base, equality by graded isomorphism. Generators are first
// certified slotwise similar to the base (NotInSubgroup).
LedgerClosure<FactorMap> crossed_class_ledger(
    const FactorMap& base, const std::vector<FactorMap>& gens, Rng& rng,
    std::size_t cap = 32, std::uint64_t sample_cap = 100000,
    std::uint64_t exhaustive_cap = 1u << 16);

// Both directions of the class/cohomology correspondence over a base:
// forward sends a ledger class to the class of its comparison cocycle
// through searched slot isomorphisms; backward sends a cohomology element
// to the ledger class of the twisted base. Either direction may leave
// Undecided when an underlying search was cut short.
struct ClassCohomologyBridge {
  CohomologyGroup h2;
  std::vector<AbelianGroup::Elem> forward;   // per ledger class
  std::vector<std::size_t> backward;         // per element of h2.group
  std::vector<AbelianGroup::Elem> elements;  // order used by backward
  Verdict verdict = Verdict::Pass;
};

ClassCohomologyBridge zeta_h2_iso(const FactorMap& base,
                                  const LedgerClosure<FactorMap>& led,
                                  const UnitsComplex& uc, Rng& rng,
                                  std::uint64_t sample_cap = 100000,
                                  std::uint64_t exhaustive_cap = 1u << 16);

}  // namespace lucp

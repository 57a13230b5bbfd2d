#pragma once

#include <cstdint>
#include <vector>

#include "lucp/errors.hpp"
#include "lucp/extension.hpp"
#include "lucp/ring.hpp"
#include "lucp/rng.hpp"

namespace lucp {

// Two-sided module over a ring with local units, both actions given per ring
// basis vector. Every element must be absorbed by some listed unit of the
// ring; no global identity is ever assumed.
struct Bimodule {
  Ring ring;
  std::size_t dim = 0;
  std::vector<FpMat> left;   // left[i] = action of ring basis i
  std::vector<FpMat> right;  // right[i] = right action of ring basis i

  Fp p() const { return ring.p; }
  FpVec zero() const { return FpVec(dim, 0); }
  FpVec basis(std::size_t i) const { return fpvec_unit(dim, i); }

  FpMat left_action(const FpVec& r) const;   // matrix of m -> r . m
  FpMat right_action(const FpVec& r) const;  // matrix of m -> m . r
  FpVec lact(const FpVec& r, const FpVec& m) const;
  FpVec ract(const FpVec& m, const FpVec& r) const;
  bool absorbed_by(const FpVec& e, const FpVec& m) const;

  // First listed ring unit absorbing all given module elements.
  FpVec unit_for(const std::vector<FpVec>& elems) const;

  void validate() const;
};

Bimodule regular_bimodule(const Ring& r);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);
Bimodule direct_power(const Bimodule& m, std::size_t k);

// The ring itself as a bimodule with both actions twisted by ring
// endomorphisms: r . m = alpha(r) m and m . r = m beta(r).
Bimodule twisted_regular(const Ring& r, const FpMat& alpha,
                         const FpMat& beta);

// View a bimodule over the top ring of an extension as a bimodule over the
// base ring, acting through the embedding.
Bimodule restrict_scalars(const Extension& ext, const Bimodule& m);

// Sub-bimodule spanned by the rows of span (must be action invariant);
// incl maps sub coordinates into the ambient module.
struct SubBimodule {
  Bimodule mod;
  FpMat incl;
};
SubBimodule sub_bimodule(const Bimodule& m, const FpMat& span_rows);

// Basis of the space of maps commuting with both actions.
std::vector<FpMat> hom_space(const Bimodule& src, const Bimodule& dst);

// Search the hom space for an invertible element. Exhaustive when the space
// is small enough, otherwise seeded sampling; exhausted tells which.
struct IsoSearch {
  std::optional<FpMat> iso;
  bool exhausted = false;
};
IsoSearch find_iso(const Bimodule& src, const Bimodule& dst, Rng& rng,
                   std::uint64_t sample_cap = 100000,
                   std::uint64_t exhaustive_cap = 1u << 16);

// Split inclusion of m into a finite power of n: a projection drawn from the
// hom space with a right inverse. Fail is only reported when the search was
// exhaustive at every number of copies.
struct SummandWitness {
  Verdict verdict = Verdict::Undecided;
  std::size_t copies = 0;
  FpMat incl;  // m -> n^copies
  FpMat proj;  // n^copies -> m, proj * incl = id
};
SummandWitness summand_of_power(const Bimodule& m, const Bimodule& n,
                                std::size_t max_copies, Rng& rng,
                                std::uint64_t sample_cap = 100000,
                                std::uint64_t exhaustive_cap = 1u << 16);

// Mutual division: each side a summand of a finite power of the other.
Verdict is_similar(const Bimodule& a, const Bimodule& b,
                   std::size_t max_copies, Rng& rng,
                   std::uint64_t sample_cap = 100000,
                   std::uint64_t exhaustive_cap = 1u << 16);

}  // namespace lucp

#pragma once

#include "lucp/invertible.hpp"
#include "lucp/ledger.hpp"

namespace lucp {

// Same class in the ledger of invertible bimodules: an isomorphism of the
// underlying bimodules. Fail only when the search was exhaustive.
Verdict same_invertible_class(const InvertibleBimodule& a,
                              const InvertibleBimodule& b, Rng& rng,
                              std::uint64_t sample_cap = 100000,
                              std::uint64_t exhaustive_cap = 1u << 16);

// Ledger of invertible-bimodule classes generated by the given modules
// (each certified invertible on entry) together with the regular class.
LedgerClosure<InvertibleBimodule> invertible_class_ledger(
    const Ring& r, const std::vector<Bimodule>& gens, Rng& rng,
    std::size_t cap = 64, std::uint64_t sample_cap = 100000,
    std::uint64_t exhaustive_cap = 1u << 16);

// Indices of ledger classes on which the commutant acts identically from
// both sides; they form a subgroup of the ledger.
std::vector<std::size_t> z_symmetric_classes(
    const LedgerClosure<InvertibleBimodule>& led, const Center& z);

}  // namespace lucp

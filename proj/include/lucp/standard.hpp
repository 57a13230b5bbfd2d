#pragma once

#include "lucp/ring.hpp"

namespace lucp {

// Prime field as a one-dimensional algebra over itself.
Ring field_ring(Fp p);

// Field with p^n elements: basis 1, t, ..., t^{n-1} modulo the
// lexicographically smallest monic irreducible of degree n.
Ring ext_field_ring(Fp p, std::size_t n);

// Full matrix algebra of n x n matrices; basis is row-major matrix units.
Ring matrix_ring(Fp p, std::size_t n);

// Blockwise direct sum. The unit list contains the images of both unit
// lists and all pairwise sums, keeping it closed under common domination.
Ring direct_sum(const Ring& a, const Ring& b);

FpVec ring_pow(const Ring& r, const FpVec& x, std::uint64_t k);

// Matrix of x -> x^p on a ring built by ext_field_ring.
FpMat field_frobenius(const Ring& s);

}  // namespace lucp

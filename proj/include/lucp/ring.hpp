#pragma once

#include <cstddef>
#include <vector>

#include "lucp/fp.hpp"

namespace lucp {

// Finite-dimensional associative F_p algebra given by structure constants,
// together with an ordered list of idempotents serving as local units. No
// operation ever singles out a global identity; every construction that
// needs a unit asks for one that covers the finitely many elements at hand.
struct Ring {
  Fp p = 2;
  std::size_t dim = 0;
  // prod[i * dim + j] = coordinates of b_i b_j
  std::vector<FpVec> prod;
  // ordered idempotent list; unit lookups scan it front to back
  std::vector<FpVec> units;

  FpVec zero() const { return FpVec(dim, 0); }
  FpVec basis(std::size_t i) const { return fpvec_unit(dim, i); }

  FpVec mul(const FpVec& x, const FpVec& y) const;
  // L_x and R_x as matrices acting on coordinates
  FpMat left_mul_matrix(const FpVec& x) const;
  FpMat right_mul_matrix(const FpVec& x) const;

  bool is_idempotent(const FpVec& e) const;
  // e absorbs x when e x = x e = x
  bool absorbs(const FpVec& e, const FpVec& x) const;

  // First listed unit absorbing every element of elems; throws NoCommonUnit.
  FpVec unit_for(const std::vector<FpVec>& elems) const;
  std::size_t unit_index_for(const std::vector<FpVec>& elems) const;

  // Checks associativity, idempotency of all listed units, absorption of
  // every basis vector by some unit, and closure of the unit list under
  // common domination of pairs (which makes the list upward directed).
  void validate() const;
};

// All products of basis vectors with explicit coordinates; convenience for
// building rings in fixtures and parsers.
Ring make_ring(Fp p, std::size_t dim, std::vector<FpVec> prod,
               std::vector<FpVec> units);

}  // namespace lucp

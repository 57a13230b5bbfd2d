#pragma once

#include <cstdint>
#include <vector>

#include "lucp/abelian.hpp"
#include "lucp/ring.hpp"

namespace lucp {

// The algebra of endomorphisms of the regular bimodule: matrices commuting
// with every left and right multiplication. These play the role of central
// multipliers; they act on ring elements by plain matrix application.
struct Center {
  Fp p = 2;
  std::size_t ring_dim = 0;
  std::vector<FpMat> basis;  // F_p basis of the commutant

  std::size_t dim() const { return basis.size(); }
  FpMat from_coords(const FpVec& c) const;
  // Coordinates of a matrix in the commutant; throws NotZInvariant when the
  // matrix lies outside.
  FpVec to_coords(const FpMat& m) const;
  bool contains(const FpMat& m) const;
};

Center center_of(const Ring& r);

// The unit group of the commutant, enumerated exhaustively and presented as
// an abelian group. Elements are stored as matrices; index 0 is the identity
// map.
struct CentralUnitGroup {
  Center center;
  std::vector<FpMat> elements;
  EnumeratedAbelianGroup structure;

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const FpMat& m) const;  // throws NoRepresentative
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse_of(std::size_t a) const;
};

CentralUnitGroup central_units(const Ring& r, std::uint64_t cap = 1u << 20);

}  // namespace lucp

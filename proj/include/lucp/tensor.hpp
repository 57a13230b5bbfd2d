#pragma once

#include <vector>

#include "lucp/bimodule.hpp"

namespace lucp {

// Quotient of F_p^plain_dim by the span of gens, with a stored projection
// and a section landing in the canonical complement (free coordinates of
// the reduced span). proj * sect = id; proj kills every generator.
struct QuotientSpace {
  Fp p = 2;
  std::size_t plain_dim = 0;
  std::size_t dim = 0;
  FpMat proj;
  FpMat sect;
  std::vector<FpVec> gens;
};

QuotientSpace quotient_by(Fp p, std::size_t plain_dim,
                          const std::vector<FpVec>& gens);

// Balanced tensor product of a chain of bimodules over their common ring.
// Plain coordinates are row-major over the factor dims; the quotient divides
// by all middle-slot balancing relations. The result carries the left action
// of the first factor and the right action of the last.
struct BimoduleTensor {
  Bimodule mod;
  std::vector<std::size_t> dims;
  QuotientSpace q;

  // proj applied to the pure tensor of the given factor vectors
  FpVec pure(const std::vector<FpVec>& parts) const;
};

BimoduleTensor tensor_chain(const std::vector<const Bimodule*>& factors);

FpMat kron_chain(const std::vector<FpMat>& ms);

// Push a map on plain coordinates down to the quotients; throws NotBilinear
// when the map fails to kill the source balancing relations.
FpMat descend_map(const QuotientSpace& src, const QuotientSpace& dst,
                  const FpMat& plain_map);

// m (x) R -> m, x (x) r -> x . r; returns the iso on tensor coordinates.
FpMat unit_iso_right(const Bimodule& m, const BimoduleTensor& mr);
// R (x) m -> m, r (x) x -> r . x
FpMat unit_iso_left(const Bimodule& m, const BimoduleTensor& rm);

}  // namespace lucp

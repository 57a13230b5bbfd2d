#pragma once

#include "lucp/center.hpp"
#include "lucp/tensor.hpp"

namespace lucp {

// The space of bimodule maps from the ring into m, as a module over the
// commutant acting by precomposition.
struct InvariantsModule {
  Fp p = 2;
  std::size_t ring_dim = 0;
  std::size_t mod_dim = 0;
  std::vector<FpMat> basis;  // maps ring -> m

  std::size_t dim() const { return basis.size(); }
  FpMat from_coords(const FpVec& c) const;
  FpVec to_coords(const FpMat& f) const;  // throws NoRepresentative outside
  // Matrix of f -> f o z on coordinates, z a commutant matrix.
  FpMat precompose_action(const FpMat& z) const;
};

InvariantsModule invariants(const Ring& r, const Bimodule& m);

// The ring tensored with the invariants over the commutant, carrying the
// outer ring actions, together with the evaluation map r (x) f -> f(r).
struct EvaluationResult {
  Bimodule mod;
  QuotientSpace q;
  FpMat eval;  // tensor coords -> m coords
  bool iso = false;
};

EvaluationResult evaluation_map(const Ring& r, const Center& z,
                                const Bimodule& m);

// Pairing of invariants: f (x) g -> (x -> f(x) (x) g(e_x)) with e_x the
// first listed unit absorbing x. Returns the matrix from the balanced
// tensor of the two invariant spaces over the commutant to the invariants
// of the balanced tensor module.
struct ComparisonResult {
  QuotientSpace src;  // invariants(m) (x)_commutant invariants(n)
  FpMat map;          // src coords -> invariants(tensor) coords
  bool iso = false;
};

ComparisonResult comparison_map(const Ring& r, const Center& z,
                                const Bimodule& m, const Bimodule& n,
                                const BimoduleTensor& mn,
                                const InvariantsModule& minv,
                                const InvariantsModule& ninv,
                                const InvariantsModule& mninv);

}  // namespace lucp

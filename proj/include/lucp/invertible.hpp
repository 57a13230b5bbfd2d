#pragma once

#include <utility>

#include "lucp/center.hpp"
#include "lucp/tensor.hpp"

namespace lucp {

// An invertible bimodule: x together with a partner y and contraction
// isomorphisms l: x (x) y -> ring and r: y (x) x -> ring obeying both
// mixed associativity laws
//   a . r(b (x) a') = l(a (x) b) . a'
//   b . l(a (x) b') = r(b (x) a) . b'
struct InvertibleBimodule {
  Bimodule x, y;
  BimoduleTensor xy, yx;
  FpMat l, linv;
  FpMat r, rinv;

  void validate() const;
};

// Builds the partner as the right dual (right-module maps into the ring,
// cut down to its unital part), takes evaluation for r, and solves the
// mixed associativity law for l. Throws NotInvertible when x has none.
InvertibleBimodule make_invertible(const Bimodule& x);

// Wraps explicitly given data after full validation.
InvertibleBimodule make_invertible_with(const Bimodule& x, const Bimodule& y,
                                        const FpMat& l, const FpMat& r);

// Writes a listed unit e as sum l(x_k (x) y_k) with every x_k = e . x_k and
// y_k = y_k . e; the returned pairs re-verify that identity.
std::vector<std::pair<FpVec, FpVec>> unit_decomposition(
    const InvertibleBimodule& inv, const FpVec& e);

// The endomorphism m_i -> u(e_i) . m_i for a commutant matrix u, with e_i
// the first listed unit absorbing m_i. A bimodule map independent of the
// unit choices.
FpMat act_by_central_unit(const FpMat& u, const Bimodule& m);

// The commutant unit carrying a bimodule automorphism of an invertible
// bimodule: sigma(v) = tilde . v. Verified against sigma before returning.
FpMat central_unit_of_automorphism(const InvertibleBimodule& inv,
                                   const FpMat& sigma);

// Conjugation of a commutant unit by an invertible bimodule: the commutant
// unit sending s to s . sum l(x_k u(e1) (x) y_k). This is the symmetry of
// the commutant induced by the class of x.
FpMat conjugate_central_unit(const InvertibleBimodule& inv, const FpMat& u);

InvertibleBimodule regular_invertible(const Ring& r);
InvertibleBimodule tensor_invertible(const InvertibleBimodule& a,
                                     const InvertibleBimodule& b);

// Does every commutant element act identically on the two sides of x?
bool is_z_symmetric(const Center& z, const Bimodule& x);

}  // namespace lucp

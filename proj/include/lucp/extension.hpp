#pragma once

#include "lucp/ring.hpp"

namespace lucp {

// An extension is a larger ring together with an injective multiplicative
// embedding of the base ring that carries every listed base unit onto a
// listed unit of the larger ring.
struct Extension {
  Ring base;
  Ring top;
  FpMat emb;  // top.dim x base.dim

  FpVec embed(const FpVec& x) const { return emb.apply(x); }
  void validate() const;
};

Extension make_extension(Ring base, Ring top, FpMat emb);

}  // namespace lucp

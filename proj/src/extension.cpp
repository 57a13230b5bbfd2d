#include "lucp/extension.hpp"

#include <algorithm>
#include <string>

#include "lucp/errors.hpp"

namespace lucp {

void Extension::validate() const {
  base.validate();
  top.validate();
  if (base.p != top.p)
    fail(ErrorKind::Shape, "base and extension use different moduli");
  if (emb.rows != top.dim || emb.cols != base.dim)
    fail(ErrorKind::Shape, "embedding matrix shape mismatch");
  if (rank(emb) != base.dim)
    fail(ErrorKind::Validation, "embedding is not injective");
  for (std::size_t i = 0; i < base.dim; ++i)
    for (std::size_t j = 0; j < base.dim; ++j) {
      FpVec lhs = embed(base.mul(base.basis(i), base.basis(j)));
      FpVec rhs = top.mul(embed(base.basis(i)), embed(base.basis(j)));
      if (lhs != rhs)
        fail(ErrorKind::NotMultiplicative,
             "embedding breaks the product of basis vectors " +
                 std::to_string(i) + " and " + std::to_string(j));
    }
  for (std::size_t i = 0; i < base.units.size(); ++i) {
    FpVec img = embed(base.units[i]);
    if (std::find(top.units.begin(), top.units.end(), img) ==
        top.units.end())
      fail(ErrorKind::UnitSetMismatch,
           "image of base unit " + std::to_string(i) +
               " is not a listed unit of the extension");
  }
}

Extension make_extension(Ring base, Ring top, FpMat emb) {
  Extension e;
  e.base = std::move(base);
  e.top = std::move(top);
  e.emb = std::move(emb);
  e.validate();
  return e;
}

}  // namespace lucp

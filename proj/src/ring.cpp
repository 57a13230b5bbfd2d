#include "lucp/ring.hpp"

#include <string>

#include "lucp/errors.hpp"

namespace lucp {

FpVec Ring::mul(const FpVec& x, const FpVec& y) const {
  if (x.size() != dim || y.size() != dim)
    fail(ErrorKind::Shape, "ring element dimension mismatch");
  FpVec out(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Fp c = fp_mul(x[i], y[j], p);
      const FpVec& bij = prod[i * dim + j];
      for (std::size_t k = 0; k < dim; ++k)
        out[k] = fp_add(out[k], fp_mul(c, bij[k], p), p);
    }
  }
  return out;
}

FpMat Ring::left_mul_matrix(const FpVec& x) const {
  FpMat m(p, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_col(j, mul(x, basis(j)));
  return m;
}

FpMat Ring::right_mul_matrix(const FpVec& x) const {
  FpMat m(p, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_col(j, mul(basis(j), x));
  return m;
}

bool Ring::is_idempotent(const FpVec& e) const { return mul(e, e) == e; }

bool Ring::absorbs(const FpVec& e, const FpVec& x) const {
  return mul(e, x) == x && mul(x, e) == x;
}

FpVec Ring::unit_for(const std::vector<FpVec>& elems) const {
  return units[unit_index_for(elems)];
}

std::size_t Ring::unit_index_for(const std::vector<FpVec>& elems) const {
  for (std::size_t i = 0; i < units.size(); ++i) {
    bool ok = true;
    for (const FpVec& x : elems)
      if (!absorbs(units[i], x)) {
        ok = false;
        break;
      }
    if (ok) return i;
  }
  fail(ErrorKind::NoCommonUnit,
       "no listed unit absorbs all " + std::to_string(elems.size()) +
           " given elements");
}

void Ring::validate() const {
  if (dim == 0) fail(ErrorKind::Shape, "ring must have positive dimension");
  if (!is_prime(p)) fail(ErrorKind::Shape, "modulus is not prime");
  if (prod.size() != dim * dim)
    fail(ErrorKind::Shape, "structure constant table size mismatch");
  for (const FpVec& v : prod)
    if (v.size() != dim)
      fail(ErrorKind::Shape, "structure constant row size mismatch");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        FpVec lhs = mul(mul(basis(i), basis(j)), basis(k));
        FpVec rhs = mul(basis(i), mul(basis(j), basis(k)));
        if (lhs != rhs)
          fail(ErrorKind::NonAssociative,
               "associativity fails on basis triple (" + std::to_string(i) +
                   "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  if (units.empty())
    fail(ErrorKind::NoLocalUnit, "unit list must be nonempty");
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].size() != dim)
      fail(ErrorKind::Shape, "unit dimension mismatch");
    if (!is_idempotent(units[i]))
      fail(ErrorKind::NotIdempotent,
           "listed unit " + std::to_string(i) + " is not idempotent");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    bool covered = false;
    for (const FpVec& e : units)
      if (absorbs(e, basis(i))) {
        covered = true;
        break;
      }
    if (!covered)
      fail(ErrorKind::NoLocalUnit,
           "basis vector " + std::to_string(i) +
               " is absorbed by no listed unit");
  }
  // Pair closure: some listed unit dominates every pair of listed units.
  // Together with basis absorption this makes the list upward directed, so
  // any finite element set admits a common unit.
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = 0; j < units.size(); ++j) {
      bool covered = false;
      for (const FpVec& g : units)
        if (absorbs(g, units[i]) && absorbs(g, units[j])) {
          covered = true;
          break;
        }
      if (!covered)
        fail(ErrorKind::NoLocalUnit,
             "units " + std::to_string(i) + " and " + std::to_string(j) +
                 " have no common dominating unit in the list");
    }
}

Ring make_ring(Fp p, std::size_t dim, std::vector<FpVec> prod,
               std::vector<FpVec> units) {
  Ring r;
  r.p = p;
  r.dim = dim;
  r.prod = std::move(prod);
  r.units = std::move(units);
  r.validate();
  return r;
}

}  // namespace lucp

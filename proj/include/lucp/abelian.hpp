#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lucp/intmat.hpp"

namespace lucp {

// Finite abelian group in invariant-factor form: Z/d1 x ... x Z/dk with
// d1 | d2 | ... | dk, every di >= 2. Elements are exponent vectors reduced
// componentwise.
struct AbelianGroup {
  std::vector<std::int64_t> factors;

  using Elem = std::vector<std::int64_t>;

  std::size_t rank() const { return factors.size(); }
  std::int64_t order() const;
  bool operator==(const AbelianGroup& o) const { return factors == o.factors; }

  Elem zero() const { return Elem(factors.size(), 0); }
  Elem reduce(Elem e) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scale(std::int64_t k, const Elem& a) const;
  bool is_zero(const Elem& a) const;
  std::int64_t elem_order(const Elem& a) const;

  // All elements in lexicographic order; throws EnumerationCap past cap.
  std::vector<Elem> elements(std::uint64_t cap = 1u << 20) const;
};

// Presentation of Z^gens modulo the row span of an integer relation matrix,
// with both directions of the coordinate change retained so that arbitrary
// generator words can be mapped to canonical coordinates and back.
struct RelPresentation {
  AbelianGroup group;
  std::size_t gens = 0;
  IntMat u;     // unimodular gens x gens
  IntMat uinv;  // inverse of u
  std::vector<std::size_t> kept;  // rows of u carrying factors >= 2

  AbelianGroup::Elem coords(const std::vector<std::int64_t>& word) const;
  std::vector<std::int64_t> lift(const AbelianGroup::Elem& e) const;
};

// rels rows are relation words over the generators. The quotient must be
// finite; a nonzero free rank throws FreeRank.
RelPresentation group_from_relations(std::size_t gens, const IntMat& rels);

// Multiplication table of a finite (not necessarily abelian) group.
struct FiniteGroupTable {
  std::size_t n = 1;
  std::vector<std::size_t> table;  // table[x * n + y] = xy
  std::size_t identity = 0;
  std::vector<std::size_t> inv;

  std::size_t mul(std::size_t x, std::size_t y) const {
    return table[x * n + y];
  }
  std::size_t inverse(std::size_t x) const { return inv[x]; }
  std::uint64_t element_order(std::size_t x) const;
  bool operator==(const FiniteGroupTable& o) const {
    return n == o.n && table == o.table && identity == o.identity;
  }

  static FiniteGroupTable cyclic(std::size_t n);
  // Builds inverse table and checks all axioms; throws Validation.
  static FiniteGroupTable from_table(std::size_t n,
                                     const std::vector<std::size_t>& table,
                                     std::size_t identity);
};

// Structure of an abelian group handed to us as an opaque element list with a
// multiplication callback: invariant factors plus canonical coordinates for
// every element and a representative for every coordinate vector.
struct EnumeratedAbelianGroup {
  AbelianGroup shape;
  std::size_t identity = 0;
  std::vector<std::size_t> generator_ids;
  std::vector<AbelianGroup::Elem> coords_of;  // per element index
  std::map<AbelianGroup::Elem, std::size_t> index_by_coords;

  std::size_t rep_of(const AbelianGroup::Elem& e) const;
};

EnumeratedAbelianGroup abelian_structure(
    std::size_t n, std::size_t identity,
    const std::function<std::size_t(std::size_t, std::size_t)>& mul);

}  // namespace lucp

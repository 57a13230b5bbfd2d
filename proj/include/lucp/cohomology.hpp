#pragma once

#include <cstdint>
#include <vector>

#include "lucp/abelian.hpp"
#include "lucp/intmat.hpp"

namespace lucp {

using GTuple = std::vector<std::size_t>;

// Group cohomology data: a finite group acting on a finite abelian
// coefficient group written in invariant-factor coordinates. Cochains are
// normalized: they are supported on tuples avoiding the identity, and any
// value referenced at an identity-bearing tuple is zero.
struct TwistedComplex {
  FiniteGroupTable g;
  AbelianGroup coeff;
  std::vector<IntMat> action;      // per group element, k x k on coordinates
  std::vector<std::size_t> nonid;  // non-identity element ids, increasing

  std::size_t k() const { return coeff.rank(); }
  std::uint64_t tuple_count(std::size_t n) const;
  std::vector<GTuple> tuples(std::size_t n) const;
  std::size_t tuple_index(const GTuple& t) const;  // over non-identity tuples
  void validate() const;
  // Integer matrix of the degree-raising map from degree n.
  IntMat differential(std::size_t n) const;
};

TwistedComplex make_twisted_complex(
    const FiniteGroupTable& g, const EnumeratedAbelianGroup& a,
    const std::vector<std::vector<std::size_t>>& perm_action);

// Exponent-coordinate cochain: one block of k coordinates per tuple of
// non-identity elements, degree-th cartesian power, lexicographic order.
struct Cochain {
  std::size_t degree = 0;
  std::vector<std::int64_t> v;
};

Cochain zero_cochain(const TwistedComplex& cx, std::size_t n);
AbelianGroup::Elem cochain_value(const TwistedComplex& cx, const Cochain& c,
                                 const GTuple& t);
void set_cochain_value(const TwistedComplex& cx, Cochain& c, const GTuple& t,
                       const AbelianGroup::Elem& value);
Cochain apply_differential(const TwistedComplex& cx, const Cochain& c);
bool is_cocycle(const TwistedComplex& cx, const Cochain& c);
Cochain reduce_cochain(const TwistedComplex& cx, Cochain c);
Cochain add_cochains(const TwistedComplex& cx, const Cochain& a,
                     const Cochain& b);
Cochain neg_cochain(const TwistedComplex& cx, const Cochain& a);

// Cocycles modulo boundaries and coefficient relations at one degree, with
// a classifier and a representative picker that are mutually inverse.
struct CohomologyGroup {
  AbelianGroup group;
  std::size_t degree = 0;
  std::size_t len = 0;       // cochain vector length at this degree
  IntMat basis;              // columns: lattice basis of the cocycles
  SnfResult basis_snf;
  RelPresentation pres;      // quotient by boundaries and relations
  AbelianGroup coeff;

  AbelianGroup::Elem class_of(const Cochain& c) const;  // NotACocycle
  Cochain representative(const AbelianGroup::Elem& e) const;
};

CohomologyGroup cohomology(const TwistedComplex& cx, std::size_t n);

}  // namespace lucp

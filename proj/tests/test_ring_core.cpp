#include <doctest.h>

#include <functional>

#include "lucp/center.hpp"
#include "lucp/errors.hpp"
#include "lucp/extension.hpp"
#include "lucp/ring.hpp"
#include "lucp/standard.hpp"

using namespace lucp;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("prime and extension fields") {
  auto f2 = field_ring(2);
  CHECK(f2.dim == 1);
  CHECK(f2.mul({1}, {1}) == FpVec{1});

  // frozen: smallest irreducible over F_2 of degree 2 is t^2 + t + 1,
  // so t * t = t + 1
  auto f4 = ext_field_ring(2, 2);
  CHECK(f4.prod[1 * 2 + 1] == FpVec{1, 1});
  // frozen: degree 3 gives t^3 + t + 1, so t * t^2 = t + 1
  auto f8 = ext_field_ring(2, 3);
  CHECK(f8.mul(f8.basis(1), f8.basis(2)) == FpVec{1, 1, 0});
  // frozen: over F_3 degree 2 gives t^2 + 1, so t * t = -1
  auto f9 = ext_field_ring(3, 2);
  CHECK(f9.prod[1 * 2 + 1] == FpVec{2, 0});

  // every nonzero element of F_4 is invertible: x^3 = 1
  for (Fp a = 0; a < 2; ++a)
    for (Fp b = 0; b < 2; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(ring_pow(f4, {a, b}, 3) == FpVec{1, 0});
    }
}

TEST_CASE("matrix ring and direct sum") {
  auto m2 = matrix_ring(2, 2);
  CHECK(m2.dim == 4);
  // frozen: e01 * e10 = e00, e10 * e01 = e11, e01 * e01 = 0
  CHECK(m2.mul(m2.basis(1), m2.basis(2)) == m2.basis(0));
  CHECK(m2.mul(m2.basis(2), m2.basis(1)) == m2.basis(3));
  CHECK(m2.mul(m2.basis(1), m2.basis(1)) == m2.zero());

  auto s = direct_sum(field_ring(3), field_ring(3));
  CHECK(s.dim == 2);
  CHECK(s.units.size() == 3);
  CHECK(s.units[0] == FpVec{1, 0});
  CHECK(s.units[1] == FpVec{0, 1});
  CHECK(s.units[2] == FpVec{1, 1});
  CHECK(s.mul({1, 2}, {2, 2}) == FpVec{2, 1});
}

TEST_CASE("unit lookup picks the first listed match") {
  auto s = direct_sum(field_ring(2), field_ring(2));
  CHECK(s.unit_for({s.basis(0)}) == FpVec{1, 0});
  CHECK(s.unit_for({s.basis(1)}) == FpVec{0, 1});
  CHECK(s.unit_for({s.basis(0), s.basis(1)}) == FpVec{1, 1});
  CHECK(s.unit_index_for({FpVec{1, 1}}) == 2);
  // a ring whose listed units cannot cover a mixed element
  Ring broken = s;
  broken.units = {FpVec{1, 0}, FpVec{0, 1}};
  CHECK(kind_of([&] { broken.unit_for({FpVec{1, 1}}); }) ==
        ErrorKind::NoCommonUnit);
}

TEST_CASE("ring validation failure kinds") {
  // non-associative structure constants
  {
    Ring r;
    r.p = 2;
    r.dim = 2;
    r.prod = {FpVec{0, 1}, FpVec{1, 0}, FpVec{0, 0}, FpVec{0, 0}};
    r.units = {FpVec{1, 0}};
    CHECK(kind_of([&] { r.validate(); }) == ErrorKind::NonAssociative);
  }
  // a listed unit that is not idempotent
  {
    Ring f4 = ext_field_ring(2, 2);
    f4.units = {FpVec{0, 1}};
    CHECK(kind_of([&] { f4.validate(); }) == ErrorKind::NotIdempotent);
  }
  // basis vector absorbed by no unit
  {
    Ring s = direct_sum(field_ring(2), field_ring(2));
    s.units = {FpVec{1, 0}};
    CHECK(kind_of([&] { s.validate(); }) == ErrorKind::NoLocalUnit);
  }
  // absorption holds but the pair of units has no common dominating unit
  {
    Ring s = direct_sum(field_ring(2), field_ring(2));
    s.units = {FpVec{1, 0}, FpVec{0, 1}};
    CHECK(kind_of([&] { s.validate(); }) == ErrorKind::NoLocalUnit);
  }
}

TEST_CASE("commutant of the regular bimodule") {
  // frozen: for a commutative ring the commutant is all multiplications,
  // one dimension per ring dimension
  CHECK(center_of(ext_field_ring(2, 2)).dim() == 2);
  CHECK(center_of(field_ring(3)).dim() == 1);
  CHECK(center_of(direct_sum(field_ring(3), field_ring(3))).dim() == 2);
  // frozen: full matrix algebra has scalar commutant
  auto c = center_of(matrix_ring(2, 2));
  CHECK(c.dim() == 1);
  CHECK(c.contains(FpMat::identity(2, 4)));
  FpVec one = c.to_coords(FpMat::identity(2, 4));
  CHECK(c.from_coords(one) == FpMat::identity(2, 4));
}

TEST_CASE("central unit groups of the fixtures") {
  // frozen: multiplicative groups F_4* = Z/3, F_3* = Z/2,
  // (F_3 x F_3)* = Z/2 x Z/2, scalars of M_2(F_2) trivial
  CHECK(central_units(ext_field_ring(2, 2)).structure.shape.factors ==
        std::vector<std::int64_t>{3});
  CHECK(central_units(field_ring(3)).structure.shape.factors ==
        std::vector<std::int64_t>{2});
  CHECK(central_units(direct_sum(field_ring(3), field_ring(3)))
            .structure.shape.factors == std::vector<std::int64_t>{2, 2});
  CHECK(central_units(matrix_ring(2, 2)).structure.shape.factors.empty());

  auto u = central_units(ext_field_ring(2, 2));
  CHECK(u.size() == 3);
  CHECK(u.elements[0] == FpMat::identity(2, 2));
  // group ops agree with matrix products
  for (std::size_t a = 0; a < u.size(); ++a) {
    CHECK(u.mul(a, u.inverse_of(a)) == 0);
    for (std::size_t b = 0; b < u.size(); ++b)
      CHECK(u.structure.coords_of[u.mul(a, b)] ==
            u.structure.shape.add(u.structure.coords_of[a],
                                  u.structure.coords_of[b]));
  }
}

TEST_CASE("frobenius map generates the expected symmetries") {
  auto f4 = ext_field_ring(2, 2);
  auto fr = field_frobenius(f4);
  // frozen: t -> t^2 = t + 1
  CHECK(fr.apply(f4.basis(1)) == FpVec{1, 1});
  CHECK(fr.mul(fr) == FpMat::identity(2, 2));
  CHECK_FALSE(fr == FpMat::identity(2, 2));

  auto f8 = ext_field_ring(2, 3);
  auto fr8 = field_frobenius(f8);
  CHECK_FALSE(fr8 == FpMat::identity(2, 3));
  CHECK_FALSE(fr8.mul(fr8) == FpMat::identity(2, 3));
  CHECK(fr8.mul(fr8).mul(fr8) == FpMat::identity(2, 3));
  // multiplicative: (xy)^p = x^p y^p checked on basis products
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(fr8.apply(f8.mul(f8.basis(i), f8.basis(j))) ==
            f8.mul(fr8.apply(f8.basis(i)), fr8.apply(f8.basis(j))));
}

TEST_CASE("extension embeddings") {
  auto f2 = field_ring(2);
  auto f4 = ext_field_ring(2, 2);
  FpMat emb(2, 2, 1);
  emb.at(0, 0) = 1;
  auto ext = make_extension(f2, f4, emb);
  CHECK(ext.embed({1}) == FpVec{1, 0});

  // non-multiplicative: sending 1 to t
  FpMat bad(2, 2, 1);
  bad.at(1, 0) = 1;
  CHECK(kind_of([&] { make_extension(f2, f4, bad); }) ==
        ErrorKind::NotMultiplicative);

  // unit image outside the listed units of the top ring
  auto f3 = field_ring(3);
  Ring top = direct_sum(f3, f3);
  top.units = {FpVec{1, 1}};
  top.validate();
  FpMat corner(3, 2, 1);
  corner.at(0, 0) = 1;
  CHECK(kind_of([&] { make_extension(f3, top, corner); }) ==
        ErrorKind::UnitSetMismatch);

  // non-injective embedding into the same ring
  FpMat zero(2, 1, 1);
  CHECK(kind_of([&] { make_extension(f2, f2, zero); }) ==
        ErrorKind::Validation);
}

#include <doctest.h>

#include <functional>

#include "lucp/errors.hpp"
#include "lucp/invertible.hpp"
#include "lucp/pic.hpp"
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

Bimodule galois_twist(const Ring& field) {
  return twisted_regular(field, FpMat::identity(field.p, field.dim),
                         field_frobenius(field));
}

}  // namespace

TEST_CASE("regular bimodule is invertible with dual partner") {
  for (const Ring& r : {ext_field_ring(2, 2), field_ring(3),
                        direct_sum(field_ring(3), field_ring(3)),
                        matrix_ring(2, 2)}) {
    auto inv = regular_invertible(r);
    inv.validate();
    CHECK(inv.y.dim == r.dim);
    CHECK(inv.xy.mod.dim == r.dim);
  }
}

TEST_CASE("twisted line is invertible and squares to the ring") {
  auto f4 = ext_field_ring(2, 2);
  auto tw = galois_twist(f4);
  auto inv = make_invertible(tw);
  inv.validate();
  auto sq = tensor_invertible(inv, inv);
  Rng rng(3);
  CHECK(same_invertible_class(sq, regular_invertible(f4), rng) ==
        Verdict::Pass);
  CHECK(same_invertible_class(inv, regular_invertible(f4), rng) ==
        Verdict::Fail);
}

TEST_CASE("non-invertible module is rejected") {
  auto f4 = ext_field_ring(2, 2);
  auto rr = direct_power(regular_bimodule(f4), 2);
  CHECK(kind_of([&] { make_invertible(rr); }) == ErrorKind::NotInvertible);
}

TEST_CASE("unit decomposition contracts back to the unit") {
  auto f4 = ext_field_ring(2, 2);
  auto inv = regular_invertible(f4);
  auto pairs = unit_decomposition(inv, f4.units[0]);
  CHECK_FALSE(pairs.empty());
  for (const auto& [xv, yv] : pairs) {
    CHECK(inv.x.absorbed_by(f4.units[0], xv));
    CHECK(inv.y.ract(yv, f4.units[0]) == yv);
  }
  // split unit list: decomposition of each corner unit works
  auto s = direct_sum(field_ring(3), field_ring(3));
  auto sinv = regular_invertible(s);
  for (const FpVec& e : s.units) {
    auto ps = unit_decomposition(sinv, e);
    CHECK_FALSE(ps.empty());
    for (const auto& [xv, yv] : ps) CHECK(sinv.x.absorbed_by(e, xv));
  }
  // a non-listed idempotent is rejected
  CHECK(kind_of([&] { unit_decomposition(inv, FpVec{0, 0}); }) ==
        ErrorKind::Shape);
}

TEST_CASE("central unit action on modules") {
  auto f4 = ext_field_ring(2, 2);
  auto reg = regular_bimodule(f4);
  FpMat lt = f4.left_mul_matrix(f4.basis(1));
  // frozen: acting on the ring itself is plain multiplication
  CHECK(act_by_central_unit(lt, reg) == lt);
  // acting respects both module actions
  auto tw = galois_twist(f4);
  FpMat a = act_by_central_unit(lt, tw);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a.mul(tw.left[i]) == tw.left[i].mul(a));
    CHECK(a.mul(tw.right[i]) == tw.right[i].mul(a));
  }
  // split ring: the unit applies cornerwise
  auto s = direct_sum(field_ring(3), field_ring(3));
  FpMat u(3, 2, 2);
  u.at(0, 0) = 1;
  u.at(1, 1) = 2;
  CHECK(act_by_central_unit(u, regular_bimodule(s)) == u);
}

TEST_CASE("automorphisms of an invertible bimodule are central units") {
  auto f4 = ext_field_ring(2, 2);
  auto inv = regular_invertible(f4);
  FpMat lt = f4.left_mul_matrix(f4.basis(1));
  // frozen: multiplication by t pulls back to itself
  CHECK(central_unit_of_automorphism(inv, lt) == lt);
  auto tinv = make_invertible(galois_twist(f4));
  FpMat back = central_unit_of_automorphism(tinv, lt);
  CHECK(act_by_central_unit(back, tinv.x) == lt);
  // a non-equivariant map is rejected
  CHECK(kind_of([&] {
          central_unit_of_automorphism(inv, field_frobenius(f4));
        }) == ErrorKind::NotAutomorphism);
}

TEST_CASE("conjugation by an invertible class") {
  auto f4 = ext_field_ring(2, 2);
  FpMat lt = f4.left_mul_matrix(f4.basis(1));
  FpMat lt2 = f4.left_mul_matrix({1, 1});
  // frozen: the regular class acts trivially
  CHECK(conjugate_central_unit(regular_invertible(f4), lt) == lt);
  // frozen: the twisted line conjugates t to t^2 = t + 1
  auto tinv = make_invertible(galois_twist(f4));
  CHECK(conjugate_central_unit(tinv, lt) == lt2);
  CHECK(conjugate_central_unit(tinv, lt2) == lt);
}

TEST_CASE("commutant symmetry test") {
  auto f4 = ext_field_ring(2, 2);
  auto z = center_of(f4);
  CHECK(is_z_symmetric(z, regular_bimodule(f4)));
  CHECK_FALSE(is_z_symmetric(z, galois_twist(f4)));
  auto m2 = matrix_ring(2, 2);
  CHECK(is_z_symmetric(center_of(m2), regular_bimodule(m2)));
}

TEST_CASE("invertible class ledger") {
  auto f4 = ext_field_ring(2, 2);
  Rng rng(17);
  auto led = invertible_class_ledger(f4, {galois_twist(f4)}, rng);
  CHECK(led.verdict == Verdict::Pass);
  // frozen: the twisted line generates a two-element ledger
  CHECK(led.size() == 2);
  CHECK(led.table.mul(1, 1) == 0);
  auto st = abelian_structure(led.size(), 0, [&](std::size_t a,
                                                 std::size_t b) {
    return led.table.mul(a, b);
  });
  CHECK(st.shape.factors == std::vector<std::int64_t>{2});
  // only the identity class is symmetric for the commutant
  auto zsym = z_symmetric_classes(led, center_of(f4));
  CHECK(zsym == std::vector<std::size_t>{0});
  // cap enforcement
  CHECK(kind_of([&] {
          invertible_class_ledger(f4, {galois_twist(f4)}, rng, 1);
        }) == ErrorKind::CapExceeded);
}

TEST_CASE("ledger over a degree three extension") {
  auto f8 = ext_field_ring(2, 3);
  Rng rng(19);
  auto led = invertible_class_ledger(f8, {galois_twist(f8)}, rng);
  CHECK(led.verdict == Verdict::Pass);
  // frozen: the frobenius line has order three
  CHECK(led.size() == 3);
  CHECK(led.table.mul(1, 2) == 0);
}

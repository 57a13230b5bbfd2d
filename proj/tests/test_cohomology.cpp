#include <doctest.h>

#include <functional>
#include <set>
#include <vector>

#include "lucp/abelian.hpp"
#include "lucp/center.hpp"
#include "lucp/cohomology.hpp"
#include "lucp/errors.hpp"
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

EnumeratedAbelianGroup cyclic_enum(std::size_t n) {
  return abelian_structure(
      n, 0, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

std::vector<std::size_t> conj_perm(const CentralUnitGroup& u,
                                   const FpMat& f) {
  FpMat finv = inverse(f).value();
  std::vector<std::size_t> p(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    p[i] = u.index_of(f.mul(u.elements[i]).mul(finv));
  return p;
}

std::vector<std::int64_t> apply_int(const IntMat& m,
                                    const std::vector<std::int64_t>& v) {
  std::vector<mpz_class> in(v.begin(), v.end());
  std::vector<mpz_class> out = m.apply(in);
  std::vector<std::int64_t> r(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) r[i] = out[i].get_si();
  return r;
}

// Order of the degree-n group by full enumeration of cochains: cocycles
// counted directly, boundaries collected as reduced vectors.
std::int64_t brute_h_order(const TwistedComplex& cx, std::size_t n) {
  REQUIRE(n >= 1);
  std::size_t kk = cx.k();
  std::size_t len = kk * cx.tuple_count(n);
  std::size_t plen = kk * cx.tuple_count(n - 1);
  auto modulus = [&](std::size_t i) { return cx.coeff.factors[i % kk]; };
  auto reduce = [&](std::vector<std::int64_t> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] %= modulus(i);
      if (v[i] < 0) v[i] += modulus(i);
    }
    return v;
  };
  auto enumerate = [&](std::size_t width,
                       const std::function<void(
                           const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> v(width, 0);
    while (true) {
      visit(v);
      std::size_t i = 0;
      while (i < width && ++v[i] == modulus(i)) v[i++] = 0;
      if (i == width) break;
    }
  };
  IntMat d = cx.differential(n);
  IntMat dprev = cx.differential(n - 1);
  std::int64_t cocycles = 0;
  enumerate(len, [&](const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> dv = apply_int(d, v);
    bool zero = true;
    for (std::size_t i = 0; i < dv.size(); ++i)
      if (dv[i] % cx.coeff.factors[i % kk] != 0) zero = false;
    if (zero) ++cocycles;
  });
  std::set<std::vector<std::int64_t>> boundaries;
  enumerate(plen, [&](const std::vector<std::int64_t>& v) {
    boundaries.insert(reduce(apply_int(dprev, v)));
  });
  REQUIRE(cocycles % static_cast<std::int64_t>(boundaries.size()) == 0);
  return cocycles / static_cast<std::int64_t>(boundaries.size());
}

void check_factors(const TwistedComplex& cx, std::size_t n,
                   const std::vector<std::int64_t>& expect) {
  CohomologyGroup h = cohomology(cx, n);
  CHECK(h.group.factors == expect);
}

// C2 with the trivial action on Z/2.
TwistedComplex order_two_trivial() {
  return make_twisted_complex(FiniteGroupTable::cyclic(2), cyclic_enum(2),
                              {identity_perm(2), identity_perm(2)});
}

// C2 inverting Z/3, realized on the multiplier units of the quartic field.
TwistedComplex quartic_units_complex() {
  Ring s = ext_field_ring(2, 2);
  CentralUnitGroup u = central_units(s);
  FpMat f = field_frobenius(s);
  return make_twisted_complex(FiniteGroupTable::cyclic(2), u.structure,
                              {identity_perm(u.size()), conj_perm(u, f)});
}

// C3 doubling Z/7, realized on the multiplier units of the octic field.
TwistedComplex octic_units_complex() {
  Ring s = ext_field_ring(2, 3);
  CentralUnitGroup u = central_units(s);
  FpMat f = field_frobenius(s);
  return make_twisted_complex(
      FiniteGroupTable::cyclic(3), u.structure,
      {identity_perm(u.size()), conj_perm(u, f), conj_perm(u, f.mul(f))});
}

FiniteGroupTable klein_four() {
  std::vector<std::size_t> t(16);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) t[x * 4 + y] = x ^ y;
  return FiniteGroupTable::from_table(4, t, 0);
}

}  // namespace

TEST_CASE("tuple indexing is a bijection on identity-free tuples") {
  TwistedComplex cx = octic_units_complex();
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<GTuple> ts = cx.tuples(n);
    CHECK(ts.size() == cx.tuple_count(n));
    for (std::size_t i = 0; i < ts.size(); ++i)
      CHECK(cx.tuple_index(ts[i]) == i);
  }
  CHECK(kind_of([&] { cx.tuple_index({cx.g.identity}); }) ==
        ErrorKind::Shape);
}

TEST_CASE("action builder rejects malformed data") {
  FiniteGroupTable c2 = FiniteGroupTable::cyclic(2);
  EnumeratedAbelianGroup z3 = cyclic_enum(3);
  CHECK(kind_of([&] {
          make_twisted_complex(c2, z3, {identity_perm(3)});
        }) == ErrorKind::Shape);
  CHECK(kind_of([&] {
          make_twisted_complex(c2, z3, {identity_perm(3), {0, 0, 1}});
        }) == ErrorKind::NotAnAction);
  CHECK(kind_of([&] {
          make_twisted_complex(c2, z3, {{0, 2, 1}, identity_perm(3)});
        }) == ErrorKind::NotAnAction);
  // order-three permutation under an order-two group element
  CHECK(kind_of([&] {
          make_twisted_complex(c2, z3, {identity_perm(3), {1, 2, 0}});
        }) == ErrorKind::NotAnAction);
  // transposition of Z/4 fixing zero that is not additive
  EnumeratedAbelianGroup z4 = cyclic_enum(4);
  CHECK(kind_of([&] {
          make_twisted_complex(c2, z4, {identity_perm(4), {0, 2, 1, 3}});
        }) == ErrorKind::NotAutomorphism);
}

TEST_CASE("inversion action lands in the coordinate matrix") {
  TwistedComplex cx = quartic_units_complex();
  REQUIRE(cx.coeff.factors == std::vector<std::int64_t>{3});
  mpz_class e = cx.action[1].at(0, 0) % 3;
  if (e < 0) e += 3;
  CHECK(e == 2);  // frozen: the nontrivial element negates exponents
}

TEST_CASE("cochain values respect normalization") {
  TwistedComplex cx = order_two_trivial();
  Cochain c = zero_cochain(cx, 2);
  set_cochain_value(cx, c, {1, 1}, {1});
  CHECK(cochain_value(cx, c, {1, 1}) == AbelianGroup::Elem{1});
  CHECK(cochain_value(cx, c, {0, 1}) == AbelianGroup::Elem{0});
  set_cochain_value(cx, c, {0, 1}, {0});  // allowed: zero at identity tuples
  CHECK(kind_of([&] { set_cochain_value(cx, c, {0, 1}, {1}); }) ==
        ErrorKind::NotNormalized);
  CHECK(kind_of([&] { cochain_value(cx, c, {1}); }) == ErrorKind::Shape);
  Cochain s = add_cochains(cx, c, neg_cochain(cx, c));
  for (std::int64_t x : s.v) CHECK(x == 0);
}

TEST_CASE("composed differentials vanish modulo the coefficient lattice") {
  for (const TwistedComplex& cx :
       {order_two_trivial(), quartic_units_complex(),
        octic_units_complex()}) {
    std::size_t kk = cx.k();
    for (std::size_t n = 0; n <= 2; ++n) {
      IntMat dd = cx.differential(n + 1).mul(cx.differential(n));
      for (std::size_t i = 0; i < dd.rows; ++i)
        for (std::size_t j = 0; j < dd.cols; ++j)
          CHECK(dd.at(i, j) % cx.coeff.factors[i % kk] == 0);
    }
  }
}

TEST_CASE("order two group with trivial mod two coefficients") {
  TwistedComplex cx = order_two_trivial();
  // frozen: every degree contributes one order-two group
  for (std::size_t n = 0; n <= 3; ++n)
    check_factors(cx, n, std::vector<std::int64_t>{2});
  for (std::size_t n = 1; n <= 3; ++n)
    CHECK(brute_h_order(cx, n) == 2);
  // frozen: the nontrivial degree-two class takes the value 1 on (x, x)
  CohomologyGroup h2 = cohomology(cx, 2);
  Cochain rep = h2.representative({1});
  CHECK(is_cocycle(cx, rep));
  CHECK(cochain_value(cx, rep, {1, 1}) == AbelianGroup::Elem{1});
  CHECK(h2.class_of(rep) == AbelianGroup::Elem{1});
}

TEST_CASE("quadratic extension units have trivial cohomology") {
  TwistedComplex cx = quartic_units_complex();
  // frozen: fixed points and all higher degrees vanish
  for (std::size_t n = 0; n <= 3; ++n)
    check_factors(cx, n, std::vector<std::int64_t>{});
  for (std::size_t n = 1; n <= 3; ++n) CHECK(brute_h_order(cx, n) == 1);
}

TEST_CASE("cubic extension units have trivial cohomology") {
  TwistedComplex cx = octic_units_complex();
  REQUIRE(cx.coeff.factors == std::vector<std::int64_t>{7});
  // frozen: coprime orders force vanishing beyond degree zero
  for (std::size_t n = 0; n <= 3; ++n)
    check_factors(cx, n, std::vector<std::int64_t>{});
  for (std::size_t n = 1; n <= 2; ++n) CHECK(brute_h_order(cx, n) == 1);
}

TEST_CASE("rank grows for the four group with mod two coefficients") {
  TwistedComplex cx = make_twisted_complex(
      klein_four(), cyclic_enum(2),
      {identity_perm(2), identity_perm(2), identity_perm(2),
       identity_perm(2)});
  // frozen: degree one rank two, degree two rank three
  check_factors(cx, 1, std::vector<std::int64_t>{2, 2});
  check_factors(cx, 2, std::vector<std::int64_t>{2, 2, 2});
  CHECK(brute_h_order(cx, 1) == 4);
  CHECK(brute_h_order(cx, 2) == 8);
  // classifier separates exactly the brute-force classes
  CohomologyGroup h2 = cohomology(cx, 2);
  std::set<AbelianGroup::Elem> classes;
  std::size_t len = cx.tuple_count(2);
  for (std::uint64_t bits = 0; bits < (1u << len); ++bits) {
    Cochain c = zero_cochain(cx, 2);
    for (std::size_t i = 0; i < len; ++i) c.v[i] = (bits >> i) & 1;
    if (is_cocycle(cx, c)) classes.insert(h2.class_of(c));
  }
  CHECK(classes.size() == 8);
}

TEST_CASE("factor swap on a rank two coefficient group") {
  EnumeratedAbelianGroup v4 = abelian_structure(
      4, 0, [](std::size_t a, std::size_t b) { return a ^ b; });
  REQUIRE(v4.shape.factors == (std::vector<std::int64_t>{2, 2}));
  std::vector<std::size_t> swap_bits = {0, 2, 1, 3};
  TwistedComplex cx = make_twisted_complex(
      FiniteGroupTable::cyclic(2), v4, {identity_perm(4), swap_bits});
  // frozen: diagonal fixed points in degree zero, nothing above
  check_factors(cx, 0, std::vector<std::int64_t>{2});
  check_factors(cx, 1, std::vector<std::int64_t>{});
  check_factors(cx, 2, std::vector<std::int64_t>{});
  CHECK(brute_h_order(cx, 1) == 1);
  CHECK(brute_h_order(cx, 2) == 1);
}

TEST_CASE("trivial coefficient group yields trivial cohomology") {
  Ring m2 = matrix_ring(2, 2);
  CentralUnitGroup u = central_units(m2);
  REQUIRE(u.size() == 1);
  TwistedComplex cx =
      make_twisted_complex(FiniteGroupTable::cyclic(2), u.structure,
                           {identity_perm(1), identity_perm(1)});
  for (std::size_t n = 0; n <= 3; ++n)
    check_factors(cx, n, std::vector<std::int64_t>{});
}

TEST_CASE("classifier and representative are mutually inverse") {
  TwistedComplex cx = order_two_trivial();
  for (std::size_t n = 1; n <= 3; ++n) {
    CohomologyGroup h = cohomology(cx, n);
    for (const AbelianGroup::Elem& e : h.group.elements()) {
      Cochain rep = h.representative(e);
      CHECK(is_cocycle(cx, rep));
      CHECK(h.class_of(rep) == e);
    }
  }
  // adding a boundary never moves the class
  CohomologyGroup h2 = cohomology(cx, 2);
  Cochain one = zero_cochain(cx, 1);
  set_cochain_value(cx, one, {1}, {1});
  Cochain shifted =
      add_cochains(cx, h2.representative({1}), apply_differential(cx, one));
  CHECK(h2.class_of(shifted) == AbelianGroup::Elem{1});
}

TEST_CASE("classifier rejects cochains outside the cocycles") {
  TwistedComplex cx = quartic_units_complex();
  CohomologyGroup h2 = cohomology(cx, 2);
  Cochain c = zero_cochain(cx, 2);
  set_cochain_value(cx, c, {1, 1}, {1});
  CHECK_FALSE(is_cocycle(cx, c));
  CHECK(kind_of([&] { h2.class_of(c); }) == ErrorKind::NotACocycle);
  Cochain wrong = zero_cochain(cx, 1);
  CHECK(kind_of([&] { h2.class_of(wrong); }) == ErrorKind::Shape);
}

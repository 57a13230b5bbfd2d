#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lucp/abelian.hpp"
#include "lucp/errors.hpp"
#include "lucp/fp.hpp"
#include "lucp/intmat.hpp"
#include "lucp/rng.hpp"

using namespace lucp;

namespace {

FpMat mat(Fp p, std::size_t r, std::size_t c, std::vector<Fp> v) {
  FpMat m(p, r, c);
  m.a = std::move(v);
  return m;
}

IntMat imat(std::size_t r, std::size_t c, std::vector<long> v) {
  IntMat m(r, c);
  for (std::size_t i = 0; i < v.size(); ++i) m.a[i] = v[i];
  return m;
}

IntMat random_int_matrix(Rng& rng, std::size_t r, std::size_t c, long span) {
  IntMat m(r, c);
  for (std::size_t i = 0; i < r * c; ++i)
    m.a[i] = static_cast<long>(rng.below(2 * span + 1)) - span;
  return m;
}

}  // namespace

TEST_CASE("prime residues: field ops and inverse") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  // frozen: 3 * 5 = 15 = 1 mod 7, so inv(3) = 5 in F_7
  CHECK(fp_inv(3, 7) == 5);
  CHECK(fp_pow(3, 6, 7) == 1);
  for (Fp x = 1; x < 7; ++x) CHECK(fp_mul(x, fp_inv(x, 7), 7) == 1);
  CHECK(fp_from_int(-1, 5) == 4);
  CHECK(fp_from_int(12, 5) == 2);
}

TEST_CASE("rref and rank over F_2 and F_5") {
  // frozen: [[1,1],[0,0]] is already in reduced form, rank 1
  auto r = rref(mat(2, 2, 2, {1, 1, 0, 0}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.mat.a == std::vector<Fp>{1, 1, 0, 0});
  // frozen: [[2,4],[1,3]] over F_5 reduces to identity
  auto r2 = rref(mat(5, 2, 2, {2, 4, 1, 3}));
  CHECK(r2.rank == 2);
  CHECK(r2.mat == FpMat::identity(5, 2));
  CHECK(rank(mat(3, 3, 3, {1, 2, 0, 2, 1, 0, 0, 0, 0})) == 1);
}

TEST_CASE("solve_linear_system: frozen witnesses") {
  // frozen: over F_2, x0 + x1 = 1 with a dead second row. Deterministic
  // particular solution sets free coordinates to zero: (1,0); kernel {(1,1)}.
  auto s = solve_linear_system(mat(2, 2, 2, {1, 1, 0, 0}), {1, 0});
  REQUIRE(s.has_value());
  CHECK(s->particular == FpVec{1, 0});
  REQUIRE(s->kernel.size() == 1);
  CHECK(s->kernel[0] == FpVec{1, 1});

  // frozen: identity over F_3 has the unique solution b itself
  auto s2 = solve_linear_system(FpMat::identity(3, 2), {2, 1});
  REQUIRE(s2.has_value());
  CHECK(s2->particular == FpVec{2, 1});
  CHECK(s2->kernel.empty());

  // frozen: 0 * x = 1 over F_2 is inconsistent
  auto s3 = solve_linear_system(mat(2, 1, 1, {0}), {1});
  CHECK_FALSE(s3.has_value());
}

TEST_CASE("solve_linear_system: randomized consistency") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Fp p = trial % 2 == 0 ? 2 : 5;
    std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
    FpMat a(p, rows, cols);
    for (auto& x : a.a) x = static_cast<Fp>(rng.below(p));
    FpVec x0(cols);
    for (auto& x : x0) x = static_cast<Fp>(rng.below(p));
    FpVec b = a.apply(x0);
    auto s = solve_linear_system(a, b);
    REQUIRE(s.has_value());
    CHECK(a.apply(s->particular) == b);
    for (const auto& k : s->kernel) CHECK(fpvec_is_zero(a.apply(k)));
    CHECK(s->kernel.size() == cols - rank(a));
  }
}

TEST_CASE("matrix inverse and kernel basis") {
  // frozen: [[1,1],[0,1]] over F_2 is its own inverse
  auto inv = inverse(mat(2, 2, 2, {1, 1, 0, 1}));
  REQUIRE(inv.has_value());
  CHECK(inv->a == std::vector<Fp>{1, 1, 0, 1});
  CHECK_FALSE(inverse(mat(2, 2, 2, {1, 1, 1, 1})).has_value());
  CHECK(is_invertible(FpMat::identity(7, 3)));

  auto k = kernel_basis(mat(3, 1, 3, {1, 2, 0}));
  // frozen: kernel of [1 2 0] over F_3 has the deterministic basis
  // (1,1,0) [free column 1, pivot entry = -2 = 1] and (0,0,1).
  REQUIRE(k.size() == 2);
  CHECK(k[0] == FpVec{1, 1, 0});
  CHECK(k[1] == FpVec{0, 0, 1});
}

TEST_CASE("subspace utilities") {
  std::vector<FpVec> gens = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  auto basis = subspace_basis(2, 3, gens);
  CHECK(basis.rows == 2);
  CHECK(subspace_contains(basis, {1, 0, 1}));
  CHECK_FALSE(subspace_contains(basis, {1, 0, 0}));
  auto basis2 = subspace_basis(2, 3, {{1, 0, 1}, {0, 1, 1}});
  CHECK(subspace_equal(basis, basis2));
}

TEST_CASE("integer determinant") {
  CHECK(determinant(imat(2, 2, {2, 4, 6, 8})) == -8);
  CHECK(determinant(IntMat::identity(3)) == 1);
  CHECK(determinant(imat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
}

TEST_CASE("smith normal form: frozen shapes") {
  // frozen: a diagonal singleton stays put
  auto s = smith_normal_form(imat(1, 1, {3}));
  CHECK(s.d.at(0, 0) == 3);

  // frozen: [[2,4],[6,8]] has invariant factors 2, 4
  auto s2 = smith_normal_form(imat(2, 2, {2, 4, 6, 8}));
  CHECK(s2.d.at(0, 0) == 2);
  CHECK(s2.d.at(1, 1) == 4);
  CHECK(s2.d.at(0, 1) == 0);
  CHECK(s2.d.at(1, 0) == 0);

  auto s3 = smith_normal_form(imat(2, 2, {0, 0, 0, 0}));
  CHECK(s3.d.is_zero());

  // frozen: swap matrix has invariant factors 1, 1
  auto s4 = smith_normal_form(imat(2, 2, {0, 1, 1, 0}));
  CHECK(s4.d.at(0, 0) == 1);
  CHECK(s4.d.at(1, 1) == 1);
}

TEST_CASE("smith normal form: randomized certification") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    IntMat a = random_int_matrix(rng, r, c, 9);
    auto s = smith_normal_form(a);
    // transform identity U A V = D
    CHECK(s.u.mul(a).mul(s.v) == s.d);
    // unimodular certificates
    mpz_class du = determinant(s.u), dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // diagonal, nonnegative, divisibility chain
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
    std::size_t diag = std::min(r, c);
    for (std::size_t i = 0; i < diag; ++i) CHECK(s.d.at(i, i) >= 0);
    for (std::size_t i = 0; i + 1 < diag; ++i) {
      if (s.d.at(i + 1, i + 1) != 0) {
        CHECK(s.d.at(i, i) != 0);
        CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
      }
    }
    // determinism: same input, same transforms
    auto s2 = smith_normal_form(a);
    CHECK(s2.u == s.u);
    CHECK(s2.v == s.v);
    CHECK(s2.d == s.d);
  }
}

TEST_CASE("abelian group element arithmetic") {
  AbelianGroup g{{2, 4}};
  CHECK(g.order() == 8);
  CHECK(g.add({1, 3}, {1, 2}) == AbelianGroup::Elem{0, 1});
  CHECK(g.neg({1, 1}) == AbelianGroup::Elem{1, 3});
  CHECK(g.elem_order({1, 0}) == 2);
  CHECK(g.elem_order({0, 1}) == 4);
  CHECK(g.elem_order({1, 2}) == 2);
  CHECK(g.elements().size() == 8);
  AbelianGroup t{{}};
  CHECK(t.order() == 1);
  CHECK(t.elements().size() == 1);
}

TEST_CASE("group_from_relations: frozen presentations") {
  // frozen: one generator killed by 3: Z/3
  auto p = group_from_relations(1, imat(1, 1, {3}));
  CHECK(p.group.factors == std::vector<std::int64_t>{3});
  // frozen: two generators killed by 2 each: Z/2 x Z/2
  auto p2 = group_from_relations(2, imat(2, 2, {2, 0, 0, 2}));
  CHECK(p2.group.factors == std::vector<std::int64_t>{2, 2});
  // frozen: relations 2a = 0, 4b = 0 give invariant factors 2 | 4
  auto p3 = group_from_relations(2, imat(2, 2, {2, 0, 0, 4}));
  CHECK(p3.group.factors == std::vector<std::int64_t>{2, 4});
  // frozen: a = b together with 2a = 0: one Z/2
  auto p4 = group_from_relations(2, imat(2, 2, {1, -1, 2, 0}));
  CHECK(p4.group.factors == std::vector<std::int64_t>{2});
  // trivial quotient: generator equal to zero
  auto p5 = group_from_relations(1, imat(1, 1, {1}));
  CHECK(p5.group.factors.empty());
  // free rank must be rejected
  CHECK_THROWS_AS(group_from_relations(2, imat(1, 2, {2, 0})), Error);
}

TEST_CASE("group_from_relations: coords/lift round trips") {
  Rng rng(23);
  auto p = group_from_relations(3, imat(3, 3, {2, 0, 0, 0, 6, 0, 0, 0, 5}));
  CHECK(p.group.order() == 60);
  // the quotient map is a homomorphism and lift is a section
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int64_t> w(3), w2(3);
    for (auto& x : w) x = static_cast<std::int64_t>(rng.below(25)) - 12;
    for (auto& x : w2) x = static_cast<std::int64_t>(rng.below(25)) - 12;
    auto e = p.coords(w), e2 = p.coords(w2);
    std::vector<std::int64_t> sum(3);
    for (int i = 0; i < 3; ++i) sum[i] = w[i] + w2[i];
    CHECK(p.coords(sum) == p.group.add(e, e2));
    CHECK(p.coords(p.lift(e)) == e);
  }
  // relation rows map to zero
  CHECK(p.group.is_zero(p.coords({2, 0, 0})));
  CHECK(p.group.is_zero(p.coords({0, 6, 0})));
  CHECK(p.group.is_zero(p.coords({0, 0, 5})));
}

TEST_CASE("group_from_relations: row order invariance of factors") {
  auto a = group_from_relations(2, imat(3, 2, {2, 2, 0, 4, 2, -2}));
  auto b = group_from_relations(2, imat(3, 2, {2, -2, 2, 2, 0, 4}));
  CHECK(a.group.factors == b.group.factors);
}

TEST_CASE("finite group tables") {
  auto c4 = FiniteGroupTable::cyclic(4);
  CHECK(c4.identity == 0);
  CHECK(c4.mul(3, 2) == 1);
  CHECK(c4.inverse(1) == 3);
  CHECK(c4.element_order(1) == 4);
  CHECK(c4.element_order(2) == 2);
  // corrupt table: constant row breaks the identity law
  std::vector<std::size_t> bad = {0, 1, 0, 0};
  CHECK_THROWS_AS(FiniteGroupTable::from_table(2, bad, 0), Error);
  // symmetric group on 3 letters via its table: id, (12), (13), (23),
  // (123), (132) with composition left-after-right
  std::vector<std::size_t> perm[6] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                      {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::size_t> t(36);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      std::vector<std::size_t> comp(3);
      for (int i = 0; i < 3; ++i) comp[i] = perm[x][perm[y][i]];
      for (int z = 0; z < 6; ++z)
        if (perm[z] == comp) t[x * 6 + y] = z;
    }
  auto s3 = FiniteGroupTable::from_table(6, t, 0);
  CHECK(s3.element_order(4) == 3);
  CHECK(s3.element_order(1) == 2);
}

TEST_CASE("abelian_structure recovers invariant factors") {
  // frozen: units of F_7 under multiplication form Z/6
  {
    std::vector<std::size_t> u = {1, 2, 3, 4, 5, 6};
    auto g = abelian_structure(6, 0, [&](std::size_t a, std::size_t b) {
      std::size_t prod = (u[a] * u[b]) % 7;
      return static_cast<std::size_t>(
          std::find(u.begin(), u.end(), prod) - u.begin());
    });
    CHECK(g.shape.factors == std::vector<std::int64_t>{6});
  }
  // frozen: Klein four group
  {
    std::vector<std::size_t> t = {0, 1, 2, 3, 1, 0, 3, 2,
                                  2, 3, 0, 1, 3, 2, 1, 0};
    auto g = abelian_structure(4, 0,
                               [&](std::size_t a, std::size_t b) {
                                 return t[a * 4 + b];
                               });
    CHECK(g.shape.factors == std::vector<std::int64_t>{2, 2});
  }
  // frozen: Z/2 x Z/4 modeled as pairs (i, j), identity (0, 0)
  {
    auto g = abelian_structure(8, 0, [](std::size_t a, std::size_t b) {
      std::size_t ai = a / 4, aj = a % 4, bi = b / 4, bj = b % 4;
      return ((ai + bi) % 2) * 4 + (aj + bj) % 4;
    });
    CHECK(g.shape.factors == std::vector<std::int64_t>{2, 4});
    // coordinates are consistent with the callback product
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) {
        std::size_t ai = a / 4, aj = a % 4, bi = b / 4, bj = b % 4;
        std::size_t ab = ((ai + bi) % 2) * 4 + (aj + bj) % 4;
        CHECK(g.coords_of[ab] ==
              g.shape.add(g.coords_of[a], g.coords_of[b]));
        CHECK(g.rep_of(g.shape.add(g.coords_of[a], g.coords_of[b])) == ab);
      }
  }
  // trivial group
  {
    auto g =
        abelian_structure(1, 0, [](std::size_t, std::size_t) { return 0u; });
    CHECK(g.shape.factors.empty());
  }
  // non-group input is rejected: idempotent non-identity element
  {
    std::vector<std::size_t> t = {0, 1, 1, 1};
    CHECK_THROWS_AS(abelian_structure(2, 0,
                                      [&](std::size_t a, std::size_t b) {
                                        return t[a * 2 + b];
                                      }),
                    Error);
  }
}

TEST_CASE("splitmix rng is deterministic") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng c(42);
  for (int i = 0; i < 100; ++i) CHECK(c.below(7) < 7);
}

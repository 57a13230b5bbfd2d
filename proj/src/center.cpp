#include "lucp/center.hpp"

#include <string>

#include "lucp/errors.hpp"

namespace lucp {

namespace {

FpVec flatten(const FpMat& m) { return m.a; }

FpMat unflatten(Fp p, std::size_t n, const FpVec& v) {
  FpMat m(p, n, n);
  m.a = v;
  return m;
}

}  // namespace

FpMat Center::from_coords(const FpVec& c) const {
  if (c.size() != basis.size())
    fail(ErrorKind::Shape, "coordinate length mismatch");
  FpMat out(p, ring_dim, ring_dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) out = out.add(basis[i].scale(c[i]));
  return out;
}

FpVec Center::to_coords(const FpMat& m) const {
  std::vector<FpVec> rows;
  rows.reserve(basis.size());
  for (const FpMat& b : basis) rows.push_back(flatten(b));
  FpMat gen = mat_from_rows(p, ring_dim * ring_dim, rows);
  auto sol = solve_linear_system(gen.transpose(), flatten(m));
  if (!sol)
    fail(ErrorKind::NotZInvariant,
         "matrix does not commute with the ring actions");
  return sol->particular;
}

bool Center::contains(const FpMat& m) const {
  std::vector<FpVec> rows;
  for (const FpMat& b : basis) rows.push_back(flatten(b));
  FpMat gen = mat_from_rows(p, ring_dim * ring_dim, rows);
  return solve_linear_system(gen.transpose(), flatten(m)).has_value();
}

Center center_of(const Ring& r) {
  // Unknown matrix M with M L_i = L_i M and M R_i = R_i M for every basis
  // index i. Row-major vectorization: (A M - M A) = 0 becomes
  // (A (x) I - I (x) A^T) vec(M) = 0.
  std::size_t n = r.dim;
  FpMat eye = FpMat::identity(r.p, n);
  std::vector<FpVec> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    for (FpMat a : {r.left_mul_matrix(r.basis(i)),
                    r.right_mul_matrix(r.basis(i))}) {
      FpMat block = a.kron(eye).sub(eye.kron(a.transpose()));
      for (std::size_t row = 0; row < block.rows; ++row)
        eqs.push_back(block.row(row));
    }
  }
  FpMat sys = mat_from_rows(r.p, n * n, eqs);
  Center c;
  c.p = r.p;
  c.ring_dim = n;
  for (const FpVec& k : kernel_basis(sys)) c.basis.push_back(unflatten(r.p, n, k));
  return c;
}

std::size_t CentralUnitGroup::index_of(const FpMat& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == m) return i;
  fail(ErrorKind::NoRepresentative, "matrix is not a listed central unit");
}

std::size_t CentralUnitGroup::mul(std::size_t a, std::size_t b) const {
  return index_of(elements[a].mul(elements[b]));
}

std::size_t CentralUnitGroup::inverse_of(std::size_t a) const {
  auto inv = inverse(elements[a]);
  if (!inv) fail(ErrorKind::Internal, "central unit lost invertibility");
  return index_of(*inv);
}

CentralUnitGroup central_units(const Ring& r, std::uint64_t cap) {
  CentralUnitGroup g;
  g.center = center_of(r);
  std::size_t k = g.center.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= r.p;
    if (total > cap)
      fail(ErrorKind::EnumerationCap,
           "commutant has " + std::to_string(k) +
               " dimensions; enumeration exceeds cap");
  }
  // Identity map first, then all other invertible combinations in
  // lexicographic coordinate order.
  FpMat eye = FpMat::identity(r.p, r.dim);
  if (!g.center.contains(eye))
    fail(ErrorKind::Internal, "identity map missing from the commutant");
  g.elements.push_back(eye);
  FpVec c(k, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::uint64_t rem = n;
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = static_cast<Fp>(rem % r.p);
      rem /= r.p;
    }
    FpMat m = g.center.from_coords(c);
    if (m == eye || !is_invertible(m)) continue;
    g.elements.push_back(m);
  }
  g.structure = abelian_structure(
      g.elements.size(), 0, [&](std::size_t a, std::size_t b) {
        return g.index_of(g.elements[a].mul(g.elements[b]));
      });
  return g;
}

}  // namespace lucp

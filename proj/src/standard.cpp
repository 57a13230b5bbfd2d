#include "lucp/standard.hpp"

#include <string>

#include "lucp/errors.hpp"

namespace lucp {

namespace {

// Coefficient vectors, index = degree, no trailing zeros maintained by trim.
FpVec poly_trim(FpVec a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpVec poly_mul(Fp p, const FpVec& a, const FpVec& b) {
  if (a.empty() || b.empty()) return {};
  FpVec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = fp_add(out[i + j], fp_mul(a[i], b[j], p), p);
  return poly_trim(out);
}

// Remainder of a modulo monic m.
FpVec poly_rem(Fp p, FpVec a, const FpVec& m) {
  a = poly_trim(std::move(a));
  while (a.size() >= m.size()) {
    Fp c = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = fp_sub(a[shift + i], fp_mul(c, m[i], p), p);
    a = poly_trim(std::move(a));
  }
  return a;
}

bool poly_irreducible(Fp p, const FpVec& f) {
  std::size_t n = f.size() - 1;
  // Trial division by all monic polynomials of degree 1..n/2.
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      FpVec g(d + 1, 0);
      g[d] = 1;
      std::uint64_t rem = k;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Fp>(rem % p);
        rem /= p;
      }
      if (poly_rem(p, f, g).empty()) return false;
    }
  }
  return true;
}

FpVec smallest_irreducible(Fp p, std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    FpVec f(n + 1, 0);
    f[n] = 1;
    std::uint64_t rem = k;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = static_cast<Fp>(rem % p);
      rem /= p;
    }
    if (poly_irreducible(p, f)) return f;
  }
  fail(ErrorKind::Internal, "no irreducible polynomial found");
}

}  // namespace

Ring field_ring(Fp p) {
  return make_ring(p, 1, {FpVec{1}}, {FpVec{1}});
}

Ring ext_field_ring(Fp p, std::size_t n) {
  if (n == 0) fail(ErrorKind::Shape, "extension degree must be positive");
  if (n == 1) return field_ring(p);
  FpVec f = smallest_irreducible(p, n);
  std::vector<FpVec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FpVec m(i + j + 1, 0);
      m[i + j] = 1;
      FpVec r = poly_rem(p, m, f);
      r.resize(n, 0);
      prod[i * n + j] = r;
    }
  FpVec one(n, 0);
  one[0] = 1;
  return make_ring(p, n, std::move(prod), {one});
}

Ring matrix_ring(Fp p, std::size_t n) {
  if (n == 0) fail(ErrorKind::Shape, "matrix size must be positive");
  std::size_t dim = n * n;
  std::vector<FpVec> prod(dim * dim, FpVec(dim, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t z = 0; z < n; ++z)
          if (v == w) prod[(u * n + v) * dim + (w * n + z)][u * n + z] = 1;
  FpVec eye(dim, 0);
  for (std::size_t u = 0; u < n; ++u) eye[u * n + u] = 1;
  return make_ring(p, dim, std::move(prod), {eye});
}

Ring direct_sum(const Ring& a, const Ring& b) {
  if (a.p != b.p) fail(ErrorKind::Shape, "summands use different moduli");
  std::size_t dim = a.dim + b.dim;
  auto lift_a = [&](const FpVec& x) {
    FpVec v(dim, 0);
    std::copy(x.begin(), x.end(), v.begin());
    return v;
  };
  auto lift_b = [&](const FpVec& x) {
    FpVec v(dim, 0);
    std::copy(x.begin(), x.end(), v.begin() + a.dim);
    return v;
  };
  std::vector<FpVec> prod(dim * dim, FpVec(dim, 0));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      prod[i * dim + j] = lift_a(a.prod[i * a.dim + j]);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      prod[(a.dim + i) * dim + (a.dim + j)] = lift_b(b.prod[i * b.dim + j]);
  std::vector<FpVec> units;
  for (const FpVec& e : a.units) units.push_back(lift_a(e));
  for (const FpVec& f : b.units) units.push_back(lift_b(f));
  for (const FpVec& e : a.units)
    for (const FpVec& f : b.units) {
      FpVec v = lift_a(e);
      const FpVec w = lift_b(f);
      for (std::size_t i = 0; i < dim; ++i) v[i] = fp_add(v[i], w[i], a.p);
      units.push_back(v);
    }
  return make_ring(a.p, dim, std::move(prod), std::move(units));
}

FpVec ring_pow(const Ring& r, const FpVec& x, std::uint64_t k) {
  if (k == 0) fail(ErrorKind::Shape, "zeroth power needs a chosen unit");
  FpVec acc = x;
  for (std::uint64_t i = 1; i < k; ++i) acc = r.mul(acc, x);
  return acc;
}

FpMat field_frobenius(const Ring& s) {
  FpMat m(s.p, s.dim, s.dim);
  m.set_col(0, s.basis(0));
  for (std::size_t i = 1; i < s.dim; ++i)
    m.set_col(i, ring_pow(s, s.basis(i), s.p));
  return m;
}

}  // namespace lucp

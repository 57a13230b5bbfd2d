#include "lucp/tensor.hpp"

#include <string>

namespace lucp {

QuotientSpace quotient_by(Fp p, std::size_t plain_dim,
                          const std::vector<FpVec>& gens) {
  QuotientSpace q;
  q.p = p;
  q.plain_dim = plain_dim;
  q.gens = gens;
  FpMat basis = subspace_basis(p, plain_dim, gens);
  // Free coordinates (non-pivot columns) index the quotient basis.
  std::vector<bool> is_pivot(plain_dim, false);
  RrefResult rr = rref(basis);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < plain_dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  q.dim = free_cols.size();
  q.proj = FpMat(p, q.dim, plain_dim);
  for (std::size_t col = 0; col < plain_dim; ++col) {
    // Reduce the plain basis vector modulo the span, read free coords.
    FpVec v(plain_dim, 0);
    v[col] = 1;
    for (std::size_t r = 0; r < basis.rows; ++r) {
      Fp c = v[rr.pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < plain_dim; ++j)
        v[j] = fp_sub(v[j], fp_mul(c, basis.at(r, j), p), p);
    }
    for (std::size_t i = 0; i < q.dim; ++i) q.proj.at(i, col) = v[free_cols[i]];
  }
  q.sect = FpMat(p, plain_dim, q.dim);
  for (std::size_t i = 0; i < q.dim; ++i) q.sect.at(free_cols[i], i) = 1;
  return q;
}

FpVec BimoduleTensor::pure(const std::vector<FpVec>& parts) const {
  if (parts.size() != dims.size())
    fail(ErrorKind::Shape, "pure tensor arity mismatch");
  FpVec v{1};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != dims[i])
      fail(ErrorKind::Shape, "pure tensor factor dimension mismatch");
    FpVec next(v.size() * dims[i], 0);
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = 0; b < dims[i]; ++b)
        next[a * dims[i] + b] = fp_mul(v[a], parts[i][b], mod.p());
    v = std::move(next);
  }
  return q.proj.apply(v);
}

BimoduleTensor tensor_chain(const std::vector<const Bimodule*>& factors) {
  if (factors.empty()) fail(ErrorKind::Shape, "tensor chain must be nonempty");
  const Ring& ring = factors[0]->ring;
  Fp p = ring.p;
  std::size_t plain = 1;
  std::vector<std::size_t> dims;
  for (const Bimodule* f : factors) {
    if (!(f->ring.p == ring.p && f->ring.dim == ring.dim &&
          f->ring.prod == ring.prod))
      fail(ErrorKind::Shape, "tensor factors live over different rings");
    dims.push_back(f->dim);
    plain *= f->dim;
  }
  std::vector<FpVec> gens;
  for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
    for (std::size_t i = 0; i < ring.dim; ++i) {
      // (m . b_i) (x) n - m (x) (b_i . n) at junction j
      std::vector<FpMat> a, b;
      for (std::size_t s = 0; s < factors.size(); ++s) {
        if (s == j) {
          a.push_back(factors[s]->right[i]);
          b.push_back(FpMat::identity(p, dims[s]));
        } else if (s == j + 1) {
          a.push_back(FpMat::identity(p, dims[s]));
          b.push_back(factors[s]->left[i]);
        } else {
          a.push_back(FpMat::identity(p, dims[s]));
          b.push_back(FpMat::identity(p, dims[s]));
        }
      }
      FpMat diff = kron_chain(a).sub(kron_chain(b));
      for (std::size_t col = 0; col < plain; ++col) {
        FpVec g = diff.col(col);
        if (!fpvec_is_zero(g)) gens.push_back(std::move(g));
      }
    }
  }
  BimoduleTensor t;
  t.dims = dims;
  t.q = quotient_by(p, plain, gens);
  t.mod.ring = ring;
  t.mod.dim = t.q.dim;
  for (std::size_t i = 0; i < ring.dim; ++i) {
    std::vector<FpMat> l, r;
    for (std::size_t s = 0; s < factors.size(); ++s) {
      l.push_back(s == 0 ? factors[s]->left[i]
                         : FpMat::identity(p, dims[s]));
      r.push_back(s + 1 == factors.size() ? factors[s]->right[i]
                                          : FpMat::identity(p, dims[s]));
    }
    t.mod.left.push_back(t.q.proj.mul(kron_chain(l)).mul(t.q.sect));
    t.mod.right.push_back(t.q.proj.mul(kron_chain(r)).mul(t.q.sect));
  }
  return t;
}

FpMat kron_chain(const std::vector<FpMat>& ms) {
  if (ms.empty()) fail(ErrorKind::Shape, "empty kron chain");
  FpMat acc = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) acc = acc.kron(ms[i]);
  return acc;
}

FpMat descend_map(const QuotientSpace& src, const QuotientSpace& dst,
                  const FpMat& plain_map) {
  if (plain_map.rows != dst.plain_dim || plain_map.cols != src.plain_dim)
    fail(ErrorKind::Shape, "plain map shape mismatch");
  for (const FpVec& g : src.gens)
    if (!fpvec_is_zero(dst.proj.apply(plain_map.apply(g))))
      fail(ErrorKind::NotBilinear,
           "map does not respect the balancing relations");
  return dst.proj.mul(plain_map).mul(src.sect);
}

FpMat unit_iso_right(const Bimodule& m, const BimoduleTensor& mr) {
  if (mr.dims.size() != 2 || mr.dims[0] != m.dim ||
      mr.dims[1] != m.ring.dim)
    fail(ErrorKind::Shape, "tensor is not of the form m (x) ring");
  Fp p = m.p();
  FpMat plain(p, m.dim, m.dim * m.ring.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.ring.dim; ++j)
      plain.set_col(i * m.ring.dim + j, m.right[j].col(i));
  for (const FpVec& g : mr.q.gens)
    if (!fpvec_is_zero(plain.apply(g)))
      fail(ErrorKind::NotBilinear, "contraction is not balanced");
  FpMat iso = plain.mul(mr.q.sect);
  if (!is_invertible(iso))
    fail(ErrorKind::NotIso, "unit contraction is not invertible");
  return iso;
}

FpMat unit_iso_left(const Bimodule& m, const BimoduleTensor& rm) {
  if (rm.dims.size() != 2 || rm.dims[0] != m.ring.dim ||
      rm.dims[1] != m.dim)
    fail(ErrorKind::Shape, "tensor is not of the form ring (x) m");
  Fp p = m.p();
  FpMat plain(p, m.dim, m.ring.dim * m.dim);
  for (std::size_t j = 0; j < m.ring.dim; ++j)
    for (std::size_t i = 0; i < m.dim; ++i)
      plain.set_col(j * m.dim + i, m.left[j].col(i));
  for (const FpVec& g : rm.q.gens)
    if (!fpvec_is_zero(plain.apply(g)))
      fail(ErrorKind::NotBilinear, "contraction is not balanced");
  FpMat iso = plain.mul(rm.q.sect);
  if (!is_invertible(iso))
    fail(ErrorKind::NotIso, "unit contraction is not invertible");
  return iso;
}

}  // namespace lucp

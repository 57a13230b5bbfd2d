#include "lucp/invertible.hpp"

#include <algorithm>
#include <string>

namespace lucp {

namespace {

FpVec coords_in_span(Fp p, const std::vector<FpMat>& span, const FpMat& m,
                     const char* what) {
  std::vector<FpVec> cols;
  for (const FpMat& b : span) cols.push_back(b.a);
  FpMat sys = mat_from_cols(p, m.rows * m.cols, cols);
  auto sol = solve_linear_system(sys, m.a);
  if (!sol) fail(ErrorKind::Internal, what);
  return sol->particular;
}

FpMat combine_mats(Fp p, const std::vector<FpMat>& basis, const FpVec& c) {
  FpMat m(p, basis[0].rows, basis[0].cols);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) m = m.add(basis[i].scale(c[i]));
  return m;
}

void check_bimodule_map(const Bimodule& src, const Bimodule& dst,
                        const FpMat& f, const char* what) {
  for (std::size_t i = 0; i < src.ring.dim; ++i) {
    if (!(f.mul(src.left[i]) == dst.left[i].mul(f)) ||
        !(f.mul(src.right[i]) == dst.right[i].mul(f)))
      fail(ErrorKind::NotBilinear, what);
  }
}

}  // namespace

void InvertibleBimodule::validate() const {
  x.validate();
  y.validate();
  const Ring& ring = x.ring;
  Bimodule reg = regular_bimodule(ring);
  if (xy.mod.dim != ring.dim || yx.mod.dim != ring.dim)
    fail(ErrorKind::NotInvertible,
         "contracted products do not have the ring dimension");
  check_bimodule_map(xy.mod, reg, l, "l is not a bimodule map");
  check_bimodule_map(yx.mod, reg, r, "r is not a bimodule map");
  if (!is_invertible(l) || !is_invertible(r))
    fail(ErrorKind::NotIso, "contraction is not invertible");
  if (!(l.mul(linv) == FpMat::identity(ring.p, ring.dim)) ||
      !(r.mul(rinv) == FpMat::identity(ring.p, ring.dim)))
    fail(ErrorKind::Internal, "cached inverses are stale");
  // a . r(b (x) a') = l(a (x) b) . a'   and   b . l(a (x) b') = r(b (x) a) . b'
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < y.dim; ++j) {
      FpVec lv = l.apply(xy.pure({x.basis(i), y.basis(j)}));
      FpVec rv = r.apply(yx.pure({y.basis(j), x.basis(i)}));
      for (std::size_t k = 0; k < x.dim; ++k) {
        FpVec lhs = x.ract(x.basis(i),
                           r.apply(yx.pure({y.basis(j), x.basis(k)})));
        if (lhs != x.lact(lv, x.basis(k)))
          fail(ErrorKind::Validation, "mixed associativity fails on x side");
      }
      for (std::size_t k = 0; k < y.dim; ++k) {
        FpVec lhs = y.ract(y.basis(j),
                           l.apply(xy.pure({x.basis(i), y.basis(k)})));
        if (lhs != y.lact(rv, y.basis(k)))
          fail(ErrorKind::Validation, "mixed associativity fails on y side");
      }
    }
}

InvertibleBimodule make_invertible(const Bimodule& x) {
  const Ring& ring = x.ring;
  Fp p = ring.p;
  Bimodule reg = regular_bimodule(ring);
  // Right dual: matrices f (ring.dim x x.dim) with f(v . b_i) = f(v) . b_i.
  std::vector<FpVec> eqs;
  FpMat eye_x = FpMat::identity(p, x.dim);
  FpMat eye_r = FpMat::identity(p, ring.dim);
  for (std::size_t i = 0; i < ring.dim; ++i) {
    FpMat diff = eye_r.kron(x.right[i].transpose())
                     .sub(ring.right_mul_matrix(ring.basis(i)).kron(eye_x));
    for (std::size_t row = 0; row < diff.rows; ++row)
      eqs.push_back(diff.row(row));
  }
  std::vector<FpMat> dual;
  for (const FpVec& k :
       kernel_basis(mat_from_rows(p, ring.dim * x.dim, eqs))) {
    FpMat f(p, ring.dim, x.dim);
    f.a = k;
    dual.push_back(f);
  }
  if (dual.empty())
    fail(ErrorKind::NotInvertible, "right dual of the module is zero");
  // Bimodule structure on the dual: (s . f)(v) = s . f(v) and
  // (f . s)(v) = f(s . v).
  Bimodule dual_mod;
  dual_mod.ring = ring;
  dual_mod.dim = dual.size();
  for (std::size_t i = 0; i < ring.dim; ++i) {
    FpMat lm(p, dual.size(), dual.size()), rm(p, dual.size(), dual.size());
    for (std::size_t a = 0; a < dual.size(); ++a) {
      lm.set_col(a, coords_in_span(
                        p, dual,
                        ring.left_mul_matrix(ring.basis(i)).mul(dual[a]),
                        "dual span is not closed under the left action"));
      rm.set_col(a, coords_in_span(
                        p, dual, dual[a].mul(x.left[i]),
                        "dual span is not closed under the right action"));
    }
    dual_mod.left.push_back(std::move(lm));
    dual_mod.right.push_back(std::move(rm));
  }
  // Unital part: the span of all right translates.
  std::vector<FpVec> translate_rows;
  for (std::size_t i = 0; i < ring.dim; ++i)
    for (std::size_t a = 0; a < dual.size(); ++a)
      translate_rows.push_back(dual_mod.right[i].col(a));
  SubBimodule cut = sub_bimodule(
      dual_mod, subspace_basis(p, dual.size(), translate_rows));
  InvertibleBimodule inv;
  inv.x = x;
  inv.y = cut.mod;
  inv.y.validate();
  std::vector<FpMat> ydual;
  for (std::size_t b = 0; b < inv.y.dim; ++b)
    ydual.push_back(combine_mats(p, dual, cut.incl.col(b)));
  inv.xy = tensor_chain({&inv.x, &inv.y});
  inv.yx = tensor_chain({&inv.y, &inv.x});
  // r is evaluation: f (x) v -> f(v).
  FpMat reval(p, ring.dim, inv.y.dim * x.dim);
  for (std::size_t b = 0; b < inv.y.dim; ++b)
    for (std::size_t i = 0; i < x.dim; ++i)
      reval.set_col(b * x.dim + i, ydual[b].col(i));
  inv.r = descend_map(inv.yx.q, QuotientSpace{p, ring.dim, ring.dim,
                                              eye_r, eye_r, {}},
                      reval);
  // Solve a . r(b (x) a') = l(a (x) b) . a' for l, adding the bimodule-map
  // constraints, and take the canonical particular solution.
  std::size_t t = inv.xy.q.dim;
  std::vector<FpVec> rows;
  FpVec rhs;
  FpMat eye_t = FpMat::identity(p, t);
  for (std::size_t i = 0; i < ring.dim; ++i) {
    FpMat cl = eye_r.kron(inv.xy.mod.left[i].transpose())
                   .sub(ring.left_mul_matrix(ring.basis(i)).kron(eye_t));
    FpMat cr = eye_r.kron(inv.xy.mod.right[i].transpose())
                   .sub(ring.right_mul_matrix(ring.basis(i)).kron(eye_t));
    for (std::size_t row = 0; row < cl.rows; ++row) {
      rows.push_back(cl.row(row));
      rhs.push_back(0);
      rows.push_back(cr.row(row));
      rhs.push_back(0);
    }
  }
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < inv.y.dim; ++j) {
      FpVec tij = inv.xy.pure({x.basis(i), inv.y.basis(j)});
      for (std::size_t k = 0; k < x.dim; ++k) {
        FpVec lhs = x.ract(x.basis(i),
                           inv.r.apply(inv.yx.pure(
                               {inv.y.basis(j), x.basis(k)})));
        // B_k rho with B_k columns the left-action images of basis k
        FpMat bk(p, x.dim, ring.dim);
        for (std::size_t m = 0; m < ring.dim; ++m)
          bk.set_col(m, x.left[m].col(k));
        FpMat tr(p, 1, t);
        for (std::size_t c = 0; c < t; ++c) tr.at(0, c) = tij[c];
        FpMat block = bk.kron(tr);  // x.dim rows, ring.dim * t cols
        for (std::size_t row = 0; row < block.rows; ++row) {
          rows.push_back(block.row(row));
          rhs.push_back(lhs[row]);
        }
      }
    }
  auto sol = solve_linear_system(
      mat_from_rows(p, ring.dim * t, rows), rhs);
  if (!sol)
    fail(ErrorKind::NotInvertible,
         "mixed associativity has no solution; module is not invertible");
  inv.l = FpMat(p, ring.dim, t);
  inv.l.a = sol->particular;
  auto li = inverse(inv.l);
  auto ri = inverse(inv.r);
  if (!li || !ri)
    fail(ErrorKind::NotInvertible, "contraction maps are not invertible");
  inv.linv = *li;
  inv.rinv = *ri;
  inv.validate();
  return inv;
}

InvertibleBimodule make_invertible_with(const Bimodule& x, const Bimodule& y,
                                        const FpMat& l, const FpMat& r) {
  InvertibleBimodule inv;
  inv.x = x;
  inv.y = y;
  inv.xy = tensor_chain({&inv.x, &inv.y});
  inv.yx = tensor_chain({&inv.y, &inv.x});
  inv.l = l;
  inv.r = r;
  auto li = inverse(l);
  auto ri = inverse(r);
  if (!li || !ri)
    fail(ErrorKind::NotIso, "contraction maps are not invertible");
  inv.linv = *li;
  inv.rinv = *ri;
  inv.validate();
  return inv;
}

std::vector<std::pair<FpVec, FpVec>> unit_decomposition(
    const InvertibleBimodule& inv, const FpVec& e) {
  const Ring& ring = inv.x.ring;
  if (std::find(ring.units.begin(), ring.units.end(), e) ==
      ring.units.end())
    fail(ErrorKind::Shape, "decomposition target must be a listed unit");
  FpVec tau = inv.linv.apply(e);
  FpVec w = inv.xy.q.sect.apply(tau);
  FpMat le = inv.x.left_action(e);
  FpMat re = inv.y.right_action(e);
  std::size_t dy = inv.y.dim;
  std::vector<std::pair<FpVec, FpVec>> pairs;
  for (std::size_t a = 0; a < inv.x.dim; ++a) {
    FpVec ypart(dy, 0);
    for (std::size_t b = 0; b < dy; ++b) ypart[b] = w[a * dy + b];
    FpVec xv = le.col(a);
    FpVec yv = re.apply(ypart);
    if (fpvec_is_zero(xv) || fpvec_is_zero(yv)) continue;
    pairs.emplace_back(std::move(xv), std::move(yv));
  }
  FpVec total = ring.zero();
  for (const auto& [xv, yv] : pairs) {
    FpVec c = inv.l.apply(inv.xy.pure({xv, yv}));
    for (std::size_t i = 0; i < ring.dim; ++i)
      total[i] = fp_add(total[i], c[i], ring.p);
  }
  if (total != e)
    fail(ErrorKind::Internal, "unit decomposition does not contract back");
  return pairs;
}

FpMat act_by_central_unit(const FpMat& u, const Bimodule& m) {
  FpMat out(m.p(), m.dim, m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    FpVec e = m.unit_for({m.basis(i)});
    out.set_col(i, m.lact(u.apply(e), m.basis(i)));
  }
  return out;
}

FpMat central_unit_of_automorphism(const InvertibleBimodule& inv,
                                   const FpMat& sigma) {
  const Bimodule& x = inv.x;
  const Ring& ring = x.ring;
  if (!is_invertible(sigma))
    fail(ErrorKind::NotAutomorphism, "map is not invertible");
  for (std::size_t i = 0; i < ring.dim; ++i)
    if (!(sigma.mul(x.left[i]) == x.left[i].mul(sigma)) ||
        !(sigma.mul(x.right[i]) == x.right[i].mul(sigma)))
      fail(ErrorKind::NotAutomorphism,
           "map does not commute with the actions");
  FpMat tilde(ring.p, ring.dim, ring.dim);
  for (std::size_t i = 0; i < ring.dim; ++i) {
    FpVec e = ring.unit_for({ring.basis(i)});
    FpVec c = ring.zero();
    for (const auto& [xv, yv] : unit_decomposition(inv, e)) {
      FpVec piece = inv.l.apply(inv.xy.pure({sigma.apply(xv), yv}));
      for (std::size_t j = 0; j < ring.dim; ++j)
        c[j] = fp_add(c[j], piece[j], ring.p);
    }
    tilde.set_col(i, ring.mul(c, ring.basis(i)));
  }
  for (std::size_t i = 0; i < ring.dim; ++i)
    if (!(tilde.mul(ring.left_mul_matrix(ring.basis(i))) ==
          ring.left_mul_matrix(ring.basis(i)).mul(tilde)) ||
        !(tilde.mul(ring.right_mul_matrix(ring.basis(i))) ==
          ring.right_mul_matrix(ring.basis(i)).mul(tilde)))
      fail(ErrorKind::Internal, "induced unit is not central");
  if (!is_invertible(tilde))
    fail(ErrorKind::Internal, "induced central element is not a unit");
  if (!(act_by_central_unit(tilde, x) == sigma))
    fail(ErrorKind::Internal,
         "central unit does not reproduce the automorphism");
  return tilde;
}

FpMat conjugate_central_unit(const InvertibleBimodule& inv, const FpMat& u) {
  const Ring& ring = inv.x.ring;
  std::vector<FpVec> all;
  for (std::size_t i = 0; i < ring.dim; ++i) all.push_back(ring.basis(i));
  FpVec estar = ring.unit_for(all);
  auto pairs = unit_decomposition(inv, estar);
  // common unit absorbing every component of every pair
  FpVec e1;
  bool found = false;
  for (const FpVec& cand : ring.units) {
    bool ok = true;
    for (const auto& [xv, yv] : pairs)
      if (!inv.x.absorbed_by(cand, xv) || !inv.y.absorbed_by(cand, yv)) {
        ok = false;
        break;
      }
    if (ok) {
      e1 = cand;
      found = true;
      break;
    }
  }
  if (!found)
    fail(ErrorKind::NoCommonUnit,
         "no listed unit absorbs all decomposition components");
  FpVec c = ring.zero();
  for (const auto& [xv, yv] : pairs) {
    FpVec piece =
        inv.l.apply(inv.xy.pure({inv.x.ract(xv, u.apply(e1)), yv}));
    for (std::size_t j = 0; j < ring.dim; ++j)
      c[j] = fp_add(c[j], piece[j], ring.p);
  }
  FpMat out = ring.right_mul_matrix(c);
  for (std::size_t i = 0; i < ring.dim; ++i)
    if (!(out.mul(ring.left_mul_matrix(ring.basis(i))) ==
          ring.left_mul_matrix(ring.basis(i)).mul(out)) ||
        !(out.mul(ring.right_mul_matrix(ring.basis(i))) ==
          ring.right_mul_matrix(ring.basis(i)).mul(out)))
      fail(ErrorKind::Internal, "conjugated element is not central");
  if (!is_invertible(out))
    fail(ErrorKind::NotInvertible, "conjugated central element is not a unit");
  return out;
}

InvertibleBimodule regular_invertible(const Ring& r) {
  return make_invertible(regular_bimodule(r));
}

InvertibleBimodule tensor_invertible(const InvertibleBimodule& a,
                                     const InvertibleBimodule& b) {
  BimoduleTensor t = tensor_chain({&a.x, &b.x});
  return make_invertible(t.mod);
}

bool is_z_symmetric(const Center& z, const Bimodule& x) {
  for (const FpMat& zb : z.basis)
    for (std::size_t i = 0; i < x.dim; ++i) {
      FpVec e = x.unit_for({x.basis(i)});
      if (x.lact(zb.apply(e), x.basis(i)) !=
          x.ract(x.basis(i), zb.apply(e)))
        return false;
    }
  return true;
}

}  // namespace lucp

#include "lucp/invariants.hpp"

#include <string>

namespace lucp {

FpMat InvariantsModule::from_coords(const FpVec& c) const {
  if (c.size() != basis.size())
    fail(ErrorKind::Shape, "coordinate length mismatch");
  FpMat out(p, mod_dim, ring_dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) out = out.add(basis[i].scale(c[i]));
  return out;
}

FpVec InvariantsModule::to_coords(const FpMat& f) const {
  std::vector<FpVec> cols;
  for (const FpMat& b : basis) cols.push_back(b.a);
  FpMat sys = mat_from_cols(p, mod_dim * ring_dim, cols);
  auto sol = solve_linear_system(sys, f.a);
  if (!sol)
    fail(ErrorKind::NoRepresentative,
         "map is not in the invariants space");
  return sol->particular;
}

FpMat InvariantsModule::precompose_action(const FpMat& z) const {
  FpMat out(p, basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    out.set_col(j, to_coords(basis[j].mul(z)));
  return out;
}

InvariantsModule invariants(const Ring& r, const Bimodule& m) {
  InvariantsModule inv;
  inv.p = r.p;
  inv.ring_dim = r.dim;
  inv.mod_dim = m.dim;
  inv.basis = hom_space(regular_bimodule(r), m);
  return inv;
}

EvaluationResult evaluation_map(const Ring& r, const Center& z,
                                const Bimodule& m) {
  InvariantsModule inv = invariants(r, m);
  std::size_t k = inv.dim();
  std::size_t plain = r.dim * k;
  Fp p = r.p;
  // balancing: (z . b_i) (x) f_a - b_i (x) (f_a o z) per commutant basis z
  std::vector<FpVec> gens;
  FpMat eye_k = FpMat::identity(p, k);
  FpMat eye_r = FpMat::identity(p, r.dim);
  for (const FpMat& zb : z.basis) {
    FpMat diff =
        zb.kron(eye_k).sub(eye_r.kron(inv.precompose_action(zb)));
    for (std::size_t col = 0; col < plain; ++col) {
      FpVec g = diff.col(col);
      if (!fpvec_is_zero(g)) gens.push_back(std::move(g));
    }
  }
  EvaluationResult out;
  out.q = quotient_by(p, plain, gens);
  out.mod.ring = r;
  out.mod.dim = out.q.dim;
  for (std::size_t i = 0; i < r.dim; ++i) {
    FpMat l = r.left_mul_matrix(r.basis(i)).kron(eye_k);
    FpMat rr = r.right_mul_matrix(r.basis(i)).kron(eye_k);
    out.mod.left.push_back(out.q.proj.mul(l).mul(out.q.sect));
    out.mod.right.push_back(out.q.proj.mul(rr).mul(out.q.sect));
  }
  // evaluation on plain coordinates: (i, a) -> f_a(b_i)
  FpMat plain_eval(p, m.dim, plain);
  for (std::size_t i = 0; i < r.dim; ++i)
    for (std::size_t a = 0; a < k; ++a)
      plain_eval.set_col(i * k + a, inv.basis[a].col(i));
  for (const FpVec& g : out.q.gens)
    if (!fpvec_is_zero(plain_eval.apply(g)))
      fail(ErrorKind::Internal, "evaluation is not balanced");
  out.eval = plain_eval.mul(out.q.sect);
  out.iso = out.mod.dim == m.dim && is_invertible(out.eval);
  return out;
}

ComparisonResult comparison_map(const Ring& r, const Center& z,
                                const Bimodule& m, const Bimodule& n,
                                const BimoduleTensor& mn,
                                const InvariantsModule& minv,
                                const InvariantsModule& ninv,
                                const InvariantsModule& mninv) {
  Fp p = r.p;
  std::size_t km = minv.dim(), kn = ninv.dim();
  std::size_t plain = km * kn;
  // balancing: (f o z) (x) g - f (x) (g o z)
  std::vector<FpVec> gens;
  FpMat eye_m = FpMat::identity(p, km), eye_n = FpMat::identity(p, kn);
  for (const FpMat& zb : z.basis) {
    FpMat diff = minv.precompose_action(zb).kron(eye_n).sub(
        eye_m.kron(ninv.precompose_action(zb)));
    for (std::size_t col = 0; col < plain; ++col) {
      FpVec g = diff.col(col);
      if (!fpvec_is_zero(g)) gens.push_back(std::move(g));
    }
  }
  ComparisonResult out;
  out.src = quotient_by(p, plain, gens);
  // plain map: (a, b) -> coords of the map x -> f_a(x) (x) g_b(e_x)
  FpMat plain_map(p, mninv.dim(), plain);
  for (std::size_t a = 0; a < km; ++a)
    for (std::size_t b = 0; b < kn; ++b) {
      FpMat h(p, mn.mod.dim, r.dim);
      for (std::size_t i = 0; i < r.dim; ++i) {
        FpVec e = r.unit_for({r.basis(i)});
        h.set_col(i, mn.pure({minv.basis[a].col(i),
                              ninv.basis[b].apply(e)}));
      }
      plain_map.set_col(a * kn + b, mninv.to_coords(h));
    }
  for (const FpVec& g : out.src.gens)
    if (!fpvec_is_zero(plain_map.apply(g)))
      fail(ErrorKind::Internal, "pairing is not balanced over the commutant");
  out.map = plain_map.mul(out.src.sect);
  out.iso = out.src.dim == mninv.dim() && is_invertible(out.map);
  return out;
}

}  // namespace lucp

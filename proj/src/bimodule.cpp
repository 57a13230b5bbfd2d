#include "lucp/bimodule.hpp"

#include <functional>
#include <string>

namespace lucp {

FpMat Bimodule::left_action(const FpVec& r) const {
  if (r.size() != ring.dim) fail(ErrorKind::Shape, "ring element mismatch");
  FpMat m(p(), dim, dim);
  for (std::size_t i = 0; i < ring.dim; ++i)
    if (r[i] != 0) m = m.add(left[i].scale(r[i]));
  return m;
}

FpMat Bimodule::right_action(const FpVec& r) const {
  if (r.size() != ring.dim) fail(ErrorKind::Shape, "ring element mismatch");
  FpMat m(p(), dim, dim);
  for (std::size_t i = 0; i < ring.dim; ++i)
    if (r[i] != 0) m = m.add(right[i].scale(r[i]));
  return m;
}

FpVec Bimodule::lact(const FpVec& r, const FpVec& m) const {
  return left_action(r).apply(m);
}

FpVec Bimodule::ract(const FpVec& m, const FpVec& r) const {
  return right_action(r).apply(m);
}

bool Bimodule::absorbed_by(const FpVec& e, const FpVec& m) const {
  return lact(e, m) == m && ract(m, e) == m;
}

FpVec Bimodule::unit_for(const std::vector<FpVec>& elems) const {
  for (const FpVec& e : ring.units) {
    bool ok = true;
    for (const FpVec& m : elems)
      if (!absorbed_by(e, m)) {
        ok = false;
        break;
      }
    if (ok) return e;
  }
  fail(ErrorKind::NoCommonUnit,
       "no listed ring unit absorbs all given module elements");
}

void Bimodule::validate() const {
  std::size_t n = ring.dim;
  if (left.size() != n || right.size() != n)
    fail(ErrorKind::Shape, "action table size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (left[i].rows != dim || left[i].cols != dim ||
        right[i].rows != dim || right[i].cols != dim)
      fail(ErrorKind::Shape, "action matrix shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const FpVec& c = ring.prod[i * n + j];
      // b_i . (b_j . m) = (b_i b_j) . m
      FpMat lhs = left[i].mul(left[j]);
      FpMat sum(p(), dim, dim);
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) sum = sum.add(left[k].scale(c[k]));
      if (!(lhs == sum))
        fail(ErrorKind::Validation,
             "left action breaks on basis pair (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
      // (m . b_i) . b_j = m . (b_i b_j)
      FpMat rhs = right[j].mul(right[i]);
      FpMat rsum(p(), dim, dim);
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) rsum = rsum.add(right[k].scale(c[k]));
      if (!(rhs == rsum))
        fail(ErrorKind::Validation,
             "right action breaks on basis pair (" + std::to_string(i) +
                 "," + std::to_string(j) + ")");
      // actions commute
      if (!(left[i].mul(right[j]) == right[j].mul(left[i])))
        fail(ErrorKind::Validation,
             "left and right actions do not commute on (" +
                 std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (std::size_t k = 0; k < dim; ++k) {
    bool covered = false;
    for (const FpVec& e : ring.units)
      if (absorbed_by(e, basis(k))) {
        covered = true;
        break;
      }
    if (!covered)
      fail(ErrorKind::NoLocalUnit,
           "module basis vector " + std::to_string(k) +
               " is absorbed by no listed unit");
  }
}

Bimodule regular_bimodule(const Ring& r) {
  Bimodule m;
  m.ring = r;
  m.dim = r.dim;
  for (std::size_t i = 0; i < r.dim; ++i) {
    m.left.push_back(r.left_mul_matrix(r.basis(i)));
    m.right.push_back(r.right_mul_matrix(r.basis(i)));
  }
  return m;
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  if (!(a.ring.p == b.ring.p && a.ring.dim == b.ring.dim &&
        a.ring.prod == b.ring.prod))
    fail(ErrorKind::Shape, "summands live over different rings");
  Bimodule m;
  m.ring = a.ring;
  m.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.ring.dim; ++i) {
    FpMat l(a.p(), m.dim, m.dim), r(a.p(), m.dim, m.dim);
    for (std::size_t u = 0; u < a.dim; ++u)
      for (std::size_t v = 0; v < a.dim; ++v) {
        l.at(u, v) = a.left[i].at(u, v);
        r.at(u, v) = a.right[i].at(u, v);
      }
    for (std::size_t u = 0; u < b.dim; ++u)
      for (std::size_t v = 0; v < b.dim; ++v) {
        l.at(a.dim + u, a.dim + v) = b.left[i].at(u, v);
        r.at(a.dim + u, a.dim + v) = b.right[i].at(u, v);
      }
    m.left.push_back(std::move(l));
    m.right.push_back(std::move(r));
  }
  return m;
}

Bimodule direct_power(const Bimodule& m, std::size_t k) {
  if (k == 0) fail(ErrorKind::Shape, "power must be positive");
  Bimodule acc = m;
  for (std::size_t i = 1; i < k; ++i) acc = direct_sum(acc, m);
  return acc;
}

Bimodule twisted_regular(const Ring& r, const FpMat& alpha,
                         const FpMat& beta) {
  Bimodule m;
  m.ring = r;
  m.dim = r.dim;
  for (std::size_t i = 0; i < r.dim; ++i) {
    m.left.push_back(r.left_mul_matrix(alpha.apply(r.basis(i))));
    m.right.push_back(r.right_mul_matrix(beta.apply(r.basis(i))));
  }
  return m;
}

Bimodule restrict_scalars(const Extension& ext, const Bimodule& m) {
  if (!(m.ring.p == ext.top.p && m.ring.dim == ext.top.dim &&
        m.ring.prod == ext.top.prod))
    fail(ErrorKind::Shape, "module does not live over the extension ring");
  Bimodule out;
  out.ring = ext.base;
  out.dim = m.dim;
  for (std::size_t i = 0; i < ext.base.dim; ++i) {
    FpVec img = ext.embed(ext.base.basis(i));
    out.left.push_back(m.left_action(img));
    out.right.push_back(m.right_action(img));
  }
  return out;
}

SubBimodule sub_bimodule(const Bimodule& m, const FpMat& span_rows) {
  FpMat basis = subspace_basis(m.p(), m.dim, [&] {
    std::vector<FpVec> rows;
    for (std::size_t i = 0; i < span_rows.rows; ++i)
      rows.push_back(span_rows.row(i));
    return rows;
  }());
  std::size_t d = basis.rows;
  SubBimodule sub;
  sub.incl = basis.transpose();  // columns = sub basis in ambient coords
  sub.mod.ring = m.ring;
  sub.mod.dim = d;
  for (std::size_t i = 0; i < m.ring.dim; ++i) {
    // invariance: action of each ring basis keeps the span
    FpMat limg(m.p(), m.dim, d), rimg(m.p(), m.dim, d);
    for (std::size_t j = 0; j < d; ++j) {
      FpVec lv = m.left[i].apply(basis.row(j));
      FpVec rv = m.right[i].apply(basis.row(j));
      if (!subspace_contains(basis, lv) || !subspace_contains(basis, rv))
        fail(ErrorKind::Validation,
             "span is not invariant under the ring actions");
      limg.set_col(j, lv);
      rimg.set_col(j, rv);
    }
    auto lc = solve_matrix(sub.incl, limg);
    auto rc = solve_matrix(sub.incl, rimg);
    if (!lc || !rc) fail(ErrorKind::Internal, "sub-action solve failed");
    sub.mod.left.push_back(*lc);
    sub.mod.right.push_back(*rc);
  }
  return sub;
}

std::vector<FpMat> hom_space(const Bimodule& src, const Bimodule& dst) {
  if (!(src.ring.p == dst.ring.p && src.ring.dim == dst.ring.dim &&
        src.ring.prod == dst.ring.prod))
    fail(ErrorKind::Shape, "modules live over different rings");
  Fp p = src.p();
  std::size_t n = src.ring.dim;
  FpMat eye_s = FpMat::identity(p, src.dim);
  FpMat eye_d = FpMat::identity(p, dst.dim);
  std::vector<FpVec> eqs;
  // H src.left[i] = dst.left[i] H, row-major vec: (I (x) A^T - B (x) I)
  for (std::size_t i = 0; i < n; ++i) {
    FpMat l = eye_d.kron(src.left[i].transpose())
                  .sub(dst.left[i].kron(eye_s));
    FpMat r = eye_d.kron(src.right[i].transpose())
                  .sub(dst.right[i].kron(eye_s));
    for (std::size_t row = 0; row < l.rows; ++row) {
      eqs.push_back(l.row(row));
      eqs.push_back(r.row(row));
    }
  }
  FpMat sys = mat_from_rows(p, dst.dim * src.dim, eqs);
  std::vector<FpMat> out;
  for (const FpVec& k : kernel_basis(sys)) {
    FpMat h(p, dst.dim, src.dim);
    h.a = k;
    out.push_back(h);
  }
  return out;
}

namespace {

FpMat combine(Fp p, const std::vector<FpMat>& basis, const FpVec& c) {
  FpMat m(p, basis[0].rows, basis[0].cols);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) m = m.add(basis[i].scale(c[i]));
  return m;
}

// Visit coefficient vectors over the hom basis: all of them when the count
// fits under exhaustive_cap, otherwise sample_cap random draws. Returns true
// when the whole space was visited.
bool visit_coeffs(Fp p, std::size_t k, Rng& rng, std::uint64_t sample_cap,
                  std::uint64_t exhaustive_cap,
                  const std::function<bool(const FpVec&)>& body) {
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < k; ++i) {
    total *= p;
    if (total > exhaustive_cap) {
      exhaustive = false;
      break;
    }
  }
  if (exhaustive) {
    FpVec c(k, 0);
    for (std::uint64_t n = 0; n < total; ++n) {
      std::uint64_t rem = n;
      for (std::size_t i = 0; i < k; ++i) {
        c[i] = static_cast<Fp>(rem % p);
        rem /= p;
      }
      if (body(c)) return true;
    }
    return true;
  }
  FpVec c(k, 0);
  for (std::uint64_t t = 0; t < sample_cap; ++t) {
    for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Fp>(rng.below(p));
    if (body(c)) return false;
  }
  return false;
}

}  // namespace

IsoSearch find_iso(const Bimodule& src, const Bimodule& dst, Rng& rng,
                   std::uint64_t sample_cap, std::uint64_t exhaustive_cap) {
  IsoSearch out;
  if (src.dim != dst.dim) {
    out.exhausted = true;
    return out;
  }
  std::vector<FpMat> h = hom_space(src, dst);
  if (h.empty()) {
    out.exhausted = true;
    return out;
  }
  Fp p = src.p();
  out.exhausted = visit_coeffs(
      p, h.size(), rng, sample_cap, exhaustive_cap, [&](const FpVec& c) {
        FpMat m = combine(p, h, c);
        if (is_invertible(m)) {
          out.iso = m;
          return true;
        }
        return false;
      });
  if (out.iso) out.exhausted = true;
  return out;
}

SummandWitness summand_of_power(const Bimodule& m, const Bimodule& n,
                                std::size_t max_copies, Rng& rng,
                                std::uint64_t sample_cap,
                                std::uint64_t exhaustive_cap) {
  SummandWitness w;
  bool all_exhaustive = true;
  for (std::size_t k = 1; k <= max_copies; ++k) {
    Bimodule nk = direct_power(n, k);
    if (nk.dim < m.dim) continue;
    std::vector<FpMat> down = hom_space(nk, m);
    std::vector<FpMat> up = hom_space(m, nk);
    if (down.empty() || up.empty()) continue;
    Fp p = m.p();
    // stack the up-basis into one system: pi * (sum_j y_j up[j]) = id
    bool found = false;
    bool exhausted = visit_coeffs(
        p, down.size(), rng, sample_cap, exhaustive_cap,
        [&](const FpVec& c) {
          FpMat pi = combine(p, down, c);
          // columns: vec(pi * up[j]); rhs: vec(identity)
          std::vector<FpVec> cols;
          for (const FpMat& u : up) cols.push_back(pi.mul(u).a);
          FpMat sys = mat_from_cols(p, m.dim * m.dim, cols);
          auto sol = solve_linear_system(sys, FpMat::identity(p, m.dim).a);
          if (!sol) return false;
          w.verdict = Verdict::Pass;
          w.copies = k;
          w.proj = pi;
          w.incl = combine(p, up, sol->particular);
          found = true;
          return true;
        });
    if (found) return w;
    all_exhaustive = all_exhaustive && exhausted;
  }
  w.verdict = all_exhaustive ? Verdict::Fail : Verdict::Undecided;
  return w;
}

Verdict is_similar(const Bimodule& a, const Bimodule& b,
                   std::size_t max_copies, Rng& rng,
                   std::uint64_t sample_cap, std::uint64_t exhaustive_cap) {
  SummandWitness ab =
      summand_of_power(a, b, max_copies, rng, sample_cap, exhaustive_cap);
  if (ab.verdict == Verdict::Fail) return Verdict::Fail;
  SummandWitness ba =
      summand_of_power(b, a, max_copies, rng, sample_cap, exhaustive_cap);
  if (ba.verdict == Verdict::Fail) return Verdict::Fail;
  if (ab.verdict == Verdict::Pass && ba.verdict == Verdict::Pass)
    return Verdict::Pass;
  return Verdict::Undecided;
}

}  // namespace lucp

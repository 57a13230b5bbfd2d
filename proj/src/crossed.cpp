#include "lucp/crossed.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace lucp {
namespace {

std::string idx2(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

std::string idx3(std::size_t x, std::size_t y, std::size_t z) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " +
         std::to_string(z) + ")";
}

bool is_bimodule_map(const Bimodule& src, const Bimodule& dst,
                     const FpMat& f) {
  if (f.rows != dst.dim || f.cols != src.dim) return false;
  for (std::size_t i = 0; i < src.ring.dim; ++i) {
    if (!(f.mul(src.left[i]) == dst.left[i].mul(f))) return false;
    if (!(f.mul(src.right[i]) == dst.right[i].mul(f))) return false;
  }
  return true;
}

}  // namespace

FpMat FactorMap::assoc_left(std::size_t x, std::size_t y, std::size_t z,
                            const BimoduleTensor& triple) const {
  std::size_t xy = g.mul(x, y);
  FpMat head = f[x][y].mul(pair[x][y].q.proj)
                   .kron(FpMat::identity(ring.p, slot(z).dim));
  return f[xy][z].mul(descend_map(triple.q, pair[xy][z].q, head));
}

FpMat FactorMap::assoc_right(std::size_t x, std::size_t y, std::size_t z,
                             const BimoduleTensor& triple) const {
  std::size_t yz = g.mul(y, z);
  FpMat tail = FpMat::identity(ring.p, slot(x).dim)
                   .kron(f[y][z].mul(pair[y][z].q.proj));
  return f[x][yz].mul(descend_map(triple.q, pair[x][yz].q, tail));
}

FactorMap make_factor_map(const Ring& r, const FiniteGroupTable& g,
                          const std::vector<Bimodule>& slots,
                          const std::vector<std::vector<FpMat>>& maps,
                          const FpMat& iota, bool require_assoc) {
  if (slots.size() != g.n || maps.size() != g.n)
    fail(ErrorKind::Shape,
         "system needs one slot and one pairing row per group element");
  for (const auto& row : maps)
    if (row.size() != g.n)
      fail(ErrorKind::Shape, "pairing table is not square");
  FactorMap fm;
  fm.ring = r;
  fm.g = g;
  for (std::size_t x = 0; x < g.n; ++x)
    fm.theta.push_back(make_invertible(slots[x]));
  fm.pair.resize(g.n);
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y)
      fm.pair[x].push_back(tensor_chain({&fm.theta[x].x, &fm.theta[y].x}));
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y) {
      std::size_t xy = g.mul(x, y);
      const FpMat& fmap = maps[x][y];
      if (fmap.rows != slots[xy].dim || fmap.cols != fm.pair[x][y].q.dim)
        fail(ErrorKind::Shape, "pairing at " + idx2(x, y) + " has wrong shape");
      if (!is_bimodule_map(fm.pair[x][y].mod, slots[xy], fmap))
        fail(ErrorKind::NotIso,
             "pairing at " + idx2(x, y) + " is not a map of bimodules");
      if (!is_invertible(fmap))
        fail(ErrorKind::NotIso,
             "pairing at " + idx2(x, y) + " is not invertible");
    }
  fm.f = maps;
  std::size_t e = g.identity;
  Bimodule reg = regular_bimodule(r);
  if (iota.rows != slots[e].dim || iota.cols != r.dim)
    fail(ErrorKind::Shape, "identity slot identification has wrong shape");
  if (!is_bimodule_map(reg, slots[e], iota) || !is_invertible(iota))
    fail(ErrorKind::NotIso,
         "ring does not map isomorphically onto the identity slot");
  fm.iota = iota;
  // unit triangles: pairing against the embedded ring must match the
  // canonical unit isomorphisms on either side
  for (std::size_t x = 0; x < g.n; ++x) {
    FpMat id = FpMat::identity(r.p, slots[x].dim);
    BimoduleTensor xr = tensor_chain({&fm.theta[x].x, &reg});
    FpMat via = fm.f[x][e].mul(descend_map(xr.q, fm.pair[x][e].q,
                                           id.kron(iota)));
    if (!(via == unit_iso_right(fm.theta[x].x, xr)))
      fail(ErrorKind::UnitFail,
           "right unit triangle fails at slot " + std::to_string(x));
    BimoduleTensor rx = tensor_chain({&reg, &fm.theta[x].x});
    FpMat via2 = fm.f[e][x].mul(descend_map(rx.q, fm.pair[e][x].q,
                                            iota.kron(id)));
    if (!(via2 == unit_iso_left(fm.theta[x].x, rx)))
      fail(ErrorKind::UnitFail,
           "left unit triangle fails at slot " + std::to_string(x));
  }
  fm.associative = true;
  std::size_t bx = 0, by = 0, bz = 0;
  for (std::size_t x = 0; x < g.n && fm.associative; ++x)
    for (std::size_t y = 0; y < g.n && fm.associative; ++y)
      for (std::size_t z = 0; z < g.n && fm.associative; ++z) {
        BimoduleTensor triple = tensor_chain(
            {&fm.theta[x].x, &fm.theta[y].x, &fm.theta[z].x});
        if (!(fm.assoc_left(x, y, z, triple) ==
              fm.assoc_right(x, y, z, triple))) {
          fm.associative = false;
          bx = x;
          by = y;
          bz = z;
        }
      }
  if (require_assoc && !fm.associative)
    fail(ErrorKind::AssocFail,
         "associativity square fails at " + idx3(bx, by, bz));
  return fm;
}

FactorMap skew_factor_map(const Ring& r, const FiniteGroupTable& g,
                          const std::vector<FpMat>& auts) {
  if (auts.size() != g.n)
    fail(ErrorKind::Shape, "one ring automorphism per group element");
  FpMat id = FpMat::identity(r.p, r.dim);
  if (!(auts[g.identity] == id))
    fail(ErrorKind::NotRRingAut,
         "group identity must act as the identity automorphism");
  for (std::size_t x = 0; x < g.n; ++x) {
    const FpMat& a = auts[x];
    if (a.rows != r.dim || a.cols != r.dim || !is_invertible(a))
      fail(ErrorKind::NotRRingAut,
           "automorphism " + std::to_string(x) + " is not invertible");
    for (std::size_t i = 0; i < r.dim; ++i)
      for (std::size_t j = 0; j < r.dim; ++j)
        if (!(a.apply(r.mul(r.basis(i), r.basis(j))) ==
              r.mul(a.apply(r.basis(i)), a.apply(r.basis(j)))))
          fail(ErrorKind::NotRRingAut,
               "automorphism " + std::to_string(x) + " is not multiplicative");
    for (const FpVec& u : r.units)
      if (std::find(r.units.begin(), r.units.end(), a.apply(u)) ==
          r.units.end())
        fail(ErrorKind::UnitSetMismatch,
             "automorphism " + std::to_string(x) +
                 " does not preserve the unit list");
  }
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y)
      if (!(auts[g.mul(x, y)] == auts[x].mul(auts[y])))
        fail(ErrorKind::NotRRingAut,
             "automorphism family is not a homomorphism at " + idx2(x, y));
  std::vector<Bimodule> slots;
  for (std::size_t x = 0; x < g.n; ++x)
    slots.push_back(twisted_regular(r, id, auts[x]));
  // pairing r (x) s -> r . x(s) on tensor coordinates
  std::vector<std::vector<FpMat>> maps(g.n);
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y) {
      BimoduleTensor pr = tensor_chain({&slots[x], &slots[y]});
      std::vector<FpVec> cols;
      for (std::size_t i = 0; i < r.dim; ++i)
        for (std::size_t j = 0; j < r.dim; ++j)
          cols.push_back(r.mul(r.basis(i), auts[x].apply(r.basis(j))));
      FpMat plain = mat_from_cols(r.p, r.dim, cols);
      maps[x].push_back(plain.mul(pr.q.sect));
    }
  return make_factor_map(r, g, slots, maps, id, true);
}

CrossedProduct build_crossed_product(const FactorMap& fm) {
  if (!fm.associative)
    fail(ErrorKind::NonAssociative,
         "crossed product needs an associative system");
  CrossedProduct cp;
  cp.g = fm.g;
  cp.fm = fm;
  std::size_t total = 0;
  for (std::size_t x = 0; x < fm.g.n; ++x) {
    cp.offset.push_back(total);
    total += fm.slot(x).dim;
    for (std::size_t i = 0; i < fm.slot(x).dim; ++i) cp.degree.push_back(x);
  }
  std::vector<FpVec> prod(total * total, FpVec(total, 0));
  for (std::size_t x = 0; x < fm.g.n; ++x)
    for (std::size_t y = 0; y < fm.g.n; ++y) {
      std::size_t xy = fm.g.mul(x, y);
      std::vector<FpVec> span;
      for (std::size_t i = 0; i < fm.slot(x).dim; ++i)
        for (std::size_t j = 0; j < fm.slot(y).dim; ++j) {
          FpVec val = fm.f[x][y].apply(
              fm.pair[x][y].pure({fm.slot(x).basis(i), fm.slot(y).basis(j)}));
          span.push_back(val);
          FpVec full(total, 0);
          for (std::size_t k = 0; k < val.size(); ++k)
            full[cp.offset[xy] + k] = val[k];
          prod[(cp.offset[x] + i) * total + (cp.offset[y] + j)] = full;
        }
      // graded pieces multiply onto the whole target slot
      if (subspace_basis(fm.ring.p, fm.slot(xy).dim, span).rows !=
          fm.slot(xy).dim)
        fail(ErrorKind::Internal,
             "graded product fails to span the slot at " + idx2(x, y));
    }
  std::vector<FpVec> units;
  for (const FpVec& u : fm.ring.units) {
    FpVec full(total, 0);
    FpVec iu = fm.iota.apply(u);
    for (std::size_t k = 0; k < iu.size(); ++k)
      full[cp.offset[fm.g.identity] + k] = iu[k];
    units.push_back(full);
  }
  cp.ring = make_ring(fm.ring.p, total, prod, units);
  return cp;
}

AbelianGroup::Elem UnitsComplex::exponents_of(const FpMat& u) const {
  return units.structure.coords_of[units.index_of(u)];
}

FpMat UnitsComplex::unit_of(const AbelianGroup::Elem& e) const {
  return units.elements[units.structure.rep_of(
      units.structure.shape.reduce(e))];
}

UnitsComplex units_cohomology_complex(const FactorMap& fm) {
  UnitsComplex uc;
  uc.units = central_units(fm.ring);
  std::vector<std::vector<std::size_t>> perms(fm.g.n);
  for (std::size_t x = 0; x < fm.g.n; ++x)
    for (std::size_t i = 0; i < uc.units.size(); ++i)
      perms[x].push_back(uc.units.index_of(
          conjugate_central_unit(fm.theta[x], uc.units.elements[i])));
  uc.cx = make_twisted_complex(fm.g, uc.units.structure, perms);
  return uc;
}

Cochain obstruction_three_cocycle(const FactorMap& fm,
                                  const UnitsComplex& uc) {
  Cochain c = zero_cochain(uc.cx, 3);
  for (std::size_t x : uc.cx.nonid)
    for (std::size_t y : uc.cx.nonid)
      for (std::size_t z : uc.cx.nonid) {
        BimoduleTensor triple = tensor_chain(
            {&fm.theta[x].x, &fm.theta[y].x, &fm.theta[z].x});
        FpMat left = fm.assoc_left(x, y, z, triple);
        std::optional<FpMat> rinv = inverse(fm.assoc_right(x, y, z, triple));
        if (!rinv)
          fail(ErrorKind::NoSolution,
               "association through the inner pairing is not invertible at " +
                   idx3(x, y, z));
        FpMat alpha = left.mul(*rinv);
        std::size_t xyz = fm.g.mul(fm.g.mul(x, y), z);
        FpMat tilde = central_unit_of_automorphism(fm.theta[xyz], alpha);
        set_cochain_value(uc.cx, c, {x, y, z},
                          uc.cx.coeff.neg(uc.exponents_of(tilde)));
      }
  if (!is_cocycle(uc.cx, c))
    fail(ErrorKind::NotACocycle, "obstruction fails the cocycle identity");
  return c;
}

Cochain comparison_two_cocycle(const FactorMap& base, const FactorMap& other,
                               const std::vector<FpMat>& a,
                               const UnitsComplex& uc) {
  const FiniteGroupTable& g = base.g;
  if (other.g.n != g.n || other.g.table != g.table)
    fail(ErrorKind::Shape, "systems live over different groups");
  if (a.size() != g.n)
    fail(ErrorKind::Shape, "one slot comparison per group element");
  std::vector<FpMat> ax = a;
  ax[g.identity] = base.iota.mul(*inverse(other.iota));
  for (std::size_t x = 0; x < g.n; ++x)
    if (!is_bimodule_map(other.slot(x), base.slot(x), ax[x]) ||
        !is_invertible(ax[x]))
      fail(ErrorKind::NotIso, "slot comparison " + std::to_string(x) +
                                  " is not an isomorphism");
  Cochain c = zero_cochain(uc.cx, 2);
  for (std::size_t x : uc.cx.nonid)
    for (std::size_t y : uc.cx.nonid) {
      std::size_t xy = g.mul(x, y);
      FpMat down = descend_map(other.pair[x][y].q, base.pair[x][y].q,
                               ax[x].kron(ax[y]));
      FpMat lhs = ax[xy].mul(other.f[x][y]);
      std::optional<FpMat> rinv = inverse(base.f[x][y].mul(down));
      if (!rinv)
        fail(ErrorKind::NoSolution,
             "comparison square is not invertible at " + idx2(x, y));
      FpMat tau = lhs.mul(*rinv);
      FpMat tilde = central_unit_of_automorphism(base.theta[xy], tau);
      set_cochain_value(uc.cx, c, {x, y}, uc.exponents_of(tilde));
    }
  if (!is_cocycle(uc.cx, c))
    fail(ErrorKind::NotACocycle, "comparison fails the cocycle identity");
  return c;
}

FactorMap twist_by_two_cochain(const FactorMap& fm, const Cochain& sigma,
                               const UnitsComplex& uc) {
  if (sigma.degree != 2)
    fail(ErrorKind::Shape, "twisting needs a degree two cochain");
  std::vector<Bimodule> slots;
  for (std::size_t x = 0; x < fm.g.n; ++x) slots.push_back(fm.theta[x].x);
  std::vector<std::vector<FpMat>> maps(fm.g.n);
  for (std::size_t x = 0; x < fm.g.n; ++x)
    for (std::size_t y = 0; y < fm.g.n; ++y) {
      FpMat u = uc.unit_of(cochain_value(uc.cx, sigma, {x, y}));
      maps[x].push_back(
          act_by_central_unit(u, fm.slot(fm.g.mul(x, y))).mul(fm.f[x][y]));
    }
  return make_factor_map(fm.ring, fm.g, slots, maps, fm.iota, false);
}

FpMat twist_map(const Bimodule& m, const Bimodule& n,
                const BimoduleTensor& mn, const BimoduleTensor& nm,
                Rng& rng) {
  Bimodule reg = regular_bimodule(m.ring);
  std::size_t rd = m.ring.dim;
  SummandWitness w = summand_of_power(m, reg, m.dim + n.dim + 2, rng);
  if (w.verdict == Verdict::Fail)
    fail(ErrorKind::NotSummandOfFreeR,
         "reordered factor is not a summand of a free module");
  if (w.verdict != Verdict::Pass)
    fail(ErrorKind::SimilarityWitnessMissing,
         "summand search for the reordering was cut short");
  Fp p = m.p();
  FpMat plain(p, n.dim * m.dim, m.dim * n.dim);
  for (std::size_t a = 0; a < m.dim; ++a)
    for (std::size_t b = 0; b < n.dim; ++b) {
      FpVec e;
      bool found = false;
      for (const FpVec& u : m.ring.units)
        if (m.absorbed_by(u, m.basis(a)) && n.absorbed_by(u, n.basis(b))) {
          e = u;
          found = true;
          break;
        }
      if (!found)
        fail(ErrorKind::NoCommonUnit,
             "no listed unit absorbs both tensor factors");
      FpVec col(n.dim * m.dim, 0);
      for (std::size_t i = 0; i < w.copies; ++i) {
        FpVec phi(rd, 0);
        for (std::size_t k = 0; k < rd; ++k) phi[k] = w.incl.at(i * rd + k, a);
        FpVec nb = n.lact(phi, n.basis(b));
        FpVec big(w.copies * rd, 0);
        for (std::size_t k = 0; k < rd; ++k) big[i * rd + k] = e[k];
        FpVec psi = w.proj.apply(big);
        for (std::size_t bn = 0; bn < n.dim; ++bn)
          for (std::size_t am = 0; am < m.dim; ++am)
            col[bn * m.dim + am] = static_cast<Fp>(
                (col[bn * m.dim + am] +
                 static_cast<std::uint64_t>(nb[bn]) * psi[am]) %
                p);
      }
      plain.set_col(a * n.dim + b, col);
    }
  FpMat tw = descend_map(mn.q, nm.q, plain);
  if (!is_invertible(tw))
    fail(ErrorKind::Internal, "tensor reordering is not invertible");
  return tw;
}

Verdict crossed_iso_test(const FactorMap& a, const FactorMap& b, Rng& rng,
                         std::uint64_t sample_cap,
                         std::uint64_t exhaustive_cap) {
  const FiniteGroupTable& g = a.g;
  if (b.g.n != g.n || b.g.table != g.table) return Verdict::Fail;
  if (a.ring.p != b.ring.p || a.ring.dim != b.ring.dim ||
      a.ring.prod != b.ring.prod || a.ring.units != b.ring.units)
    return Verdict::Fail;
  for (std::size_t x = 0; x < g.n; ++x)
    if (a.slot(x).dim != b.slot(x).dim) return Verdict::Fail;
  std::size_t e = g.identity;
  FpMat fe = b.iota.mul(*inverse(a.iota));
  std::vector<std::size_t> free_slots;
  std::vector<std::vector<FpMat>> homs;
  for (std::size_t x = 0; x < g.n; ++x) {
    if (x == e) continue;
    std::vector<FpMat> h = hom_space(a.slot(x), b.slot(x));
    if (h.empty()) return Verdict::Fail;
    free_slots.push_back(x);
    homs.push_back(std::move(h));
  }
  std::size_t tdim = 0;
  for (const auto& h : homs) tdim += h.size();
  Fp p = a.ring.p;
  auto assemble = [&](const std::vector<Fp>& coeffs) {
    std::vector<FpMat> fx(g.n);
    fx[e] = fe;
    std::size_t at = 0;
    for (std::size_t s = 0; s < free_slots.size(); ++s) {
      std::size_t x = free_slots[s];
      FpMat sum(p, b.slot(x).dim, a.slot(x).dim);
      for (const FpMat& h : homs[s]) sum = sum.add(h.scale(coeffs[at++]));
      fx[x] = sum;
    }
    return fx;
  };
  auto check = [&](const std::vector<FpMat>& fx) {
    for (std::size_t x = 0; x < g.n; ++x)
      if (!is_invertible(fx[x])) return false;
    for (std::size_t x = 0; x < g.n; ++x)
      for (std::size_t y = 0; y < g.n; ++y) {
        std::size_t xy = g.mul(x, y);
        FpMat down = descend_map(a.pair[x][y].q, b.pair[x][y].q,
                                 fx[x].kron(fx[y]));
        if (!(b.f[x][y].mul(down) == fx[xy].mul(a.f[x][y]))) return false;
      }
    return true;
  };
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < tdim; ++i) {
    if (total > exhaustive_cap / p) {
      small = false;
      break;
    }
    total *= p;
  }
  if (small && total <= exhaustive_cap) {
    std::vector<Fp> coeffs(tdim, 0);
    while (true) {
      if (check(assemble(coeffs))) return Verdict::Pass;
      std::size_t i = 0;
      while (i < tdim && ++coeffs[i] == p) coeffs[i++] = 0;
      if (i == tdim) break;
    }
    return Verdict::Fail;
  }
  for (std::uint64_t t = 0; t < sample_cap; ++t) {
    std::vector<Fp> coeffs(tdim);
    for (Fp& c : coeffs) c = static_cast<Fp>(rng.below(p));
    if (check(assemble(coeffs))) return Verdict::Pass;
  }
  return Verdict::Undecided;
}

FactorMap triple_product_system(const FactorMap& first,
                                const FactorMap& middle,
                                const FactorMap& last, Rng& rng) {
  const Ring& r = first.ring;
  const FiniteGroupTable& g = first.g;
  if (middle.g.table != g.table || last.g.table != g.table)
    fail(ErrorKind::Shape, "systems live over different groups");
  std::vector<BimoduleTensor> chain3;
  for (std::size_t x = 0; x < g.n; ++x)
    chain3.push_back(tensor_chain({&first.slot(x),
                                   &middle.slot(g.inverse(x)),
                                   &last.slot(x)}));
  std::vector<Bimodule> slots;
  for (std::size_t x = 0; x < g.n; ++x) slots.push_back(chain3[x].mod);
  std::vector<std::vector<FpMat>> maps(g.n);
  for (std::size_t x = 0; x < g.n; ++x) maps[x].resize(g.n);
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y) {
      std::size_t xi = g.inverse(x), yi = g.inverse(y), xy = g.mul(x, y);
      FpMat fxid = FpMat::identity(r.p, first.slot(x).dim);
      FpMat lyid = FpMat::identity(r.p, last.slot(y).dim);
      BimoduleTensor pairp = tensor_chain({&slots[x], &slots[y]});
      BimoduleTensor six = tensor_chain(
          {&first.slot(x), &middle.slot(xi), &last.slot(x),
           &first.slot(y), &middle.slot(yi), &last.slot(y)});
      FpMat unpack = descend_map(pairp.q, six.q,
                                 chain3[x].q.sect.kron(chain3[y].q.sect));
      // group the middle four factors into two halves and reorder them
      BimoduleTensor mhalf = tensor_chain({&middle.slot(xi), &last.slot(x)});
      BimoduleTensor nhalf = tensor_chain({&first.slot(y), &middle.slot(yi)});
      BimoduleTensor four = tensor_chain(
          {&first.slot(x), &mhalf.mod, &nhalf.mod, &last.slot(y)});
      FpMat regroup = descend_map(
          six.q, four.q,
          kron_chain({fxid, mhalf.q.proj, nhalf.q.proj, lyid}));
      BimoduleTensor mn = tensor_chain({&mhalf.mod, &nhalf.mod});
      BimoduleTensor nm = tensor_chain({&nhalf.mod, &mhalf.mod});
      FpMat tw = twist_map(mhalf.mod, nhalf.mod, mn, nm, rng);
      BimoduleTensor four2 = tensor_chain(
          {&first.slot(x), &nhalf.mod, &mhalf.mod, &last.slot(y)});
      FpMat swap = descend_map(
          four.q, four2.q,
          kron_chain({fxid, nm.q.sect.mul(tw).mul(mn.q.proj), lyid}));
      BimoduleTensor six2 = tensor_chain(
          {&first.slot(x), &first.slot(y), &middle.slot(yi),
           &middle.slot(xi), &last.slot(x), &last.slot(y)});
      FpMat expand = descend_map(
          four2.q, six2.q,
          kron_chain({fxid, nhalf.q.sect, mhalf.q.sect, lyid}));
      FpMat triplemul = kron_chain(
          {first.f[x][y].mul(first.pair[x][y].q.proj),
           middle.f[yi][xi].mul(middle.pair[yi][xi].q.proj),
           last.f[x][y].mul(last.pair[x][y].q.proj)});
      FpMat contract = descend_map(six2.q, chain3[xy].q, triplemul);
      maps[x][y] =
          contract.mul(expand).mul(swap).mul(regroup).mul(unpack);
    }
  std::size_t e = g.identity;
  std::vector<FpVec> cols;
  for (std::size_t i = 0; i < r.dim; ++i) {
    FpVec u = r.unit_for({r.basis(i)});
    cols.push_back(chain3[e].pure({first.iota.apply(u), middle.iota.apply(u),
                                   last.iota.apply(r.basis(i))}));
  }
  FpMat iota = mat_from_cols(r.p, slots[e].dim, cols);
  bool assoc =
      first.associative && middle.associative && last.associative;
  return make_factor_map(r, g, slots, maps, iota, assoc);
}

LedgerClosure<FactorMap> crossed_class_ledger(
    const FactorMap& base, const std::vector<FactorMap>& gens, Rng& rng,
    std::size_t cap, std::uint64_t sample_cap,
    std::uint64_t exhaustive_cap) {
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const FactorMap& fm = gens[gi];
    if (fm.g.table != base.g.table || fm.ring.prod != base.ring.prod)
      fail(ErrorKind::Shape,
           "generator " + std::to_string(gi) + " lives over different data");
    for (std::size_t x = 0; x < base.g.n; ++x) {
      std::size_t copies = 1 + std::max(fm.slot(x).dim, base.slot(x).dim);
      Verdict v = is_similar(fm.slot(x), base.slot(x), copies, rng,
                             sample_cap, exhaustive_cap);
      if (v == Verdict::Fail)
        fail(ErrorKind::NotInSubgroup,
             "generator " + std::to_string(gi) + " slot " +
                 std::to_string(x) + " is not similar to the base slot");
      if (v == Verdict::Undecided)
        fail(ErrorKind::SimilarityWitnessMissing,
             "similarity search cut short for generator " +
                 std::to_string(gi));
    }
  }
  auto prod = [&](const FactorMap& u, const FactorMap& v) {
    return triple_product_system(u, base, v, rng);
  };
  auto same = [&](const FactorMap& u, const FactorMap& v) {
    return crossed_iso_test(u, v, rng, sample_cap, exhaustive_cap);
  };
  return close_ledger(base, gens, prod, same, cap);
}

ClassCohomologyBridge zeta_h2_iso(const FactorMap& base,
                                  const LedgerClosure<FactorMap>& led,
                                  const UnitsComplex& uc, Rng& rng,
                                  std::uint64_t sample_cap,
                                  std::uint64_t exhaustive_cap) {
  ClassCohomologyBridge br;
  br.h2 = cohomology(uc.cx, 2);
  if (led.verdict == Verdict::Undecided) br.verdict = Verdict::Undecided;
  for (const FactorMap& rep : led.reps) {
    std::vector<FpMat> a(base.g.n);
    bool ok = true;
    for (std::size_t x = 0; x < base.g.n; ++x) {
      if (x == base.g.identity) continue;  // pinned inside the comparison
      IsoSearch s = find_iso(rep.slot(x), base.slot(x), rng, sample_cap,
                             exhaustive_cap);
      if (!s.iso) {
        if (s.exhausted)
          fail(ErrorKind::NotIso,
               "ledger class has slot " + std::to_string(x) +
                   " not isomorphic to the base slot");
        br.verdict = Verdict::Undecided;
        ok = false;
        break;
      }
      a[x] = *s.iso;
    }
    if (!ok) {
      br.forward.push_back({});
      continue;
    }
    br.forward.push_back(br.h2.class_of(comparison_two_cocycle(
        base, rep, a, uc)));
  }
  br.elements = br.h2.group.elements(1u << 12);
  for (const AbelianGroup::Elem& el : br.elements) {
    FactorMap tw = twist_by_two_cochain(base, br.h2.representative(el), uc);
    std::size_t at = led.reps.size();
    for (std::size_t i = 0; i < led.reps.size() && at == led.reps.size();
         ++i) {
      Verdict v = crossed_iso_test(led.reps[i], tw, rng, sample_cap,
                                   exhaustive_cap);
      if (v == Verdict::Pass) at = i;
      if (v == Verdict::Undecided) br.verdict = Verdict::Undecided;
    }
    if (at == led.reps.size() && br.verdict != Verdict::Undecided)
      fail(ErrorKind::LedgerIncomplete,
           "twisted base does not match any ledger class");
    br.backward.push_back(at);
  }
  return br;
}

}  // namespace lucp

#include "lucp/cohomology.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "lucp/errors.hpp"

namespace lucp {

std::uint64_t TwistedComplex::tuple_count(std::size_t n) const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= nonid.size();
    if (total > (1u << 24))
      fail(ErrorKind::SizeCap, "tuple space too large");
  }
  return total;
}

std::vector<GTuple> TwistedComplex::tuples(std::size_t n) const {
  std::uint64_t total = tuple_count(n);
  std::vector<GTuple> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    GTuple t(n);
    std::uint64_t rem = idx;
    for (std::size_t i = n; i > 0; --i) {
      t[i - 1] = nonid[rem % nonid.size()];
      rem /= nonid.size();
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t TwistedComplex::tuple_index(const GTuple& t) const {
  std::size_t idx = 0;
  for (std::size_t x : t) {
    std::size_t pos = nonid.size();
    for (std::size_t i = 0; i < nonid.size(); ++i)
      if (nonid[i] == x) {
        pos = i;
        break;
      }
    if (pos == nonid.size())
      fail(ErrorKind::Shape, "tuple contains the identity or a bad id");
    idx = idx * nonid.size() + pos;
  }
  return idx;
}

namespace {

// entrywise congruence modulo the coefficient relations, row i mod d_i
bool congruent_rows(const AbelianGroup& coeff, const IntMat& a,
                    const IntMat& b) {
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      mpz_class d = a.at(i, j) - b.at(i, j);
      if (d % coeff.factors[i % coeff.factors.size()] != 0) return false;
    }
  return true;
}

}  // namespace

void TwistedComplex::validate() const {
  std::size_t kk = k();
  if (action.size() != g.n)
    fail(ErrorKind::Shape, "one action matrix per group element required");
  for (const IntMat& m : action)
    if (m.rows != kk || m.cols != kk)
      fail(ErrorKind::Shape, "action matrix shape mismatch");
  if (kk > 0) {
    if (!(action[g.identity] == IntMat::identity(kk)))
      fail(ErrorKind::NotAnAction, "identity must act trivially");
    for (std::size_t x = 0; x < g.n; ++x)
      for (std::size_t y = 0; y < g.n; ++y)
        if (!congruent_rows(coeff, action[x].mul(action[y]),
                            action[g.mul(x, y)]))
          fail(ErrorKind::NotAnAction,
               "action of " + std::to_string(x) + " after " +
                   std::to_string(y) + " differs from their product");
  }
  std::vector<std::size_t> expect;
  for (std::size_t x = 0; x < g.n; ++x)
    if (x != g.identity) expect.push_back(x);
  if (nonid != expect)
    fail(ErrorKind::Shape, "non-identity list must be increasing and full");
}

TwistedComplex make_twisted_complex(
    const FiniteGroupTable& g, const EnumeratedAbelianGroup& a,
    const std::vector<std::vector<std::size_t>>& perm_action) {
  std::size_t count = a.coords_of.size();
  if (perm_action.size() != g.n)
    fail(ErrorKind::Shape, "one permutation per group element required");
  for (const auto& p : perm_action) {
    if (p.size() != count)
      fail(ErrorKind::Shape, "permutation length mismatch");
    std::vector<bool> seen(count, false);
    for (std::size_t v : p) {
      if (v >= count || seen[v])
        fail(ErrorKind::NotAnAction, "entry is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t i = 0; i < count; ++i)
    if (perm_action[g.identity][i] != i)
      fail(ErrorKind::NotAnAction, "identity must act trivially");
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y)
      for (std::size_t i = 0; i < count; ++i)
        if (perm_action[x][perm_action[y][i]] !=
            perm_action[g.mul(x, y)][i])
          fail(ErrorKind::NotAnAction, "permutations do not compose");
  // each permutation must respect the group law of the coefficients
  auto mul_elems = [&](std::size_t u, std::size_t v) {
    return a.rep_of(a.shape.add(a.coords_of[u], a.coords_of[v]));
  };
  for (std::size_t x = 0; x < g.n; ++x) {
    if (perm_action[x][a.identity] != a.identity)
      fail(ErrorKind::NotAutomorphism, "action must fix the identity");
    for (std::size_t u = 0; u < count; ++u)
      for (std::size_t v = 0; v < count; ++v)
        if (perm_action[x][mul_elems(u, v)] !=
            mul_elems(perm_action[x][u], perm_action[x][v]))
          fail(ErrorKind::NotAutomorphism,
               "action of element " + std::to_string(x) +
                   " is not an automorphism");
  }
  TwistedComplex cx;
  cx.g = g;
  cx.coeff = a.shape;
  std::size_t kk = a.shape.rank();
  for (std::size_t x = 0; x < g.n; ++x) {
    IntMat t(kk, kk);
    for (std::size_t j = 0; j < kk; ++j) {
      AbelianGroup::Elem ej(kk, 0);
      ej[j] = 1;
      const AbelianGroup::Elem& img =
          a.coords_of[perm_action[x][a.rep_of(ej)]];
      for (std::size_t i = 0; i < kk; ++i) t.at(i, j) = img[i];
    }
    cx.action.push_back(std::move(t));
  }
  for (std::size_t x = 0; x < g.n; ++x)
    if (x != g.identity) cx.nonid.push_back(x);
  cx.validate();
  return cx;
}

IntMat TwistedComplex::differential(std::size_t n) const {
  std::size_t kk = k();
  std::uint64_t tn = tuple_count(n), tn1 = tuple_count(n + 1);
  IntMat d(kk * tn1, kk * tn);
  std::vector<GTuple> rows = tuples(n + 1);
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const GTuple& s = rows[ri];
    std::size_t out = ri * kk;
    auto add_block = [&](const GTuple& t, long sign, const IntMat* act) {
      for (std::size_t x : t)
        if (x == g.identity) return;  // normalized: value is zero
      std::size_t in = tuple_index(t) * kk;
      if (act) {
        for (std::size_t i = 0; i < kk; ++i)
          for (std::size_t j = 0; j < kk; ++j)
            d.at(out + i, in + j) += sign * act->at(i, j);
      } else {
        for (std::size_t i = 0; i < kk; ++i) d.at(out + i, in + i) += sign;
      }
    };
    // first entry acts on the truncated tuple
    add_block(GTuple(s.begin() + 1, s.end()), 1, &action[s[0]]);
    // inner merges with alternating signs
    long sign = -1;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      GTuple t;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j == i) {
          t.push_back(g.mul(s[i], s[i + 1]));
          ++j;
        } else {
          t.push_back(s[j]);
        }
      }
      add_block(t, sign, nullptr);
      sign = -sign;
    }
    // drop the last entry
    add_block(GTuple(s.begin(), s.end() - 1), sign, nullptr);
  }
  return d;
}

Cochain zero_cochain(const TwistedComplex& cx, std::size_t n) {
  Cochain c;
  c.degree = n;
  c.v.assign(cx.k() * cx.tuple_count(n), 0);
  return c;
}

AbelianGroup::Elem cochain_value(const TwistedComplex& cx, const Cochain& c,
                                 const GTuple& t) {
  if (t.size() != c.degree) fail(ErrorKind::Shape, "tuple arity mismatch");
  for (std::size_t x : t)
    if (x == cx.g.identity) return cx.coeff.zero();
  std::size_t off = cx.tuple_index(t) * cx.k();
  AbelianGroup::Elem e(cx.k());
  for (std::size_t i = 0; i < cx.k(); ++i) e[i] = c.v[off + i];
  return cx.coeff.reduce(std::move(e));
}

void set_cochain_value(const TwistedComplex& cx, Cochain& c, const GTuple& t,
                       const AbelianGroup::Elem& value) {
  if (t.size() != c.degree) fail(ErrorKind::Shape, "tuple arity mismatch");
  for (std::size_t x : t)
    if (x == cx.g.identity) {
      if (!cx.coeff.is_zero(value))
        fail(ErrorKind::NotNormalized,
             "identity-bearing tuples must carry the zero value");
      return;
    }
  std::size_t off = cx.tuple_index(t) * cx.k();
  AbelianGroup::Elem r = cx.coeff.reduce(value);
  for (std::size_t i = 0; i < cx.k(); ++i) c.v[off + i] = r[i];
}

Cochain apply_differential(const TwistedComplex& cx, const Cochain& c) {
  IntMat d = cx.differential(c.degree);
  std::vector<mpz_class> in(c.v.size());
  for (std::size_t i = 0; i < c.v.size(); ++i) in[i] = c.v[i];
  std::vector<mpz_class> out = d.apply(in);
  Cochain r;
  r.degree = c.degree + 1;
  r.v.resize(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i].fits_slong_p())
      fail(ErrorKind::SizeCap, "differential value exceeds int64 range");
    r.v[i] = out[i].get_si();
  }
  return reduce_cochain(cx, std::move(r));
}

Cochain reduce_cochain(const TwistedComplex& cx, Cochain c) {
  std::size_t kk = cx.k();
  for (std::size_t i = 0; i < c.v.size(); ++i) {
    std::int64_t d = cx.coeff.factors[i % kk];
    c.v[i] %= d;
    if (c.v[i] < 0) c.v[i] += d;
  }
  return c;
}

bool is_cocycle(const TwistedComplex& cx, const Cochain& c) {
  Cochain d = apply_differential(cx, c);
  for (std::int64_t x : d.v)
    if (x != 0) return false;
  return true;
}

Cochain add_cochains(const TwistedComplex& cx, const Cochain& a,
                     const Cochain& b) {
  if (a.degree != b.degree || a.v.size() != b.v.size())
    fail(ErrorKind::Shape, "cochain degree mismatch");
  Cochain c = a;
  for (std::size_t i = 0; i < c.v.size(); ++i) c.v[i] += b.v[i];
  return reduce_cochain(cx, std::move(c));
}

Cochain neg_cochain(const TwistedComplex& cx, const Cochain& a) {
  Cochain c = a;
  for (auto& x : c.v) x = -x;
  return reduce_cochain(cx, std::move(c));
}

namespace {

// columns of m, as a list of integer vectors
std::vector<std::vector<mpz_class>> columns_of(const IntMat& m) {
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::vector<mpz_class> c(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) c[i] = m.at(i, j);
    out.push_back(std::move(c));
  }
  return out;
}

// basis of the lattice generated by the given columns
IntMat lattice_basis(std::size_t rows,
                     const std::vector<std::vector<mpz_class>>& gens) {
  IntMat a(rows, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) a.at(i, j) = gens[j][i];
  SnfResult s = smith_normal_form(a);
  // column span of a = uinv applied to the span of d
  IntMat uinv = [&] {
    SnfResult us = smith_normal_form(s.u);
    return us.v.mul(us.u);
  }();
  std::size_t diag = std::min(a.rows, a.cols);
  std::vector<std::vector<mpz_class>> cols;
  for (std::size_t j = 0; j < diag; ++j) {
    if (s.d.at(j, j) == 0) continue;
    std::vector<mpz_class> c(rows);
    for (std::size_t i = 0; i < rows; ++i)
      c[i] = uinv.at(i, j) * s.d.at(j, j);
    cols.push_back(std::move(c));
  }
  IntMat out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) out.at(i, j) = cols[j][i];
  return out;
}

// integer kernel basis as columns
IntMat kernel_lattice(const IntMat& m) {
  SnfResult s = smith_normal_form(m);
  std::size_t diag = std::min(m.rows, m.cols);
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < m.cols; ++j)
    if (j >= diag || s.d.at(j, j) == 0) zero_cols.push_back(j);
  IntMat out(m.cols, zero_cols.size());
  for (std::size_t j = 0; j < zero_cols.size(); ++j)
    for (std::size_t i = 0; i < m.cols; ++i)
      out.at(i, j) = s.v.at(i, zero_cols[j]);
  return out;
}

// solve basis * y = c over the integers using the cached transforms
std::optional<std::vector<mpz_class>> solve_in_lattice(
    const IntMat& basis, const SnfResult& s,
    const std::vector<mpz_class>& c) {
  std::vector<mpz_class> uc = s.u.apply(c);
  std::size_t diag = std::min(basis.rows, basis.cols);
  std::vector<mpz_class> z(basis.cols, mpz_class(0));
  for (std::size_t i = 0; i < uc.size(); ++i) {
    if (i < diag && s.d.at(i, i) != 0) {
      if (uc[i] % s.d.at(i, i) != 0) return std::nullopt;
      z[i] = uc[i] / s.d.at(i, i);
    } else if (uc[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(z);
}

}  // namespace

AbelianGroup::Elem CohomologyGroup::class_of(const Cochain& c) const {
  if (c.degree != degree || c.v.size() != len)
    fail(ErrorKind::Shape, "cochain degree mismatch");
  std::vector<mpz_class> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = c.v[i];
  auto y = solve_in_lattice(basis, basis_snf, v);
  if (!y)
    fail(ErrorKind::NotACocycle,
         "cochain is not a cocycle at degree " + std::to_string(degree));
  std::vector<std::int64_t> word(basis.cols);
  for (std::size_t i = 0; i < basis.cols; ++i) {
    if (!(*y)[i].fits_slong_p())
      fail(ErrorKind::SizeCap, "class word exceeds int64 range");
    word[i] = (*y)[i].get_si();
  }
  return pres.coords(word);
}

Cochain CohomologyGroup::representative(const AbelianGroup::Elem& e) const {
  std::vector<std::int64_t> word = pres.lift(e);
  std::vector<mpz_class> w(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) w[i] = word[i];
  std::vector<mpz_class> c = basis.apply(w);
  Cochain out;
  out.degree = degree;
  out.v.resize(len);
  std::size_t kk = coeff.rank();
  for (std::size_t i = 0; i < len; ++i) {
    mpz_class m = c[i] % coeff.factors[i % kk];
    if (m < 0) m += coeff.factors[i % kk];
    out.v[i] = m.get_si();
  }
  return out;
}

CohomologyGroup cohomology(const TwistedComplex& cx, std::size_t n) {
  std::size_t kk = cx.k();
  std::size_t len = kk * cx.tuple_count(n);
  std::size_t len1 = kk * cx.tuple_count(n + 1);
  IntMat d = cx.differential(n);
  // cocycles: c with d c inside the coefficient relation lattice
  IntMat stacked(len1, len + len1);
  for (std::size_t i = 0; i < len1; ++i) {
    for (std::size_t j = 0; j < len; ++j) stacked.at(i, j) = d.at(i, j);
    stacked.at(i, len + i) = -cx.coeff.factors[i % kk];
  }
  IntMat ker = kernel_lattice(stacked);
  std::vector<std::vector<mpz_class>> kgens;
  for (std::size_t j = 0; j < ker.cols; ++j) {
    std::vector<mpz_class> c(len);
    for (std::size_t i = 0; i < len; ++i) c[i] = ker.at(i, j);
    kgens.push_back(std::move(c));
  }
  CohomologyGroup h;
  h.degree = n;
  h.len = len;
  h.coeff = cx.coeff;
  h.basis = lattice_basis(len, kgens);
  h.basis_snf = smith_normal_form(h.basis);
  // boundaries plus coefficient relations, written over the cocycle basis
  std::vector<std::vector<mpz_class>> bgens;
  if (n > 0) {
    IntMat dprev = cx.differential(n - 1);
    for (auto& c : columns_of(dprev)) bgens.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<mpz_class> c(len, mpz_class(0));
    c[i] = cx.coeff.factors[i % kk];
    bgens.push_back(std::move(c));
  }
  IntMat rels(bgens.size(), h.basis.cols);
  for (std::size_t bi = 0; bi < bgens.size(); ++bi) {
    auto y = solve_in_lattice(h.basis, h.basis_snf, bgens[bi]);
    if (!y)
      fail(ErrorKind::Internal,
           "boundary does not lie in the cocycle lattice");
    for (std::size_t j = 0; j < h.basis.cols; ++j) rels.at(bi, j) = (*y)[j];
  }
  h.pres = group_from_relations(h.basis.cols, rels);
  h.group = h.pres.group;
  return h;
}

}  // namespace lucp

#include "lucp/abelian.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "lucp/errors.hpp"

namespace lucp {

std::int64_t AbelianGroup::order() const {
  std::int64_t n = 1;
  for (std::int64_t d : factors) {
    if (n > (std::int64_t{1} << 40) / d)
      fail(ErrorKind::SizeCap, "abelian group order overflows working range");
    n *= d;
  }
  return n;
}

AbelianGroup::Elem AbelianGroup::reduce(Elem e) const {
  if (e.size() != factors.size())
    fail(ErrorKind::Shape, "element rank mismatch");
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] %= factors[i];
    if (e[i] < 0) e[i] += factors[i];
  }
  return e;
}

AbelianGroup::Elem AbelianGroup::add(const Elem& a, const Elem& b) const {
  if (a.size() != factors.size() || b.size() != factors.size())
    fail(ErrorKind::Shape, "element rank mismatch");
  Elem r(factors.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

AbelianGroup::Elem AbelianGroup::neg(const Elem& a) const {
  if (a.size() != factors.size())
    fail(ErrorKind::Shape, "element rank mismatch");
  Elem r(factors.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a[i];
  return reduce(std::move(r));
}

AbelianGroup::Elem AbelianGroup::sub(const Elem& a, const Elem& b) const {
  return add(a, neg(b));
}

AbelianGroup::Elem AbelianGroup::scale(std::int64_t k, const Elem& a) const {
  if (a.size() != factors.size())
    fail(ErrorKind::Shape, "element rank mismatch");
  Elem r(factors.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (k % factors[i]) * (a[i] % factors[i]);
  return reduce(std::move(r));
}

bool AbelianGroup::is_zero(const Elem& a) const {
  Elem r = reduce(a);
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t AbelianGroup::elem_order(const Elem& a) const {
  Elem r = reduce(a);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t d = factors[i] / std::gcd(factors[i], r[i]);
    ord = ord / std::gcd(ord, d) * d;
  }
  return ord;
}

std::vector<AbelianGroup::Elem> AbelianGroup::elements(
    std::uint64_t cap) const {
  if (static_cast<std::uint64_t>(order()) > cap)
    fail(ErrorKind::EnumerationCap,
         "abelian group order " + std::to_string(order()) +
             " exceeds enumeration cap " + std::to_string(cap));
  std::vector<Elem> out;
  Elem cur = zero();
  while (true) {
    out.push_back(cur);
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++cur[i] < factors[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (factors.empty()) return out;
  }
}

AbelianGroup::Elem RelPresentation::coords(
    const std::vector<std::int64_t>& word) const {
  if (word.size() != gens) fail(ErrorKind::Shape, "word length mismatch");
  std::vector<mpz_class> w(gens);
  for (std::size_t i = 0; i < gens; ++i) w[i] = word[i];
  std::vector<mpz_class> v = u.apply(w);
  AbelianGroup::Elem e(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    mpz_class m = v[kept[i]] % group.factors[i];
    if (m < 0) m += group.factors[i];
    e[i] = m.get_si();
  }
  return e;
}

std::vector<std::int64_t> RelPresentation::lift(
    const AbelianGroup::Elem& e) const {
  if (e.size() != kept.size()) fail(ErrorKind::Shape, "element rank mismatch");
  std::vector<mpz_class> v(gens, mpz_class(0));
  for (std::size_t i = 0; i < kept.size(); ++i) v[kept[i]] = e[i];
  std::vector<mpz_class> w = uinv.apply(v);
  std::vector<std::int64_t> out(gens);
  for (std::size_t i = 0; i < gens; ++i) {
    if (!w[i].fits_slong_p())
      fail(ErrorKind::SizeCap, "lifted word exceeds int64 range");
    out[i] = w[i].get_si();
  }
  return out;
}

// Inverts a unimodular integer matrix via its Smith transforms: if P A Q = I
// then A^{-1} = Q P.
static IntMat unimodular_inverse(const IntMat& a) {
  SnfResult s = smith_normal_form(a);
  for (std::size_t i = 0; i < a.rows; ++i)
    if (s.d.at(i, i) != 1)
      fail(ErrorKind::Internal, "matrix is not unimodular");
  return s.v.mul(s.u);
}

RelPresentation group_from_relations(std::size_t gens, const IntMat& rels) {
  if (rels.rows > 0 && rels.cols != gens)
    fail(ErrorKind::Shape, "relation width does not match generator count");
  // Column-relations convention: quotient Z^gens by the column span of
  // rels^T. With D = U M V the map w -> U w carries the quotient onto
  // +_i Z/d_i in the rows of U.
  IntMat m(gens, rels.rows);
  for (std::size_t i = 0; i < rels.rows; ++i)
    for (std::size_t j = 0; j < gens; ++j) m.at(j, i) = rels.at(i, j);
  SnfResult s = smith_normal_form(m);
  RelPresentation pres;
  pres.gens = gens;
  pres.u = s.u;
  pres.uinv = unimodular_inverse(s.u);
  std::size_t diag = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i < gens; ++i) {
    mpz_class d = i < diag ? s.d.at(i, i) : mpz_class(0);
    if (d == 0)
      fail(ErrorKind::FreeRank,
           "relation quotient has nonzero free rank; expected a finite group");
    if (d == 1) continue;
    if (!d.fits_slong_p())
      fail(ErrorKind::SizeCap, "invariant factor exceeds int64 range");
    pres.group.factors.push_back(d.get_si());
    pres.kept.push_back(i);
  }
  return pres;
}

std::uint64_t FiniteGroupTable::element_order(std::size_t x) const {
  std::uint64_t ord = 1;
  std::size_t cur = x;
  while (cur != identity) {
    cur = mul(cur, x);
    ++ord;
    if (ord > n) fail(ErrorKind::Internal, "order exceeds group size");
  }
  return ord;
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
  if (n == 0) fail(ErrorKind::Shape, "group must be nonempty");
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = (x + y) % n;
  return from_table(n, t, 0);
}

FiniteGroupTable FiniteGroupTable::from_table(
    std::size_t n, const std::vector<std::size_t>& table,
    std::size_t identity) {
  if (n == 0) fail(ErrorKind::Shape, "group must be nonempty");
  if (table.size() != n * n)
    fail(ErrorKind::Shape, "multiplication table size mismatch");
  if (identity >= n) fail(ErrorKind::Shape, "identity index out of range");
  for (std::size_t v : table)
    if (v >= n) fail(ErrorKind::Validation, "table entry out of range");
  FiniteGroupTable g;
  g.n = n;
  g.table = table;
  g.identity = identity;
  for (std::size_t x = 0; x < n; ++x) {
    if (g.mul(identity, x) != x || g.mul(x, identity) != x)
      fail(ErrorKind::Validation,
           "identity law fails at element " + std::to_string(x));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          fail(ErrorKind::Validation,
               "associativity fails at (" + std::to_string(x) + "," +
                   std::to_string(y) + "," + std::to_string(z) + ")");
  g.inv.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (g.mul(x, y) == identity && g.mul(y, x) == identity) {
        g.inv[x] = y;
        break;
      }
    if (g.inv[x] == n)
      fail(ErrorKind::Validation,
           "element " + std::to_string(x) + " has no inverse");
  }
  return g;
}

std::size_t EnumeratedAbelianGroup::rep_of(const AbelianGroup::Elem& e) const {
  auto it = index_by_coords.find(shape.reduce(e));
  if (it == index_by_coords.end())
    fail(ErrorKind::Internal, "coordinate vector has no representative");
  return it->second;
}

EnumeratedAbelianGroup abelian_structure(
    std::size_t n, std::size_t identity,
    const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  if (n == 0) fail(ErrorKind::Shape, "group must be nonempty");
  if (identity >= n) fail(ErrorKind::Shape, "identity index out of range");
  // Greedy generating set: repeatedly adjoin the smallest unreached element,
  // then rebuild words by breadth-first closure, harvesting a relation at
  // every collision. The collision relations generate the full relation
  // lattice of the chosen generators.
  std::vector<std::size_t> gens;
  std::vector<std::optional<std::vector<std::int64_t>>> word;
  std::vector<std::vector<std::int64_t>> rels;
  while (true) {
    word.assign(n, std::nullopt);
    word[identity] = std::vector<std::int64_t>(gens.size(), 0);
    rels.clear();
    std::deque<std::size_t> fifo{identity};
    while (!fifo.empty()) {
      std::size_t a = fifo.front();
      fifo.pop_front();
      for (std::size_t j = 0; j < gens.size(); ++j) {
        std::size_t b = mul(a, gens[j]);
        if (b >= n) fail(ErrorKind::Validation, "product index out of range");
        std::vector<std::int64_t> w = *word[a];
        ++w[j];
        if (!word[b]) {
          word[b] = std::move(w);
          fifo.push_back(b);
        } else {
          std::vector<std::int64_t> r(gens.size());
          bool zero = true;
          for (std::size_t k = 0; k < gens.size(); ++k) {
            r[k] = w[k] - (*word[b])[k];
            zero = zero && r[k] == 0;
          }
          if (!zero) rels.push_back(std::move(r));
        }
      }
    }
    std::size_t missing = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!word[i]) {
        missing = i;
        break;
      }
    if (missing == n) break;
    gens.push_back(missing);
  }
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  IntMat rm(rels.size(), gens.size());
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) rm.at(i, j) = rels[i][j];
  RelPresentation pres = group_from_relations(gens.size(), rm);
  EnumeratedAbelianGroup out;
  out.shape = pres.group;
  out.identity = identity;
  out.generator_ids = gens;
  out.coords_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.coords_of[i] = pres.coords(*word[i]);
    auto [it, fresh] = out.index_by_coords.emplace(out.coords_of[i], i);
    if (!fresh)
      fail(ErrorKind::Validation,
           "elements " + std::to_string(it->second) + " and " +
               std::to_string(i) +
               " share coordinates; multiplication is not a group law");
  }
  if (static_cast<std::uint64_t>(out.shape.order()) != n)
    fail(ErrorKind::Validation,
         "presentation order does not match element count");
  return out;
}

}  // namespace lucp

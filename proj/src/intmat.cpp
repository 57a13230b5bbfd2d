#include "lucp/intmat.hpp"

#include <algorithm>

namespace lucp {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::mul(const IntMat& o) const {
  if (cols != o.rows) fail(ErrorKind::Shape, "integer matrix product");
  IntMat r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const mpz_class& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j)
        r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMat::is_zero() const {
  for (const mpz_class& x : a)
    if (x != 0) return false;
  return true;
}

std::vector<mpz_class> IntMat::apply(const std::vector<mpz_class>& v) const {
  if (v.size() != cols) fail(ErrorKind::Shape, "integer matrix apply");
  std::vector<mpz_class> r(rows, mpz_class(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

mpz_class determinant(const IntMat& m) {
  if (m.rows != m.cols) fail(ErrorKind::Shape, "determinant of non-square");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && w.at(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMat& a, IntMat& u, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(r1, j), a.at(r2, j));
  for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(r1, j), u.at(r2, j));
}

void swap_cols(IntMat& a, IntMat& v, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows; ++i) std::swap(a.at(i, c1), a.at(i, c2));
  for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, c1), v.at(i, c2));
}

// row r1 += q * row r2
void add_row(IntMat& a, IntMat& u, std::size_t r1, std::size_t r2,
             const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < a.cols; ++j) a.at(r1, j) += q * a.at(r2, j);
  for (std::size_t j = 0; j < u.cols; ++j) u.at(r1, j) += q * u.at(r2, j);
}

// col c1 += q * col c2
void add_col(IntMat& a, IntMat& v, std::size_t c1, std::size_t c2,
             const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < a.rows; ++i) a.at(i, c1) += q * a.at(i, c2);
  for (std::size_t i = 0; i < v.rows; ++i) v.at(i, c1) += q * v.at(i, c2);
}

void negate_row(IntMat& a, IntMat& u, std::size_t r) {
  for (std::size_t j = 0; j < a.cols; ++j) a.at(r, j) = -a.at(r, j);
  for (std::size_t j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
}

// Smallest nonzero |entry| in the submatrix with corner (t, t); row-major tie
// break. Returns false when the submatrix is zero.
bool find_pivot(const IntMat& a, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < a.rows; ++i)
    for (std::size_t j = t; j < a.cols; ++j) {
      if (a.at(i, j) == 0) continue;
      mpz_class mag = abs(a.at(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& input) {
  SnfResult res;
  res.d = input;
  res.u = IntMat::identity(input.rows);
  res.v = IntMat::identity(input.cols);
  IntMat& d = res.d;
  std::size_t t = 0;
  std::size_t limit = std::min(input.rows, input.cols);
  while (t < limit) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(d, t, pi, pj)) break;
    swap_rows(d, res.u, t, pi);
    swap_cols(d, res.v, t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        mpz_class q = d.at(i, t) / d.at(t, t);  // truncated
        add_row(d, res.u, i, t, -q);
        if (d.at(i, t) != 0) {
          // remainder strictly smaller than pivot: promote and restart
          swap_rows(d, res.u, t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        mpz_class q = d.at(t, j) / d.at(t, t);
        add_col(d, res.v, j, t, -q);
        if (d.at(t, j) != 0) {
          swap_cols(d, res.v, t, j);
          dirty = true;
        }
      }
    }
    // divisibility repair: pull any non-multiple into column t and redo
    bool repaired = false;
    for (std::size_t i = t + 1; i < d.rows && !repaired; ++i)
      for (std::size_t j = t + 1; j < d.cols && !repaired; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          add_row(d, res.u, t, i, 1);
          repaired = true;
        }
    if (repaired) continue;
    if (d.at(t, t) < 0) negate_row(d, res.u, t);
    ++t;
  }
  return res;
}

}  // namespace lucp

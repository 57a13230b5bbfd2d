#include "lucp/fp.hpp"

namespace lucp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp fp_pow(Fp a, std::uint64_t e, Fp p) {
  Fp r = 1 % p;
  Fp base = a % p;
  while (e) {
    if (e & 1) r = fp_mul(r, base, p);
    base = fp_mul(base, base, p);
    e >>= 1;
  }
  return r;
}

Fp fp_inv(Fp a, Fp p) {
  if (a % p == 0) fail(ErrorKind::Internal, "inverse of zero residue");
  return fp_pow(a, p - 2, p);
}

FpVec fpvec_zero(std::size_t n) { return FpVec(n, 0); }

FpVec fpvec_unit(std::size_t n, std::size_t i) {
  FpVec v(n, 0);
  v[i] = 1;
  return v;
}

FpVec fpvec_add(const FpVec& a, const FpVec& b, Fp p) {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_add(a[i], b[i], p);
  return r;
}

FpVec fpvec_sub(const FpVec& a, const FpVec& b, Fp p) {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_sub(a[i], b[i], p);
  return r;
}

FpVec fpvec_scale(Fp c, const FpVec& a, Fp p) {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(c, a[i], p);
  return r;
}

bool fpvec_is_zero(const FpVec& a) {
  for (Fp x : a)
    if (x) return false;
  return true;
}

FpMat FpMat::identity(Fp p, std::size_t n) {
  FpMat m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::mul(const FpMat& o) const {
  if (cols != o.rows || p != o.p) fail(ErrorKind::Shape, "matrix product");
  FpMat r(p, rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      Fp aik = at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < o.cols; ++j)
        r.at(i, j) = fp_add(r.at(i, j), fp_mul(aik, o.at(k, j), p), p);
    }
  return r;
}

FpMat FpMat::add(const FpMat& o) const {
  if (rows != o.rows || cols != o.cols || p != o.p)
    fail(ErrorKind::Shape, "matrix sum");
  FpMat r(p, rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = fp_add(a[i], o.a[i], p);
  return r;
}

FpMat FpMat::sub(const FpMat& o) const {
  if (rows != o.rows || cols != o.cols || p != o.p)
    fail(ErrorKind::Shape, "matrix difference");
  FpMat r(p, rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = fp_sub(a[i], o.a[i], p);
  return r;
}

FpMat FpMat::scale(Fp c) const {
  FpMat r(p, rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = fp_mul(c, a[i], p);
  return r;
}

FpMat FpMat::transpose() const {
  FpMat r(p, cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

FpVec FpMat::apply(const FpVec& v) const {
  if (v.size() != cols) fail(ErrorKind::Shape, "matrix apply");
  FpVec r(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols; ++j)
      acc += static_cast<std::uint64_t>(at(i, j)) * v[j];
    r[i] = static_cast<Fp>(acc % p);
  }
  return r;
}

bool FpMat::is_zero() const {
  for (Fp x : a)
    if (x) return false;
  return true;
}

FpMat FpMat::kron(const FpMat& o) const {
  if (p != o.p) fail(ErrorKind::Shape, "kron modulus");
  FpMat r(p, rows * o.rows, cols * o.cols);
  for (std::size_t i1 = 0; i1 < rows; ++i1)
    for (std::size_t j1 = 0; j1 < cols; ++j1) {
      Fp c = at(i1, j1);
      if (!c) continue;
      for (std::size_t i2 = 0; i2 < o.rows; ++i2)
        for (std::size_t j2 = 0; j2 < o.cols; ++j2)
          r.at(i1 * o.rows + i2, j1 * o.cols + j2) = fp_mul(c, o.at(i2, j2), p);
    }
  return r;
}

FpVec FpMat::row(std::size_t i) const {
  FpVec v(cols);
  for (std::size_t j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

void FpMat::set_row(std::size_t i, const FpVec& v) {
  for (std::size_t j = 0; j < cols; ++j) at(i, j) = v[j];
}

FpVec FpMat::col(std::size_t j) const {
  FpVec v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

void FpMat::set_col(std::size_t j, const FpVec& v) {
  for (std::size_t i = 0; i < rows; ++i) at(i, j) = v[i];
}

FpMat mat_from_rows(Fp p, std::size_t cols, const std::vector<FpVec>& rows) {
  FpMat m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorKind::Shape, "row length");
    m.set_row(i, rows[i]);
  }
  return m;
}

FpMat mat_from_cols(Fp p, std::size_t rows, const std::vector<FpVec>& cols) {
  FpMat m(p, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(ErrorKind::Shape, "column length");
    m.set_col(j, cols[j]);
  }
  return m;
}

RrefResult rref(const FpMat& m) {
  RrefResult res;
  res.mat = m;
  FpMat& a = res.mat;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t piv = a.rows;
    for (std::size_t i = r; i < a.rows; ++i)
      if (a.at(i, c)) {
        piv = i;
        break;
      }
    if (piv == a.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols; ++j)
        std::swap(a.at(piv, j), a.at(r, j));
    Fp inv = fp_inv(a.at(r, c), a.p);
    for (std::size_t j = 0; j < a.cols; ++j)
      a.at(r, j) = fp_mul(a.at(r, j), inv, a.p);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r) continue;
      Fp f = a.at(i, c);
      if (!f) continue;
      for (std::size_t j = 0; j < a.cols; ++j)
        a.at(i, j) = fp_sub(a.at(i, j), fp_mul(f, a.at(r, j), a.p), a.p);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const FpMat& m) { return rref(m).rank; }

std::optional<FpMat> inverse(const FpMat& m) {
  if (m.rows != m.cols) return std::nullopt;
  std::size_t n = m.rows;
  FpMat aug(m.p, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank != n || r.pivots[n - 1] != n - 1) return std::nullopt;
  FpMat inv(m.p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

bool is_invertible(const FpMat& m) {
  return m.rows == m.cols && rank(m) == m.rows;
}

std::vector<FpVec> kernel_basis(const FpMat& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<FpVec> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    FpVec v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = fp_neg(r.mat.at(i, free), m.p);
    basis.push_back(v);
  }
  return basis;
}

std::optional<LinearSolution> solve_linear_system(const FpMat& a,
                                                  const FpVec& b) {
  if (b.size() != a.rows) fail(ErrorKind::Shape, "rhs length");
  FpMat aug(a.p, a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  RrefResult r = rref(aug);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    if (r.pivots[i] == a.cols) return std::nullopt;
  LinearSolution sol;
  sol.particular.assign(a.cols, 0);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    sol.particular[r.pivots[i]] = r.mat.at(i, a.cols);
  sol.kernel = kernel_basis(a);
  return sol;
}

std::optional<FpMat> solve_matrix(const FpMat& a, const FpMat& b) {
  if (b.rows != a.rows) fail(ErrorKind::Shape, "solve_matrix shapes");
  FpMat x(a.p, a.cols, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) {
    auto sol = solve_linear_system(a, b.col(j));
    if (!sol) return std::nullopt;
    x.set_col(j, sol->particular);
  }
  return x;
}

FpMat subspace_basis(Fp p, std::size_t dim, const std::vector<FpVec>& gens) {
  RrefResult r = rref(mat_from_rows(p, dim, gens));
  FpMat b(p, r.rank, dim);
  for (std::size_t i = 0; i < r.rank; ++i) b.set_row(i, r.mat.row(i));
  return b;
}

bool subspace_contains(const FpMat& basis, const FpVec& v) {
  FpVec w = v;
  for (std::size_t i = 0; i < basis.rows; ++i) {
    std::size_t piv = 0;
    while (piv < basis.cols && basis.at(i, piv) == 0) ++piv;
    if (piv == basis.cols) continue;
    Fp f = w[piv];
    if (!f) continue;
    for (std::size_t j = 0; j < basis.cols; ++j)
      w[j] = fp_sub(w[j], fp_mul(f, basis.at(i, j), basis.p), basis.p);
  }
  return fpvec_is_zero(w);
}

bool subspace_equal(const FpMat& a, const FpMat& b) {
  return a.rows == b.rows && a.cols == b.cols && a.a == b.a;
}

}  // namespace lucp

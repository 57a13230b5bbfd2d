#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lucp/errors.hpp"

namespace lucp {

// Residues mod a prime p, stored reduced in [0, p). All arithmetic is exact.
using Fp = std::uint32_t;
using FpVec = std::vector<Fp>;

bool is_prime(std::uint64_t n);

inline Fp fp_add(Fp a, Fp b, Fp p) { return static_cast<Fp>((a + b) % p); }
inline Fp fp_sub(Fp a, Fp b, Fp p) { return static_cast<Fp>((a + p - b) % p); }
inline Fp fp_neg(Fp a, Fp p) { return a == 0 ? 0 : p - a; }
inline Fp fp_mul(Fp a, Fp b, Fp p) {
  return static_cast<Fp>((static_cast<std::uint64_t>(a) * b) % p);
}
Fp fp_pow(Fp a, std::uint64_t e, Fp p);
Fp fp_inv(Fp a, Fp p);  // a != 0

// Reduce an arbitrary signed integer into [0, p).
inline Fp fp_from_int(long long v, Fp p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Fp>(r);
}

FpVec fpvec_zero(std::size_t n);
FpVec fpvec_unit(std::size_t n, std::size_t i);
FpVec fpvec_add(const FpVec& a, const FpVec& b, Fp p);
FpVec fpvec_sub(const FpVec& a, const FpVec& b, Fp p);
FpVec fpvec_scale(Fp c, const FpVec& a, Fp p);
bool fpvec_is_zero(const FpVec& a);

// Dense matrix over F_p, row major, acting on column vectors.
struct FpMat {
  Fp p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Fp> a;

  FpMat() = default;
  FpMat(Fp p_, std::size_t r, std::size_t c)
      : p(p_), rows(r), cols(c), a(r * c, 0) {}

  static FpMat identity(Fp p, std::size_t n);

  Fp& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Fp at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool operator==(const FpMat& o) const {
    return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
  }

  FpMat mul(const FpMat& o) const;
  FpMat add(const FpMat& o) const;
  FpMat sub(const FpMat& o) const;
  FpMat scale(Fp c) const;
  FpMat transpose() const;
  FpVec apply(const FpVec& v) const;
  bool is_zero() const;

  // Kronecker product: (A kron B)(i1*bR+i2, j1*bC+j2) = A(i1,j1)*B(i2,j2).
  FpMat kron(const FpMat& o) const;

  FpVec row(std::size_t i) const;
  void set_row(std::size_t i, const FpVec& v);
  FpVec col(std::size_t j) const;
  void set_col(std::size_t j, const FpVec& v);
};

// Build a matrix whose rows are the given vectors (all the same length).
FpMat mat_from_rows(Fp p, std::size_t cols, const std::vector<FpVec>& rows);
FpMat mat_from_cols(Fp p, std::size_t rows, const std::vector<FpVec>& cols);

struct RrefResult {
  FpMat mat;                       // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per nonzero row
  std::size_t rank = 0;
};

RrefResult rref(const FpMat& m);

std::size_t rank(const FpMat& m);
std::optional<FpMat> inverse(const FpMat& m);
bool is_invertible(const FpMat& m);

// Basis of {x : Mx = 0}, deterministic (one vector per free column of the
// rref, free columns in increasing order, free coordinate set to 1).
std::vector<FpVec> kernel_basis(const FpMat& m);

struct LinearSolution {
  FpVec particular;           // free coordinates zero
  std::vector<FpVec> kernel;  // basis of the homogeneous solutions
};

// Full solution set of Ax = b, or nullopt when inconsistent.
std::optional<LinearSolution> solve_linear_system(const FpMat& a,
                                                  const FpVec& b);

// Solve AX = B column by column; nullopt when any column is inconsistent.
// Returns the canonical particular solution (free coordinates zero).
std::optional<FpMat> solve_matrix(const FpMat& a, const FpMat& b);

// Row-span utilities. A subspace is canonically represented by the nonzero
// rows of its rref, which makes equality a plain comparison.
FpMat subspace_basis(Fp p, std::size_t dim, const std::vector<FpVec>& gens);
bool subspace_contains(const FpMat& basis, const FpVec& v);
bool subspace_equal(const FpMat& a, const FpMat& b);

}  // namespace lucp

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "lucp/errors.hpp"

namespace lucp {

// Dense matrix with arbitrary-precision integer entries.
struct IntMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  static IntMat identity(std::size_t n);

  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  IntMat mul(const IntMat& o) const;
  IntMat transpose() const;
  bool is_zero() const;

  std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;
};

// Determinant by fraction-free elimination; used to certify unimodularity.
mpz_class determinant(const IntMat& m);

struct SnfResult {
  IntMat d;  // Smith form: diagonal, nonnegative, d(i,i) | d(i+1,i+1)
  IntMat u;  // unimodular, rows x rows
  IntMat v;  // unimodular, cols x cols; u * a * v == d
};

// Deterministic Smith normal form: pivot is the smallest nonzero absolute
// value in the working submatrix, ties broken in row-major order.
SnfResult smith_normal_form(const IntMat& a);

}  // namespace lucp

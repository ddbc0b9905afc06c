#pragma once
// Exact dense linear algebra over the integers.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ktf {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers. Zero-row and
/// zero-column shapes are legal.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix diagonal(const IntVector &diag);
  static IntMatrix column(const IntVector &v);
  /// Block-diagonal sum; blocks may be empty.
  static IntMatrix block_diagonal(const std::vector<IntMatrix> &blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Integer> &entries() const { return entries_; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  IntMatrix transpose() const;
  /// Columns [first, first + count).
  IntMatrix col_range(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  IntMatrix row_range(std::size_t first, std::size_t count) const;
  /// [this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix &other) const;
  /// [this ; other]; column counts must agree.
  IntMatrix vconcat(const IntMatrix &other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
IntVector operator*(const IntMatrix &a, const IntVector &x);
IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator*(const Integer &s, const IntMatrix &a);

/// Exact matrix power, n >= 0; square input only.
IntMatrix power(const IntMatrix &m, unsigned long n);
/// Fraction-free (Bareiss) determinant; square input only. det of 0x0 is 1.
Integer determinant(const IntMatrix &m);

/// u * m * v == d with u, v unimodular, d in Smith normal form.
struct SnfResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// Diagonal of d, min(rows, cols) entries.
  IntVector diagonal() const;
};

/// h == u * m with u unimodular and h in row Hermite normal form: zero rows
/// last, positive pivots, entries above each pivot reduced into [0, pivot).
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};

SnfResult snf(const IntMatrix &m);
HnfResult hnf(const IntMatrix &m);
std::size_t rank(const IntMatrix &m);

/// Columns form a Hermite-normalized Z-basis of {x : m x = 0}. The result has
/// m.cols() rows and zero columns when the kernel is trivial.
IntMatrix kernel_basis(const IntMatrix &m);

/// Basis (as columns, Hermite-normalized) of the lattice spanned by the
/// columns of m.
IntMatrix column_lattice_basis(const IntMatrix &m);

/// Some integer x with m x == b, if one exists (column-span membership).
std::optional<IntVector> solve(const IntMatrix &m, const IntVector &b);

/// Solve m X == b column by column; nullopt when any column is not in the span.
std::optional<IntMatrix> solve(const IntMatrix &m, const IntMatrix &b);

bool is_zero(const IntVector &v);

} // namespace ktf

#include "ktf/zmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ktf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long x : r)
      entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector &diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::column(const IntVector &v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    m(i, 0) = v[i];
  return m;
}

IntMatrix IntMatrix::block_diagonal(const std::vector<IntMatrix> &blocks) {
  std::size_t r = 0, c = 0;
  for (const auto &b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  IntMatrix m(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto &b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, c);
  return v;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer &x) { return sgn(x) == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::col_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_)
    throw std::out_of_range("IntMatrix::col_range");
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j)
      m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_)
    throw std::out_of_range("IntMatrix::row_range");
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(i, j) = (*this)(first + i, j);
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix &other) const {
  if (rows_ != other.rows_)
    throw std::invalid_argument("IntMatrix::hconcat: row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j)
      m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix &other) const {
  if (cols_ != other.cols_)
    throw std::invalid_argument("IntMatrix::vconcat: column count mismatch");
  IntMatrix m(rows_ + other.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
  std::copy(other.entries_.begin(), other.entries_.end(),
            m.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (sgn(factor) == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (sgn(factor) == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer &aik = a(i, k);
      if (sgn(aik) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix &a, const IntVector &x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("IntMatrix-vector product: shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] += a(i, j) * x[j];
  return y;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("IntMatrix sum: shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("IntMatrix difference: shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a(i, j) - b(i, j);
  return c;
}

IntMatrix operator*(const Integer &s, const IntMatrix &a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = s * a(i, j);
  return c;
}

IntMatrix power(const IntMatrix &m, unsigned long n) {
  if (!m.is_square())
    throw std::invalid_argument("power: matrix is not square");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (n > 0) {
    if (n & 1UL)
      result = result * base;
    n >>= 1;
    if (n > 0)
      base = base * base;
  }
  return result;
}

Integer determinant(const IntMatrix &m) {
  if (!m.is_square())
    throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntVector SnfResult::diagonal() const {
  IntVector diag(std::min(d.rows(), d.cols()));
  for (std::size_t i = 0; i < diag.size(); ++i)
    diag[i] = d(i, i);
  return diag;
}

namespace {

// Truncated quotient; remainder has the sign of the dividend and |r| < |b|.
Integer tquot(const Integer &a, const Integer &b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fquot(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int cmpabs(const Integer &a, const Integer &b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

bool divides(const Integer &a, const Integer &b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

std::vector<std::size_t> pivot_columns(const IntMatrix &h, std::size_t rank) {
  std::vector<std::size_t> piv(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (sgn(h(i, j)) == 0)
      ++j;
    piv[i] = j;
  }
  return piv;
}

} // namespace

HnfResult hnf(const IntMatrix &m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix &h = res.h;
  IntMatrix &u = res.u;
  const std::size_t r = h.rows();
  std::size_t pr = 0;
  for (std::size_t j = 0; j < h.cols() && pr < r; ++j) {
    bool has_pivot = false;
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = pr; i < r; ++i)
        if (sgn(h(i, j)) != 0 && (best == r || cmpabs(h(i, j), h(best, j)) < 0))
          best = i;
      if (best == r)
        break;
      has_pivot = true;
      h.swap_rows(pr, best);
      u.swap_rows(pr, best);
      bool clean = true;
      for (std::size_t i = pr + 1; i < r; ++i) {
        if (sgn(h(i, j)) == 0)
          continue;
        Integer q = -tquot(h(i, j), h(pr, j));
        h.add_row_multiple(i, pr, q);
        u.add_row_multiple(i, pr, q);
        if (sgn(h(i, j)) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (!has_pivot)
      continue;
    if (sgn(h(pr, j)) < 0) {
      h.negate_row(pr);
      u.negate_row(pr);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      Integer q = -fquot(h(i, j), h(pr, j));
      h.add_row_multiple(i, pr, q);
      u.add_row_multiple(i, pr, q);
    }
    ++pr;
  }
  res.rank = pr;
  return res;
}

SnfResult snf(const IntMatrix &m) {
  SnfResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix &d = res.d;
  IntMatrix &u = res.u;
  IntMatrix &v = res.v;
  const std::size_t r = d.rows(), c = d.cols();

  auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    d.swap_rows(t, i);
    u.swap_rows(t, i);
    d.swap_cols(t, j);
    v.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // smallest nonzero entry of the trailing block
    std::size_t bi = r, bj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (sgn(d(i, j)) != 0 && (bi == r || cmpabs(d(i, j), d(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == r)
      break;
    move_to_pivot(t, bi, bj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (sgn(d(i, t)) == 0)
          continue;
        Integer q = -tquot(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        dirty = dirty || sgn(d(i, t)) != 0;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (sgn(d(t, j)) == 0)
          continue;
        Integer q = -tquot(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        dirty = dirty || sgn(d(t, j)) != 0;
      }
      if (dirty) {
        // a remainder is now smaller than the pivot
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (sgn(d(i, t)) != 0 && cmpabs(d(i, t), d(bi2, bj2)) < 0) {
            bi2 = i;
            bj2 = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (sgn(d(t, j)) != 0 && cmpabs(d(t, j), d(bi2, bj2)) < 0) {
            bi2 = t;
            bj2 = j;
          }
        move_to_pivot(t, bi2, bj2);
        continue;
      }
      // row and column are clear; enforce divisibility of the trailing block
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!divides(d(t, t), d(i, j))) {
            bad = i;
            break;
          }
      if (bad == r)
        break;
      d.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return res;
}

std::size_t rank(const IntMatrix &m) { return hnf(m).rank; }

IntMatrix kernel_basis(const IntMatrix &m) {
  const HnfResult hr = hnf(m.transpose());
  const std::size_t n = m.cols();
  IntMatrix k = hr.u.row_range(hr.rank, n - hr.rank);
  if (k.rows() == 0)
    return IntMatrix(n, 0);
  return hnf(k).h.transpose();
}

IntMatrix column_lattice_basis(const IntMatrix &m) {
  const HnfResult hr = hnf(m.transpose());
  return hr.h.row_range(0, hr.rank).transpose();
}

std::optional<IntVector> solve(const IntMatrix &m, const IntVector &b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: right-hand side has wrong length");
  const HnfResult hr = hnf(m.transpose());
  const auto piv = pivot_columns(hr.h, hr.rank);
  IntVector rem = b;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < hr.rank; ++i) {
    const Integer &p = hr.h(i, piv[i]);
    if (!divides(p, rem[piv[i]]))
      return std::nullopt;
    Integer q = rem[piv[i]] / p;
    y[i] = q;
    for (std::size_t j = 0; j < rem.size(); ++j)
      rem[j] -= q * hr.h(i, j);
  }
  if (!is_zero(rem))
    return std::nullopt;
  return hr.u.transpose() * y;
}

std::optional<IntMatrix> solve(const IntMatrix &m, const IntMatrix &b) {
  IntMatrix x(m.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve(m, b.col(j));
    if (!col)
      return std::nullopt;
    for (std::size_t i = 0; i < x.rows(); ++i)
      x(i, j) = (*col)[i];
  }
  return x;
}

bool is_zero(const IntVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Integer &x) { return sgn(x) == 0; });
}

} // namespace ktf

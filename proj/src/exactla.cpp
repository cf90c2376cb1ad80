#include "soscert/exactla.hpp"

#include <algorithm>
#include <numeric>

namespace soscert {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product dimensions");
  RationalMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  }
  return r;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector dimensions");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum dimensions");
  RationalMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += other.data_[k];
  return r;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& q : data_) q *= c;
  return *this;
}

Rational bilinear(std::span<const Rational> v, const RationalMatrix& m, std::span<const Rational> w) {
  if (v.size() != m.rows() || w.size() != m.cols()) throw DimensionMismatch("bilinear form dimensions");
  Rational sum = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * w[j];
    sum += v[i] * row;
  }
  return sum;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult out{m, 0, {}};
  RationalMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (a(row, j) != 0) a(r, j) -= f * a(row, j);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

KernelBasis kernel(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  KernelBasis basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivot_columns[k]] = -r.reduced(k, free);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Solves Lᵀ z = y for unit lower-triangular L whose first `completed`
// columns are meaningful (identity elsewhere).
RationalVector back_substitute_transpose(const RationalMatrix& lower, std::size_t completed,
                                         RationalVector y) {
  const std::size_t n = y.size();
  for (std::size_t k = std::min(completed, n); k-- > 0;) {
    Rational acc = y[k];
    for (std::size_t i = k + 1; i < n; ++i) acc -= lower(i, k) * y[i];
    y[k] = acc;
  }
  return y;
}

}  // namespace

LdltResult ldlt_psd(const RationalMatrix& m, Pivoting pivoting) {
  if (!m.is_symmetric()) throw std::invalid_argument("ldlt_psd: matrix is not symmetric");
  const std::size_t n = m.rows();
  LdltResult res;
  res.permutation.resize(n);
  std::iota(res.permutation.begin(), res.permutation.end(), std::size_t{0});
  res.lower = RationalMatrix::identity(n);
  res.diagonal.assign(n, Rational(0));

  // Residual Schur complement, stored in permuted coordinates.
  RationalMatrix s = m;
  auto swap_sym = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(s(a, j), s(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(s(i, a), s(i, b));
    for (std::size_t j = 0; j < res.completed; ++j) std::swap(res.lower(a, j), res.lower(b, j));
    std::swap(res.permutation[a], res.permutation[b]);
  };
  auto fail_with = [&](RationalVector y) {
    RationalVector z = back_substitute_transpose(res.lower, res.completed, std::move(y));
    RationalVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[res.permutation[k]] = z[k];
    res.psd = false;
    res.witness = std::move(v);
    return res;
  };

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k; i < n; ++i) {
      if (sgn(s(i, i)) < 0) {
        RationalVector y(n);
        y[i] = 1;
        return fail_with(std::move(y));
      }
    }
    if (pivoting == Pivoting::largest_diagonal) {
      std::size_t best = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (s(i, i) > s(best, best)) best = i;
      }
      swap_sym(k, best);
    }
    if (s(k, k) == 0) {
      // Zero pivot: the residual rows through it must vanish.
      const std::size_t lo = k;
      const std::size_t hi = pivoting == Pivoting::none ? k + 1 : n;
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (j == i || s(i, j) == 0) continue;
          // With s_ii = 0: (a e_i - e_j)ᵀ S (a e_i - e_j) = s_jj - 2 a s_ij = -s_jj - 2.
          RationalVector y(n);
          y[i] = (s(j, j) + 1) / s(i, j);
          y[j] = -1;
          return fail_with(std::move(y));
        }
      }
      res.completed = k + 1;
      if (pivoting == Pivoting::largest_diagonal) {
        // Every remaining diagonal is zero and the residual vanished.
        res.completed = n;
        break;
      }
      continue;
    }
    const Rational d = s(k, k);
    res.diagonal[k] = d;
    for (std::size_t i = k + 1; i < n; ++i) res.lower(i, k) = s(i, k) / d;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (s(i, k) == 0) continue;
      const Rational f = res.lower(i, k);
      for (std::size_t j = k + 1; j < n; ++j) s(i, j) -= f * s(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      s(i, k) = 0;
      s(k, i) = 0;
    }
    res.completed = k + 1;
  }
  res.psd = true;
  return res;
}

bool same_span(std::span<const RationalVector> u, std::span<const RationalVector> v) {
  std::size_t len = 0;
  bool have_len = false;
  for (auto fam : {u, v}) {
    for (const auto& x : fam) {
      if (have_len && x.size() != len) throw DimensionMismatch("same_span: vector length mismatch");
      len = x.size();
      have_len = true;
    }
  }
  auto reduced_rows = [len](std::span<const RationalVector> fam) {
    const RrefResult r = rref(RationalMatrix::from_rows(fam, len));
    std::vector<RationalVector> rows;
    for (std::size_t k = 0; k < r.rank; ++k) rows.push_back(r.reduced.row(k));
    return rows;
  };
  return reduced_rows(u) == reduced_rows(v);
}

RationalVector primitive_integer(RationalVector v) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& q : v) {
    if (q == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  if (num_gcd == 0) return v;
  const Rational scale(den_lcm, num_gcd);
  for (auto& q : v) q *= scale;
  return v;
}

}  // namespace soscert

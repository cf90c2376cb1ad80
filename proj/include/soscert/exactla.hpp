// Dense linear algebra over Q.
#pragma once

#include "soscert/ring.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace soscert {

using RationalVector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major nested initializer; every row must have the same length.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  bool is_symmetric() const;
  bool is_zero() const;
  RationalMatrix transpose() const;

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalVector operator*(std::span<const Rational> v) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix& operator*=(const Rational& c);
  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// vᵀ M w
Rational bilinear(std::span<const Rational> v, const RationalMatrix& m, std::span<const Rational> w);

struct RrefResult {
  RationalMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const RationalMatrix& m);

struct KernelBasis {
  std::vector<RationalVector> vectors;
  std::size_t dimension() const { return vectors.size(); }
};

/// Right null space basis: one vector per free column of the RREF, with a 1
/// in that column.
KernelBasis kernel(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

enum class Pivoting { largest_diagonal, none };

struct LdltResult {
  /// permutation[k] is the original index placed at position k.
  std::vector<std::size_t> permutation;
  RationalMatrix lower;
  RationalVector diagonal;
  bool psd = false;
  /// Set exactly when psd is false; witnessᵀ M witness < 0.
  std::optional<RationalVector> witness;
  /// Number of leading pivots completed (all of them when psd).
  std::size_t completed = 0;
};

/// Exact symmetric LDLᵀ and PSD test. Throws std::invalid_argument on
/// non-symmetric input. With Pivoting::none, a zero pivot is accepted only if
/// its whole residual row vanishes.
LdltResult ldlt_psd(const RationalMatrix& m, Pivoting pivoting = Pivoting::largest_diagonal);

/// True iff the two vector families span the same subspace.
bool same_span(std::span<const RationalVector> u, std::span<const RationalVector> v);

/// Scales v by a positive rational so its entries are coprime integers.
RationalVector primitive_integer(RationalVector v);

}  // namespace soscert

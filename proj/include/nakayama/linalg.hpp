#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nakayama/scalar.hpp"

namespace nakayama::linalg {

// Sparse vector: (column, coefficient) pairs, strictly ascending columns, no
// zero coefficients. The pivot of a row is its largest column.
using SparseVec = std::vector<std::pair<std::uint64_t, Scalar>>;

// Reduced row echelon form: rows sorted by descending pivot, every row monic
// at its pivot, and no pivot column appears in any other row.
struct Echelon {
  std::vector<SparseVec> rows;

  std::vector<std::uint64_t> pivots() const;
  // Row whose pivot is `col`, if any (binary search).
  const SparseVec* row_for_pivot(std::uint64_t col) const;
  bool operator==(const Echelon&) const = default;
};

enum class Kernel { Serial, Parallel, Auto };

// Process-wide kernel selection for rref(); Auto picks the parallel kernel for
// inputs with many rows.
void set_kernel(Kernel k);
Kernel kernel();

// Reference implementation: incremental insertion, one row at a time.
Echelon rref_serial(std::vector<SparseVec> rows);
// Gauss-Jordan elimination with the per-pivot row updates run under OpenMP.
// Produces exactly the same echelon form as rref_serial.
Echelon rref_parallel(std::vector<SparseVec> rows);
Echelon rref(std::vector<SparseVec> rows);

// Fully reduces v against the echelon rows (result has no pivot columns).
SparseVec reduce(const Echelon& e, SparseVec v);

SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x);  // y + a*x
SparseVec scaled(const SparseVec& x, const Scalar& a);

/// Small dense matrix over a field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar());

  static Matrix identity(std::size_t n, const Field& f);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;

  std::size_t rank() const;
  // Throws InvalidArgument when singular or non-square.
  Matrix inverse() const;
  std::optional<Matrix> try_inverse() const;
  // Basis of {x : A x = 0}, as columns of the returned matrix.
  Matrix nullspace() const;
  // Basis of {y : y^T A = 0}.
  Matrix left_nullspace() const { return transpose().nullspace(); }
  std::vector<Scalar> column(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;

  bool is_scalar_multiple_of_identity(Scalar* r = nullptr) const;
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace nakayama::linalg

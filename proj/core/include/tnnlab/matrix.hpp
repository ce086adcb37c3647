#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tnnlab/rational.hpp"

namespace tnnlab {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_int_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Products skip zero entries of the left factor; representation matrices are sparse.
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& v);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

Rational dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector scaled(const Rational& s, const RatVector& v);
bool is_zero(const RatVector& v);

struct RowReduction {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowReduction row_reduce(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<RatVector>& vectors);

/// Basis of {x : m x = 0}; one vector per free column, unit at that column.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Some solution of a x = b (the one with free variables set to zero), if consistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Throws std::domain_error for singular input.
RatMatrix inverse(const RatMatrix& m);
Rational determinant(RatMatrix m);

/// Scales v to a primitive integer vector with the same direction.
RatVector primitive(const RatVector& v);

/// Column-compressed sparse matrix used for fast matrix-vector application.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(const RatMatrix& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  /// y = A x
  RatVector apply(const RatVector& x) const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns_;
};

}  // namespace tnnlab

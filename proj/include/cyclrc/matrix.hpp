#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cyclrc/field.hpp"

namespace cyclrc {

/// Row-major dense matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix append_rows(const Matrix& other) const;
  bool is_zero() const;

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_in_place();
  std::size_t rank() const;
  /// Basis (as rows) of { x : M x^T = 0 }.
  Matrix null_space() const;
  /// Row-reduced basis of the row space with zero rows dropped.
  Matrix row_basis() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Row vector times matrix.
std::vector<Elem> vec_mul(std::span<const Elem> v, const Matrix& m);
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

/// Solves A x = b; nullopt when inconsistent.  When the solution is not
/// unique, free variables are set to zero and `unique` reports false.
std::optional<std::vector<Elem>> solve(const Matrix& a, std::span<const Elem> b,
                                       bool* unique = nullptr);

}  // namespace cyclrc

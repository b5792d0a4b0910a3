#include "cyclrc/matrix.hpp"

#include <algorithm>

namespace cyclrc {

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(r, j) = at(r, cols[j]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(row(rows[i]).begin(), row(rows[i]).end(), out.row(i).begin());
  }
  return out;
}

Matrix Matrix::append_rows(const Matrix& other) const {
  if (other.cols_ != cols_) throw Error(ErrorCode::ParamDomain, "column count mismatch");
  Matrix out(field_, rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + data_.size());
  return out;
}

bool Matrix::is_zero() const {
  for (Elem e : data_) {
    if (e != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Matrix::rref_in_place() {
  const auto& f = *field_;
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols_ && prow < rows_; ++c) {
    std::size_t sel = prow;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != prow) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(prow, j));
    }
    const Elem inv = f.inv(at(prow, c));
    for (std::size_t j = c; j < cols_; ++j) at(prow, j) = f.mul(at(prow, j), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == prow) continue;
      const Elem factor = at(r, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) {
        at(r, j) = f.sub(at(r, j), f.mul(factor, at(prow, j)));
      }
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref_in_place().size();
}

Matrix Matrix::row_basis() const {
  Matrix copy = *this;
  const auto pivots = copy.rref_in_place();
  Matrix out(field_, pivots.size(), cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::copy(copy.row(r).begin(), copy.row(r).end(), out.row(r).begin());
  }
  return out;
}

Matrix Matrix::null_space() const {
  const auto& f = *field_;
  Matrix red = *this;
  const auto pivots = red.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix out(field_, free_cols.size(), cols_);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    out.at(i, fc) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) out.at(i, pivots[r]) = f.neg(red.at(r, fc));
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ParamDomain, "dimension mismatch in product");
  if (!same_field(a.field_, b.field_)) throw Error(ErrorCode::MixedContexts, "matrices over different fields");
  const auto& f = *a.field_;
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

std::vector<Elem> vec_mul(std::span<const Elem> v, const Matrix& m) {
  const auto& f = *m.field();
  std::vector<Elem> out(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    const auto row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], row[j]));
  }
  return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::optional<std::vector<Elem>> solve(const Matrix& a, std::span<const Elem> b, bool* unique) {
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const auto pivots = aug.rref_in_place();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  if (unique) *unique = pivots.size() == a.cols();
  std::vector<Elem> x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

}  // namespace cyclrc

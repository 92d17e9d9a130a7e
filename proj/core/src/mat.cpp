#include "matfq/mat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace matfq {

namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("matrices belong to different fields");
}

void require_square(const Mat& m, const char* what) {
  if (!m.is_square())
    throw std::invalid_argument(std::string(what) + " requires a square matrix");
}

// residual of `row` after reduction against an RREF basis; empty when inside
std::vector<Felt> reduce_against(std::span<const Felt> row, const SubspaceKey& key) {
  const Field& F = key.reduced_rows.field();
  std::vector<Felt> residual(row.begin(), row.end());
  for (std::size_t j = 0; j < key.dim; ++j) {
    const Felt c = residual[key.pivot_cols[j]];
    if (c == 0) continue;
    for (std::size_t h = 0; h < key.ambient_dim; ++h)
      residual[h] = F.sub(residual[h], F.mul(c, key.reduced_rows.at(j, h)));
  }
  return residual;
}

bool all_zero(const std::vector<Felt>& v) {
  return std::all_of(v.begin(), v.end(), [](Felt x) { return x == 0; });
}

}  // namespace

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (!field_) throw std::invalid_argument("matrix requires a field");
  if (cols_ == 0) throw std::invalid_argument("matrix must have at least one column");
}

Mat Mat::identity(FieldPtr field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows needs at least one row");
  Mat m(std::move(field), rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw std::invalid_argument("rows have unequal lengths");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (rows[r][c] >= m.field_->q())
        throw std::invalid_argument("entry code " + std::to_string(rows[r][c]) +
                                    " out of range for F_" + std::to_string(m.field_->q()));
      m.entries_[r * m.cols_ + c] = static_cast<Felt>(rows[r][c]);
    }
  }
  return m;
}

void Mat::set(std::size_t r, std::size_t c, Felt v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (v >= field_->q()) throw std::invalid_argument("entry code out of range");
  entries_[r * cols_ + c] = v;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Felt x) { return x == 0; });
}

bool Mat::operator==(const Mat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && *field_ == *other.field_ &&
         entries_ == other.entries_;
}

bool Mat::operator<(const Mat& other) const {
  return std::tie(rows_, cols_, entries_) < std::tie(other.rows_, other.cols_, other.entries_);
}

Mat mat_mul(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    throw std::invalid_argument("dimension mismatch in matrix product");
  const Field& F = a.field();
  Mat r(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Felt aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.set(i, j, F.add(r.at(i, j), F.mul(aik, b.at(k, j))));
    }
  return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch in matrix sum");
  const Field& F = a.field();
  Mat r(a.field_ptr(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, F.add(a.at(i, j), b.at(i, j)));
  return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch in matrix difference");
  const Field& F = a.field();
  Mat r(a.field_ptr(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, F.sub(a.at(i, j), b.at(i, j)));
  return r;
}

Mat mat_scale(Felt c, const Mat& a) {
  const Field& F = a.field();
  Mat r(a.field_ptr(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, F.mul(c, a.at(i, j)));
  return r;
}

Mat transpose(const Mat& m) {
  Mat r(m.field_ptr(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(j, i, m.at(i, j));
  return r;
}

RrefResult rref(const Mat& m) {
  const Field& F = m.field();
  Mat r = m;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < r.cols() && pr < r.rows(); ++c) {
    std::size_t sel = r.rows();
    for (std::size_t i = pr; i < r.rows(); ++i)
      if (r.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel == r.rows()) continue;
    if (sel != pr)
      for (std::size_t h = 0; h < r.cols(); ++h) {
        const Felt t = r.at(pr, h);
        r.set(pr, h, r.at(sel, h));
        r.set(sel, h, t);
      }
    const Felt piv_inv = F.inv(r.at(pr, c));
    for (std::size_t h = 0; h < r.cols(); ++h) r.set(pr, h, F.mul(piv_inv, r.at(pr, h)));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pr) continue;
      const Felt f = r.at(i, c);
      if (f == 0) continue;
      for (std::size_t h = 0; h < r.cols(); ++h)
        r.set(i, h, F.sub(r.at(i, h), F.mul(f, r.at(pr, h))));
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivot_cols.size(); }

bool SubspaceKey::operator==(const SubspaceKey& other) const {
  return ambient_dim == other.ambient_dim && dim == other.dim &&
         pivot_cols == other.pivot_cols && reduced_rows == other.reduced_rows;
}

bool SubspaceKey::operator<(const SubspaceKey& other) const {
  if (ambient_dim != other.ambient_dim) return ambient_dim < other.ambient_dim;
  if (dim != other.dim) return dim < other.dim;
  if (pivot_cols != other.pivot_cols) return pivot_cols < other.pivot_cols;
  return reduced_rows < other.reduced_rows;
}

SubspaceKey row_space_key(const Mat& m) {
  auto [reduced, pivots] = rref(m);
  const std::size_t k = pivots.size();
  Mat basis(m.field_ptr(), k, m.cols());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t h = 0; h < m.cols(); ++h) basis.set(j, h, reduced.at(j, h));
  return {m.cols(), k, std::move(pivots), std::move(basis)};
}

SubspaceKey col_space_key(const Mat& m) { return row_space_key(transpose(m)); }

bool is_subspace_of(const SubspaceKey& sub, const SubspaceKey& sup) {
  if (sub.ambient_dim != sup.ambient_dim)
    throw std::invalid_argument("subspace keys have different ambient dimensions");
  if (sub.reduced_rows.field() != sup.reduced_rows.field())
    throw std::invalid_argument("subspace keys belong to different fields");
  if (sub.dim > sup.dim) return false;
  for (std::size_t j = 0; j < sub.dim; ++j)
    if (!all_zero(reduce_against(sub.reduced_rows.row(j), sup))) return false;
  return true;
}

bool rows_in_row_space(const Mat& m, const SubspaceKey& key) {
  if (m.cols() != key.ambient_dim)
    throw std::invalid_argument("row length does not match ambient dimension");
  if (m.field() != key.reduced_rows.field())
    throw std::invalid_argument("matrix and key belong to different fields");
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!all_zero(reduce_against(m.row(i), key))) return false;
  return true;
}

bool is_idempotent(const Mat& m) {
  require_square(m, "idempotency test");
  return mat_mul(m, m) == m;
}

}  // namespace matfq

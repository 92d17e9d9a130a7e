// Dense exact matrix algebra over F_q: products, rank, reduced row echelon
// form, and canonical row/column-space keys.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "matfq/field.hpp"

namespace matfq {

/// Dense matrix over F_q with value semantics; entries are Felt codes stored
/// row-major. Library operations never mutate their inputs and allocate
/// fresh results, so values can be shared freely across threads.
///
/// Ring elements are square n x n matrices; rectangular shapes (including
/// zero-row basis bundles) only carry subspace bases.
class Mat {
public:
  Mat(FieldPtr field, std::size_t rows, std::size_t cols);

  static Mat identity(FieldPtr field, std::size_t n);
  /// Builds from row vectors of entry codes; rows must have equal length and
  /// every code must lie in [0, q).
  static Mat from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  Felt at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Felt v);

  std::span<const Felt> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Felt>& entries() const { return entries_; }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  /// Equal shape, equal field, equal entries.
  bool operator==(const Mat& other) const;
  bool operator!=(const Mat& other) const { return !(*this == other); }
  /// Deterministic total order: shape first, then row-major entry codes.
  bool operator<(const Mat& other) const;

private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Felt> entries_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(Felt c, const Mat& a);
Mat transpose(const Mat& m);
inline Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }
inline Mat operator+(const Mat& a, const Mat& b) { return mat_add(a, b); }
inline Mat operator-(const Mat& a, const Mat& b) { return mat_sub(a, b); }

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivot_cols;  // 0-based, strictly increasing
};

/// Unique reduced row echelon form: Gauss-Jordan with exact inverses,
/// leftmost-pivot rule, zero rows at the bottom.
RrefResult rref(const Mat& m);

/// Number of nonzero rows of rref(m) = dim of the row space.
std::size_t rank(const Mat& m);

/// Canonical reduced-echelon representation of a row space. Keys are equal
/// exactly when the row spaces coincide. The zero subspace has dim = 0, no
/// pivots, and a 0 x n basis.
struct SubspaceKey {
  std::size_t ambient_dim;
  std::size_t dim;
  std::vector<std::size_t> pivot_cols;  // 0-based, strictly increasing
  Mat reduced_rows;                     // dim x ambient_dim, in RREF

  bool operator==(const SubspaceKey& other) const;
  bool operator!=(const SubspaceKey& other) const { return !(*this == other); }
  bool operator<(const SubspaceKey& other) const;
};

SubspaceKey row_space_key(const Mat& m);
/// Key of the column space: row_space_key of the transpose.
SubspaceKey col_space_key(const Mat& m);

/// True when every vector of `sub` lies in `sup` (reduce each basis row of
/// `sub` against `sup`'s pivots; membership means a zero residual).
bool is_subspace_of(const SubspaceKey& sub, const SubspaceKey& sup);

/// True when every row of `m` lies in the row space described by `key`.
bool rows_in_row_space(const Mat& m, const SubspaceKey& key);

/// m * m == m (square matrices only).
bool is_idempotent(const Mat& m);

}  // namespace matfq

#include "matfq/ideals.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace matfq {

namespace {

void require_ring_pair(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("ring elements must be square matrices of the same size");
  if (a.field() != b.field())
    throw std::invalid_argument("matrices belong to different fields");
}

void require_idempotent(const Mat& m, const char* name) {
  if (!is_idempotent(m))
    throw std::invalid_argument(std::string(name) + " is not idempotent");
}

// k-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    if (k == 0) break;
    std::size_t i = k;
    while (i-- > 0 && s[i] == n - k + i)
      if (i == 0) return out;
    s[i]++;
    for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

}  // namespace

bool left_ideal_contains(const Mat& m1, const Mat& m2) {
  require_ring_pair(m1, m2);
  return rows_in_row_space(m1, row_space_key(m2));
}

bool same_left_ideal(const Mat& m1, const Mat& m2) {
  require_ring_pair(m1, m2);
  return row_space_key(m1) == row_space_key(m2);
}

bool same_right_ideal(const Mat& m1, const Mat& m2) {
  require_ring_pair(m1, m2);
  return col_space_key(m1) == col_space_key(m2);
}

bool idempotents_same_ideal(const Mat& r, const Mat& s) {
  require_ring_pair(r, s);
  require_idempotent(r, "first argument");
  require_idempotent(s, "second argument");
  return mat_mul(r, s) == r && mat_mul(s, r) == s;
}

IdempotentEquivalence equivalence_conditions(const Mat& r, const Mat& s) {
  require_ring_pair(r, s);
  IdempotentEquivalence out{};
  out.same_ideal =
      is_idempotent(r) && is_idempotent(s) && row_space_key(r) == row_space_key(s);
  out.absorption = mat_mul(r, s) == r && mat_mul(s, r) == s;
  const Mat rs = mat_mul(r, s);
  const Mat eye = Mat::identity(s.field_ptr(), s.rows());
  out.reconstruction =
      is_idempotent(s) && r == mat_add(s, mat_mul(mat_sub(eye, s), rs));
  return out;
}

std::vector<Mat> idempotent_generators(const Mat& s) {
  if (!s.is_square()) throw std::invalid_argument("generator enumeration needs a square matrix");
  require_idempotent(s, "argument");
  const std::size_t n = s.rows();
  const Field& F = s.field();
  const Mat eye = Mat::identity(s.field_ptr(), n);
  const Mat complement = mat_sub(eye, s);

  // span of {(I-s) * E_ab * s} inside the n^2-dimensional coordinate space;
  // (I-s)*E_ab*s is the outer product of column a of (I-s) with row b of s
  Mat images(s.field_ptr(), n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          images.set(a * n + b, i * n + j, F.mul(complement.at(i, a), s.at(b, j)));
  const auto basis = row_space_key(images);
  const std::size_t dim = basis.dim;

  std::vector<Mat> out;
  std::vector<Felt> coeff(dim, 0);
  while (true) {
    Mat g = s;
    for (std::size_t t = 0; t < dim; ++t) {
      if (coeff[t] == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          g.set(i, j, F.add(g.at(i, j), F.mul(coeff[t], basis.reduced_rows.at(t, i * n + j))));
    }
    out.push_back(std::move(g));
    std::size_t t = dim;
    while (t-- > 0 && coeff[t] == Felt(F.q() - 1)) coeff[t] = 0;
    if (t == SIZE_MAX) break;
    ++coeff[t];
  }
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalIdempotent canonical_idempotent_for_subspace(const SubspaceKey& key) {
  const std::size_t n = key.ambient_dim;
  Mat m(key.reduced_rows.field_ptr(), n, n);
  for (std::size_t j = 0; j < key.dim; ++j)
    for (std::size_t h = 0; h < n; ++h)
      m.set(key.pivot_cols[j], h, key.reduced_rows.at(j, h));
  return {std::move(m), key.pivot_cols};
}

IdealHandle subspace_to_ideal(const SubspaceKey& key) {
  return {key, key.dim, canonical_idempotent_for_subspace(key)};
}

SubspaceKey ideal_to_subspace(const IdealHandle& h) { return h.key; }

std::vector<SubspaceKey> enumerate_subspaces(std::size_t n, std::size_t k, const FieldPtr& f) {
  if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
  const unsigned q = f->q();
  std::vector<SubspaceKey> out;
  for (const auto& pivots : subsets_lex(n, k)) {
    // free positions: (row j, col h) with h > pivots[j] and h not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t h = pivots[j] + 1; h < n; ++h)
        if (!std::binary_search(pivots.begin(), pivots.end(), h)) free_pos.emplace_back(j, h);

    std::vector<Felt> vals(free_pos.size(), 0);
    while (true) {
      Mat basis(f, k, n);
      for (std::size_t j = 0; j < k; ++j) basis.set(j, pivots[j], 1);
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        basis.set(free_pos[t].first, free_pos[t].second, vals[t]);
      out.push_back(SubspaceKey{n, k, pivots, std::move(basis)});
      std::size_t t = vals.size();
      while (t-- > 0 && vals[t] == Felt(q - 1)) vals[t] = 0;
      if (t == SIZE_MAX) break;
      ++vals[t];
    }
  }
  return out;
}

std::vector<CanonicalIdempotent> enumerate_canonical_idempotents(std::size_t n, std::size_t k,
                                                                 const FieldPtr& f) {
  std::vector<CanonicalIdempotent> out;
  for (const auto& key : enumerate_subspaces(n, k, f))
    out.push_back(canonical_idempotent_for_subspace(key));
  return out;
}

PivotalScan pivotal_positions(const Mat& a) {
  if (!a.is_square())
    throw std::invalid_argument("pivotal-position scan needs a square matrix");
  const std::size_t n = a.rows();
  PivotalScan scan;

  // condition (i) forces the pivotal positions to be exactly the nonzero rows
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = true;
    for (std::size_t h = 0; h < n; ++h)
      if (a.at(i, h) != 0) {
        zero = false;
        break;
      }
    if (!zero) pivots.push_back(i);
  }

  for (std::size_t i : pivots) {
    for (std::size_t h = 0; h < i; ++h)
      if (a.at(i, h) != 0) {
        scan.violated_condition = "ii";
        scan.detail = "row " + std::to_string(i + 1) +
                      " has a nonzero entry left of the diagonal (column " +
                      std::to_string(h + 1) + ")";
        return scan;
      }
    if (a.at(i, i) != 1) {
      scan.violated_condition = "ii";
      scan.detail = "row " + std::to_string(i + 1) + " is nonzero but not pivotal (entry (" +
                    std::to_string(i + 1) + "," + std::to_string(i + 1) + ") is not 1)";
      return scan;
    }
  }
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t s = j + 1; s < pivots.size(); ++s)
      if (a.at(pivots[j], pivots[s]) != 0) {
        scan.violated_condition = "iii";
        scan.detail = "row " + std::to_string(pivots[j] + 1) +
                      " has a nonzero entry at pivotal column " + std::to_string(pivots[s] + 1);
        return scan;
      }

  scan.member = true;
  scan.pivots = std::move(pivots);
  return scan;
}

}  // namespace matfq

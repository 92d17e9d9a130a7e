// The subspace <-> left-ideal dictionary for M_n(F_q): equality and
// containment of principal left ideals, idempotent-generator enumeration,
// and the canonical rank-k idempotent family.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matfq/mat.hpp"

namespace matfq {

/// The distinguished idempotent generator of a left ideal: its nonzero rows
/// are an RREF basis of the ideal's row space, each placed at the row index
/// of its own pivot column. Members satisfy, for pivotal positions
/// i_1 < ... < i_k:
///   (i)   every non-pivotal row is zero,
///   (ii)  entry (i_j, i_j) = 1 and entries left of it in row i_j are zero,
///   (iii) entry (i_j, i_s) = 0 for every other pivotal column i_s.
struct CanonicalIdempotent {
  Mat matrix;                        // n x n, idempotent of rank |pivots|
  std::vector<std::size_t> pivots;   // 0-based, strictly increasing

  bool operator==(const CanonicalIdempotent& other) const {
    return pivots == other.pivots && matrix == other.matrix;
  }
};

/// A left ideal of M_n(F_q), addressed by the canonical key of its row space
/// together with its canonical idempotent generator.
struct IdealHandle {
  SubspaceKey key;
  std::size_t rank;
  CanonicalIdempotent canonical;
};

/// <m1> is contained in <m2>, decided by testing every row of m1 for
/// membership in the row space of m2.
bool left_ideal_contains(const Mat& m1, const Mat& m2);

/// <m1> = <m2>, i.e. equal row-space keys.
bool same_left_ideal(const Mat& m1, const Mat& m2);

/// [m1] = [m2] (right ideals), i.e. equal column-space keys.
bool same_right_ideal(const Mat& m1, const Mat& m2);

/// For idempotents r, s: true iff r*s = r and s*r = s, which holds exactly
/// when they generate the same left ideal. Throws std::invalid_argument when
/// an argument is not idempotent.
bool idempotents_same_ideal(const Mat& r, const Mat& s);

/// The three equivalent ways to recognize that r and s are idempotents
/// generating the same left ideal, each evaluated independently so their
/// agreement can be checked from outside.
struct IdempotentEquivalence {
  bool same_ideal;       // r, s both idempotent and equal row-space keys
  bool absorption;       // r*s = r and s*r = s
  bool reconstruction;   // r = s + (I - s)*r*s and s idempotent

  bool agree() const { return same_ideal == absorption && absorption == reconstruction; }
};

IdempotentEquivalence equivalence_conditions(const Mat& r, const Mat& s);

/// All idempotent generators of <s> for an idempotent s of rank k, i.e. the
/// set {s + (I-s)*m*s : m in M_n(F_q)}, of size exactly q^((n-k)k).
///
/// The parameterization is collapsed before enumeration: {(I-s)*m*s} is the
/// linear span of the images of the n^2 matrix units, so a basis of that
/// span is extracted first and only q^dim distinct combinations are formed.
/// Output is sorted by row-major entry codes. Throws std::invalid_argument
/// when s is not idempotent.
std::vector<Mat> idempotent_generators(const Mat& s);

/// The unique canonical idempotent whose row space equals `key`: basis row j
/// becomes matrix row pivot_cols[j]; all other rows are zero. The
/// zero-dimensional key maps to the zero matrix with no pivots (the zero
/// ideal's canonical generator).
CanonicalIdempotent canonical_idempotent_for_subspace(const SubspaceKey& key);

/// Mutually inverse bridges between subspaces and left ideals.
IdealHandle subspace_to_ideal(const SubspaceKey& key);
SubspaceKey ideal_to_subspace(const IdealHandle& h);

/// Every k-dimensional subspace of F_q^n exactly once, as RREF bases:
/// pivot-column sets in lexicographic order, then free entries in ascending
/// code order (row-major positions, first position most significant).
std::vector<SubspaceKey> enumerate_subspaces(std::size_t n, std::size_t k, const FieldPtr& f);

/// The canonical rank-k idempotent family of M_n(F_q), in the order induced
/// by enumerate_subspaces; its size is the Gaussian binomial [n choose k]_q
/// and distinct members generate distinct left ideals.
std::vector<CanonicalIdempotent> enumerate_canonical_idempotents(std::size_t n, std::size_t k,
                                                                 const FieldPtr& f);

/// Outcome of testing a square matrix for membership in the canonical
/// idempotent family (any k). Non-membership is a normal result carrying the
/// first violated condition, labeled (i)/(ii)/(iii) as in CanonicalIdempotent.
struct PivotalScan {
  bool member = false;
  std::vector<std::size_t> pivots;  // valid when member
  std::string violated_condition;   // "ii" or "iii" when !member
  std::string detail;
};

PivotalScan pivotal_positions(const Mat& a);

}  // namespace matfq

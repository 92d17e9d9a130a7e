// Exhaustive verifier for the left-ideal lattice of M_n(F_q).
//
// This module reconstructs every left ideal literally as the set
// {X*M : X in M_n(F_q)} from raw ring multiplication. It never uses row
// spaces, echelon forms, or any other result of the modules it is meant to
// check: ideal identity is decided by comparing member sets, closure under
// addition is asserted on the sets themselves, and ranks are obtained by
// expanding row spans element by element as raw sets. cross_check() then
// compares the reconstruction item by item against the counting formulas
// and canonical enumerations.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matfq/mat.hpp"

namespace matfq {

/// Matrices of M_n(F_q) are addressed by an integer code: row-major entries
/// as base-q digits, entry (0,0) least significant.
std::uint32_t mat_code(const Mat& m);
Mat mat_from_code(std::uint32_t code, std::size_t n, const FieldPtr& f);

/// One left ideal as an explicit matrix set (all lists sorted by code).
struct OracleIdeal {
  std::vector<std::uint32_t> member_matrices;
  std::size_t rank = 0;
  std::vector<std::uint32_t> idempotent_members;
  std::vector<std::uint32_t> generator_idempotents;
};

/// The full left-ideal lattice of M_n(F_q), reconstructed exhaustively.
/// Ideals are sorted by (rank, member list); containment_edges are the
/// covering pairs (subideal index, superideal index) of the inclusion order.
struct LatticeReport {
  std::size_t n = 0;
  unsigned q = 0;
  std::vector<OracleIdeal> ideals;
  std::vector<std::size_t> per_rank_ideal_counts;   // k = 0..n
  std::vector<std::size_t> per_rank_matrix_counts;  // k = 0..n
  std::vector<std::pair<std::size_t, std::size_t>> containment_edges;
};

inline constexpr std::uint64_t kDefaultOracleBound = std::uint64_t(1) << 20;

/// The exact set {X*m : X in M_n(F_q)}, sorted, verified closed under
/// addition. Requires q^(n^2) <= bound.
std::vector<Mat> brute_left_ideal(const Mat& m, std::uint64_t bound = kDefaultOracleBound);

/// Reconstructs the whole lattice: one <M> sweep per matrix, deduplicated by
/// member set; per-rank tallies, idempotent censuses, and covering edges.
/// Output is deterministic. Requires q^(n^2) <= bound.
LatticeReport brute_lattice(std::size_t n, const FieldPtr& f,
                            std::uint64_t bound = kDefaultOracleBound);

struct CheckVerdict {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample on failure
};

/// Item-by-item comparison of an oracle report against the theory side:
/// per-rank ideal counts vs Gaussian binomials, per-ideal generator counts
/// vs q^((n-k)k), rank censuses vs the closed form, ideal keys vs the
/// canonical idempotent family, and the containment order vs subspace
/// containment. Failures are data, not errors.
std::vector<CheckVerdict> cross_check(const LatticeReport& report, const FieldPtr& f);

}  // namespace matfq

// Exact counting for the left-ideal structure of M_n(F_q): Gaussian
// binomials, the canonical-family recurrence, per-ideal generator counts,
// and the rank census. All values are arbitrary-precision integers.
#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matfq/field.hpp"

namespace matfq {

using BigInt = boost::multiprecision::cpp_int;

/// [n choose k]_q: the number of k-dimensional subspaces of F_q^n and hence
/// of rank-k left ideals of M_n(F_q). Computed from the product form with
/// the full numerator multiplied out before one exact division (asserted).
BigInt gaussian_binomial(std::size_t n, std::size_t k, unsigned q);

/// Size of the canonical rank-k idempotent family by the recurrence
/// S(n,k) = S(n-1,k-1) + S(n-1,k)*q^k, memoized, with S(m,0) = S(m,m) = 1.
/// Always equals gaussian_binomial(n,k,q).
BigInt count_canonical_recurrence(std::size_t n, std::size_t k, unsigned q);

/// Number of idempotent generators of any rank-k left ideal: q^((n-k)k).
BigInt count_idempotent_generators(std::size_t n, std::size_t k, unsigned q);

/// Number of ordered k-tuples of linearly independent vectors in F_q^n:
/// (q^n - 1)(q^n - q)...(q^n - q^(k-1)); 1 for k = 0.
BigInt count_independent_tuples(std::size_t n, std::size_t k, unsigned q);

/// Number of rank-k matrices in M_n(F_q). Evaluated two ways — the closed
/// form q^(k(k-1)/2) * (prod_{i<k}(q^(n-i)-1))^2 / prod_{i<=k}(q^i-1) and the
/// product gaussian_binomial * count_independent_tuples (ideal count times
/// rank-k matrices per ideal) — which must agree exactly.
BigInt count_rank_k_matrices(std::size_t n, std::size_t k, unsigned q);

/// Per-rank table, k = 0..n, of the four counts. Internal consistency is
/// enforced before returning: ideals[k] = canonical_family_size[k] and
/// sum_k rank_matrices[k] = q^(n^2); a violation throws std::logic_error.
struct CountTable {
  std::size_t n;
  unsigned q;
  std::vector<BigInt> ideals;
  std::vector<BigInt> generators_per_ideal;
  std::vector<BigInt> rank_matrices;
  std::vector<BigInt> canonical_family_size;
};

CountTable count_table(std::size_t n, const FieldPtr& f);

}  // namespace matfq

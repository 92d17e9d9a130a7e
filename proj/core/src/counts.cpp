#include "matfq/counts.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace matfq {

namespace {

BigInt q_pow(unsigned q, std::size_t e) {
  return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
}

void require_range(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("rank k out of range 0..n");
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt quo, rem;
  boost::multiprecision::divide_qr(num, den, quo, rem);
  if (rem != 0) throw std::logic_error("count product is not exactly divisible");
  return quo;
}

}  // namespace

BigInt gaussian_binomial(std::size_t n, std::size_t k, unsigned q) {
  require_range(n, k);
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= q_pow(q, n - i) - 1;
    den *= q_pow(q, k - i) - 1;
  }
  return exact_div(num, den);
}

BigInt count_canonical_recurrence(std::size_t n, std::size_t k, unsigned q) {
  require_range(n, k);
  std::map<std::pair<std::size_t, std::size_t>, BigInt> memo;
  auto rec = [&](auto&& self, std::size_t m, std::size_t j) -> BigInt {
    if (j > m) return 0;
    if (j == 0 || j == m) return 1;
    auto it = memo.find({m, j});
    if (it != memo.end()) return it->second;
    BigInt value = self(self, m - 1, j - 1) + self(self, m - 1, j) * q_pow(q, j);
    memo.emplace(std::make_pair(m, j), value);
    return value;
  };
  return rec(rec, n, k);
}

BigInt count_idempotent_generators(std::size_t n, std::size_t k, unsigned q) {
  require_range(n, k);
  return q_pow(q, (n - k) * k);
}

BigInt count_independent_tuples(std::size_t n, std::size_t k, unsigned q) {
  require_range(n, k);
  BigInt out = 1;
  const BigInt qn = q_pow(q, n);
  for (std::size_t i = 0; i < k; ++i) out *= qn - q_pow(q, i);
  return out;
}

BigInt count_rank_k_matrices(std::size_t n, std::size_t k, unsigned q) {
  require_range(n, k);
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= q_pow(q, n - i) - 1;
    den *= q_pow(q, i + 1) - 1;
  }
  const BigInt closed = q_pow(q, k * (k - 1) / 2) * exact_div(num * num, den);
  const BigInt via_ideals = gaussian_binomial(n, k, q) * count_independent_tuples(n, k, q);
  if (closed != via_ideals)
    throw std::logic_error("rank-census closed form disagrees with the per-ideal product");
  return closed;
}

CountTable count_table(std::size_t n, const FieldPtr& f) {
  if (n < 1) throw std::invalid_argument("matrix size n must be >= 1");
  const unsigned q = f->q();
  CountTable t{n, q, {}, {}, {}, {}};
  BigInt census_sum = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    t.ideals.push_back(gaussian_binomial(n, k, q));
    t.generators_per_ideal.push_back(count_idempotent_generators(n, k, q));
    t.rank_matrices.push_back(count_rank_k_matrices(n, k, q));
    t.canonical_family_size.push_back(count_canonical_recurrence(n, k, q));
    if (t.ideals[k] != t.canonical_family_size[k])
      throw std::logic_error("canonical family size disagrees with the ideal count");
    census_sum += t.rank_matrices[k];
  }
  if (census_sum != q_pow(q, n * n))
    throw std::logic_error("rank census does not sum to q^(n^2)");
  return t;
}

}  // namespace matfq

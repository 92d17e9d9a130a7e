// Exact arithmetic in the finite field F_q, q = p^e.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace matfq {

/// Element of F_q, encoded as an integer code in [0, q): the base-p digit
/// vector of its polynomial representative (code = sum_i c_i p^i, where c_i
/// is the coefficient of x^i). Code 0 is the additive identity, code 1 the
/// multiplicative identity.
using Felt = std::uint16_t;

/// F_{p^e} with table-driven arithmetic.
///
/// For e > 1 elements are residues of F_p[x] modulo a monic irreducible
/// polynomial of degree e (coefficients stored constant term first). All
/// operation tables are precomputed at construction; instances are immutable
/// afterwards and safe to share across threads. The order is capped
/// (default 256) to keep enumeration workloads bounded.
class Field {
public:
  static constexpr unsigned kDefaultMaxOrder = 256;

  /// Builds F_{p^e}. When `modulus` is empty and e > 1, selects the
  /// lexicographically smallest monic irreducible polynomial of degree e
  /// over F_p, coefficients compared from the constant term upward. A
  /// supplied modulus must be monic of degree e with coefficients in [0,p)
  /// and irreducible over F_p (checked by trial division against all monic
  /// polynomials of degree <= e/2).
  ///
  /// Throws std::invalid_argument for non-prime p, e < 1, order above
  /// `max_order`, or a malformed/reducible modulus.
  explicit Field(unsigned p, unsigned e = 1, std::vector<unsigned> modulus = {},
                 unsigned max_order = kDefaultMaxOrder);

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned q() const { return q_; }

  /// Modulus coefficients, constant term first, length e+1, monic. For e = 1
  /// this is the canonical constant [0, 1] (the polynomial x) and is unused.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Felt add(Felt a, Felt b) const { return add_[idx(a, b)]; }
  Felt mul(Felt a, Felt b) const { return mul_[idx(a, b)]; }
  Felt neg(Felt a) const { return neg_[checked(a)]; }
  Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }

  /// Multiplicative inverse. Throws std::domain_error for a = 0.
  Felt inv(Felt a) const;

  /// a^k by repeated squaring; pow(0, 0) = 1.
  Felt pow(Felt a, unsigned long long k) const;

  /// All q elements in ascending code order: 0, 1, ..., q-1.
  std::vector<Felt> elements() const;

  /// Fields compare equal when they have identical (p, e, modulus); such
  /// fields are element-for-element interchangeable.
  bool operator==(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

private:
  std::size_t idx(Felt a, Felt b) const {
    return std::size_t(checked(a)) * q_ + checked(b);
  }
  Felt checked(Felt a) const;

  unsigned p_ = 0;
  unsigned e_ = 0;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Felt> add_;
  std::vector<Felt> mul_;
  std::vector<Felt> neg_;
  std::vector<Felt> inv_;  // inv_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

/// Shared-ownership constructor; matrices and enumerations hold FieldPtr.
FieldPtr make_field(unsigned p, unsigned e = 1, std::vector<unsigned> modulus = {},
                    unsigned max_order = Field::kDefaultMaxOrder);

/// Factors q = p^e (p prime) and builds the field. Throws
/// std::invalid_argument when q is not a prime power.
FieldPtr make_field_of_order(unsigned q, std::vector<unsigned> modulus = {},
                             unsigned max_order = Field::kDefaultMaxOrder);

bool is_prime(unsigned n);

}  // namespace matfq

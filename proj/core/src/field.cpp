#include "matfq/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace matfq {

namespace {

// Polynomials over F_p as coefficient vectors, constant term first. Trailing
// zeros permitted; degree() looks at the highest nonzero coefficient.
using Poly = std::vector<unsigned>;

int degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;  // zero polynomial
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (degree(a) < 0 || degree(b) < 0) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Remainder of f modulo a monic divisor d, in place.
void poly_mod(Poly& f, const Poly& d, unsigned p) {
  const int dd = degree(d);
  for (int i = degree(f); i >= dd && dd >= 0; i = degree(f)) {
    const unsigned c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      unsigned& t = f[i - dd + j];
      t = (t + p * c - c * d[j] % p) % p;
    }
  }
}

bool divides(const Poly& d, Poly f, unsigned p) {
  poly_mod(f, d, p);
  return degree(f) < 0;
}

// Trial division against every monic polynomial of degree 1..e/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const int e = degree(f);
  if (e <= 0) return false;
  if (e == 1) return true;
  for (int d = 1; 2 * d <= e; ++d) {
    Poly g(static_cast<std::size_t>(d) + 1, 0);
    g[d] = 1;
    unsigned long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (unsigned long long lo = 0; lo < count; ++lo) {
      unsigned long long v = lo;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree e over F_p,
// coefficients compared from the constant term upward.
Poly smallest_irreducible(unsigned p, unsigned e) {
  Poly f(e + 1, 0);
  f[e] = 1;
  std::vector<unsigned> digits(e, 0);
  while (true) {
    for (unsigned i = 0; i < e; ++i) f[i] = digits[i];
    if (is_irreducible(f, p)) return f;
    // advance (c_0, ..., c_{e-1}) lexicographically: last digit fastest
    int i = static_cast<int>(e) - 1;
    while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
    if (i < 0) throw std::logic_error("no irreducible polynomial found");
    ++digits[i];
  }
}

std::vector<unsigned> code_to_digits(unsigned code, unsigned p, unsigned e) {
  std::vector<unsigned> d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

unsigned digits_to_code(const std::vector<unsigned>& d, unsigned p, unsigned e) {
  unsigned code = 0;
  for (unsigned i = e; i-- > 0;) code = code * p + (i < d.size() ? d[i] : 0);
  return code;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus, unsigned max_order)
    : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");

  unsigned long long q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(e) +
                                  " exceeds the bound " + std::to_string(max_order));
  }
  if (q > 65535) throw std::invalid_argument("field order exceeds the element encoding range");
  q_ = static_cast<unsigned>(q);

  if (modulus.empty()) {
    modulus_ = (e == 1) ? Poly{0, 1} : smallest_irreducible(p, e);
  } else {
    if (modulus.size() != static_cast<std::size_t>(e) + 1)
      throw std::invalid_argument("modulus must have exactly e+1 coefficients");
    for (unsigned c : modulus)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(modulus, p))
      throw std::invalid_argument("modulus is reducible over F_p");
    modulus_ = std::move(modulus);
  }

  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  for (unsigned a = 0; a < q_; ++a) {
    const auto da = code_to_digits(a, p_, e_);
    std::vector<unsigned> nd(e_);
    for (unsigned i = 0; i < e_; ++i) nd[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Felt>(digits_to_code(nd, p_, e_));
    for (unsigned b = 0; b < q_; ++b) {
      const auto db = code_to_digits(b, p_, e_);
      std::vector<unsigned> s(e_);
      for (unsigned i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[std::size_t(a) * q_ + b] = static_cast<Felt>(digits_to_code(s, p_, e_));
      Poly prod = poly_mul(da, db, p_);
      poly_mod(prod, modulus_, p_);
      mul_[std::size_t(a) * q_ + b] = static_cast<Felt>(digits_to_code(prod, p_, e_));
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[std::size_t(a) * q_ + b] == 1) {
        inv_[a] = static_cast<Felt>(b);
        break;
      }
}

Felt Field::checked(Felt a) const {
  if (a >= q_) throw std::invalid_argument("element code " + std::to_string(a) + " out of range for F_" + std::to_string(q_));
  return a;
}

Felt Field::inv(Felt a) const {
  checked(a);
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
  return inv_[a];
}

Felt Field::pow(Felt a, unsigned long long k) const {
  checked(a);
  Felt acc = 1;
  Felt base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::vector<Felt> Field::elements() const {
  std::vector<Felt> out(q_);
  for (unsigned i = 0; i < q_; ++i) out[i] = static_cast<Felt>(i);
  return out;
}

FieldPtr make_field(unsigned p, unsigned e, std::vector<unsigned> modulus, unsigned max_order) {
  return std::make_shared<const Field>(p, e, std::move(modulus), max_order);
}

FieldPtr make_field_of_order(unsigned q, std::vector<unsigned> modulus, unsigned max_order) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  unsigned p = 0;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q prime
  unsigned e = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make_field(p, e, std::move(modulus), max_order);
}

}  // namespace matfq

#include "pgrowth/gf.hpp"

#include <algorithm>
#include <string>

namespace pgrowth {
namespace {

// Dense polynomials over GF(p), lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

std::size_t degree(const Poly& f) { return f.empty() ? 0 : f.size() - 1; }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on integers.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t qu = r / new_r;
    t = std::exchange(new_t, t - qu * new_t);
    r = std::exchange(new_r, r - qu * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  trim(out);
  return out;
}

// Remainder of a mod m; m monic-or-not, nonzero.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::uint64_t sub = factor * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool poly_is_zero(const Poly& f) { return f.empty(); }

// Trial division by every monic polynomial of degree 1..deg(f)/2. Fine at
// this scale: the divisor count is at most p^(k/2) <= 256 for q <= 2^16.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = degree(f);
  for (std::size_t d = 1; d * 2 <= k; ++d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      Poly div(d + 1, 0);
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      div[d] = 1;
      if (poly_is_zero(poly_mod(f, div, p))) return false;
    }
  }
  return true;
}

Poly to_poly(const FieldElement& a, std::uint32_t k) {
  Poly f(a.c.begin(), a.c.begin() + k);
  trim(f);
  return f;
}

FieldElement from_poly(const Poly& f) {
  FieldElement out{};
  for (std::size_t i = 0; i < f.size(); ++i)
    out.c[i] = static_cast<std::uint16_t>(f[i]);
  return out;
}

}  // namespace

Field Field::make(std::uint32_t q) {
  if (q < 2) throw PreconditionError("field order must be at least 2");
  if (q > 1u << 16)
    throw PreconditionError("field order exceeds the 2^16 cap");

  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime

  std::uint32_t k = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    throw NotAPrimePowerError(std::to_string(q) +
                              " has two distinct prime divisors");

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;

  if (k == 1) {
    f.modulus_ = {0, 1};  // the linear polynomial x
    return f;
  }

  // Lexicographically smallest monic irreducible of degree k, comparing
  // coefficient sequences low degree first. Enumerate (c0,...,c_{k-1}) as a
  // base-p odometer with c0 the most significant digit.
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < k; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Poly cand(k + 1, 0);
    std::uint64_t rest_code = code;
    for (std::uint32_t i = k; i-- > 0;) {
      cand[i] = static_cast<std::uint32_t>(rest_code % p);
      rest_code /= p;
    }
    cand[k] = 1;
    if (is_irreducible(cand, p)) {
      f.modulus_.assign(cand.begin(), cand.end());
      return f;
    }
  }
  throw Error("no irreducible polynomial found");  // unreachable: one always exists
}

FieldElement Field::one() const {
  FieldElement e{};
  e.c[0] = 1;
  return e;
}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= q_) throw PreconditionError("element index out of range");
  FieldElement e{};
  for (std::uint32_t i = 0; i < k_; ++i) {
    e.c[i] = static_cast<std::uint16_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint32_t Field::index(const FieldElement& a) const {
  std::uint32_t idx = 0;
  for (std::uint32_t i = k_; i-- > 0;) idx = idx * p_ + a.c[i];
  return idx;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out{};
  for (std::uint32_t i = 0; i < k_; ++i)
    out.c[i] = static_cast<std::uint16_t>((a.c[i] + b.c[i]) % p_);
  return out;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out{};
  for (std::uint32_t i = 0; i < k_; ++i)
    out.c[i] = static_cast<std::uint16_t>((a.c[i] + p_ - b.c[i]) % p_);
  return out;
}

FieldElement Field::neg(const FieldElement& a) const {
  return sub(FieldElement{}, a);
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (k_ == 1) {
    FieldElement out{};
    out.c[0] = static_cast<std::uint16_t>(std::uint64_t{a.c[0]} * b.c[0] % p_);
    return out;
  }
  Poly m(modulus_.begin(), modulus_.end());
  return from_poly(poly_mod(poly_mul(to_poly(a, k_), to_poly(b, k_), p_), m, p_));
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw DivisionByZeroError("inverse of zero");
  if (k_ == 1) {
    FieldElement out{};
    out.c[0] = static_cast<std::uint16_t>(inv_mod_p(a.c[0], p_));
    return out;
  }
  // Extended Euclid in GF(p)[x]: maintain t with t*a = r (mod modulus).
  Poly r(modulus_.begin(), modulus_.end());
  Poly new_r = to_poly(a, k_);
  Poly t;             // zero
  Poly new_t = {1};
  while (!poly_is_zero(new_r)) {
    // Divide r by new_r: quotient accumulation step of the Euclid loop.
    Poly quotient;
    Poly rem = r;
    const std::uint32_t lead_inv = inv_mod_p(new_r.back(), p_);
    while (rem.size() >= new_r.size() && !poly_is_zero(rem)) {
      const std::size_t shift = rem.size() - new_r.size();
      const std::uint32_t factor = static_cast<std::uint32_t>(
          std::uint64_t{rem.back()} * lead_inv % p_);
      if (quotient.size() < shift + 1) quotient.resize(shift + 1, 0);
      quotient[shift] = factor;
      for (std::size_t i = 0; i < new_r.size(); ++i) {
        const std::uint64_t sub = std::uint64_t{factor} * new_r[i] % p_;
        rem[shift + i] =
            static_cast<std::uint32_t>((rem[shift + i] + p_ - sub) % p_);
      }
      trim(rem);
    }
    r = std::exchange(new_r, rem);
    // t, new_t = new_t, t - quotient*new_t
    Poly q_new_t = poly_mul(quotient, new_t, p_);
    Poly next(std::max(t.size(), q_new_t.size()), 0);
    for (std::size_t i = 0; i < next.size(); ++i) {
      const std::uint32_t lhs = i < t.size() ? t[i] : 0;
      const std::uint32_t rhs = i < q_new_t.size() ? q_new_t[i] : 0;
      next[i] = (lhs + p_ - rhs) % p_;
    }
    trim(next);
    t = std::exchange(new_t, next);
  }
  // r is now gcd = nonzero scalar (modulus irreducible, a nonzero).
  const std::uint32_t scale = inv_mod_p(r[0], p_);
  Poly out = poly_mul(t, Poly{scale}, p_);
  Poly m(modulus_.begin(), modulus_.end());
  return from_poly(poly_mod(out, m, p_));
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

}  // namespace pgrowth

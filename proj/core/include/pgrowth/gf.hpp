#ifndef PGROWTH_GF_HPP
#define PGROWTH_GF_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "pgrowth/errors.hpp"

namespace pgrowth {

/// One element of GF(p^k) in polynomial representation: k residues mod p,
/// lowest degree first. Entries beyond k-1 are always zero, so default
/// comparison doubles as the canonical low-degree-first lexicographic order.
struct FieldElement {
  static constexpr std::size_t kMaxDegree = 16;

  std::array<std::uint16_t, kMaxDegree> c{};

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Arithmetic in GF(q) for q = p^k, q <= 2^16. The modulus is the
/// lexicographically smallest monic irreducible polynomial of degree k over
/// GF(p) (coefficients compared low degree first), so element indices and
/// everything derived from them are reproducible across runs and machines.
/// Immutable after construction; all operations are pure.
class Field {
 public:
  /// Factors q and selects the modulus. Throws NotAPrimePowerError when q has
  /// two distinct prime divisors, PreconditionError for q < 2 or q > 2^16.
  static Field make(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }

  /// Modulus coefficients, lowest degree first, length k+1, monic.
  const std::vector<std::uint16_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{}; }
  FieldElement one() const;

  /// Element with base-p digits of `index` as coefficients (c[i] = digit i).
  /// index must be < q. The inverse of index().
  FieldElement element(std::uint32_t index) const;
  std::uint32_t index(const FieldElement& a) const;

  bool is_zero(const FieldElement& a) const { return a == FieldElement{}; }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;

  /// Throws DivisionByZeroError for inv(0).
  FieldElement inv(const FieldElement& a) const;

  FieldElement pow(FieldElement a, std::uint64_t e) const;

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint16_t> modulus_;
};

}  // namespace pgrowth

#endif  // PGROWTH_GF_HPP

#pragma once

#include <cstdint>

#include "orbithodge/errors.hpp"

namespace orbithodge {

using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32749;

/// Integers modulo an odd prime that fits in 31 bits.
///
/// Residues are always kept canonical in [0, p).
class PrimeField {
 public:
  PrimeField() : PrimeField(kDefaultPrime) {}
  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t modulus() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff inv(Coeff a) const;

  // a - b*c
  Coeff sub_mul(Coeff a, Coeff b, Coeff c) const { return sub(a, mul(b, c)); }

  Coeff from_int(std::int64_t v) const;
  // Representative in (-p/2, p/2].
  std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace orbithodge

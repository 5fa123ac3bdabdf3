#include "orbithodge/field.hpp"

#include <string>

namespace orbithodge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus >= (1u << 31)) {
    throw UsageError("modulus " + std::to_string(modulus) + " does not fit in 31 bits");
  }
  if (modulus == 2) {
    throw UsageError("characteristic 2 is not supported");
  }
  if (!is_prime(modulus)) {
    throw UsageError("modulus " + std::to_string(modulus) + " is not prime");
  }
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero");
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

}  // namespace orbithodge

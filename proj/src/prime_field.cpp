#include "solvdeg/prime_field.hpp"

#include <string>

#include "solvdeg/errors.hpp"

namespace solvdeg {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw PreconditionError("field modulus must be below 2^31");
  if (!is_prime(p)) throw PreconditionError("field modulus " + std::to_string(p) + " is not prime");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw PreconditionError("division by zero in prime field");
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

std::int64_t PrimeField::to_signed(Coeff a) const noexcept {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_) : a;
}

}  // namespace solvdeg

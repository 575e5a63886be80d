#pragma once

#include <cstdint>

namespace solvdeg {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in Z/pZ for a prime 2 <= p < 2^31. Elements are kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    const Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  Coeff from_int(std::int64_t v) const noexcept;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Coeff a) const noexcept;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace solvdeg

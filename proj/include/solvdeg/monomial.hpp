#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace solvdeg {

/// A monic term x^e over a fixed number of variables, stored densely.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  std::vector<unsigned> exponents() const;

  bool divides(const Monomial& other) const noexcept;
  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  /// this / other; throws if `other` does not divide this.
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  /// Drops or appends trailing variables.
  Monomial truncated(std::size_t nvars) const;
  Monomial extended(std::size_t nvars, unsigned last_exponent = 0) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// All monomials of exactly degree d in n variables (unordered).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);
/// All monomials of degree <= d in n variables (unordered).
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, unsigned d);

}  // namespace solvdeg

template <>
struct std::hash<solvdeg::Monomial> {
  std::size_t operator()(const solvdeg::Monomial& m) const noexcept { return m.hash(); }
};

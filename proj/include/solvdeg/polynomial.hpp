#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solvdeg/monomial.hpp"
#include "solvdeg/prime_field.hpp"
#include "solvdeg/term_order.hpp"

namespace solvdeg {

struct Ring {
  PrimeField field;
  std::vector<std::string> vars;

  std::size_t nvars() const noexcept { return vars.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool operator==(const Ring&) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars);
/// x1 ... xn
RingPtr make_ring(std::uint32_t p, std::size_t nvars);
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
/// Throws DimensionError when the rings differ.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Coeff coeff;
  bool operator==(const Term&) const = default;
};

/// A polynomial over a prime field. Terms are kept strictly decreasing under
/// the polynomial's own term order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring, TermOrder order = TermOrder::drl());

  static Polynomial constant(RingPtr ring, std::int64_t c, TermOrder order = TermOrder::drl());
  static Polynomial variable(RingPtr ring, std::size_t index, TermOrder order = TermOrder::drl());
  static Polynomial term(RingPtr ring, Monomial m, Coeff c, TermOrder order = TermOrder::drl());
  /// Like terms are combined and zero coefficients dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms, TermOrder order = TermOrder::drl());

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const { return ring_->field; }
  std::size_t nvars() const { return ring_->nvars(); }
  TermOrder order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Coeff coefficient(const Monomial& m) const;

  /// Leading term under the polynomial's own order.
  const Term& leading() const;
  const Monomial& lm() const { return leading().mono; }
  Coeff lc() const { return leading().coeff; }

  Polynomial with_order(TermOrder order) const;
  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  /// Terms of exactly degree d.
  Polynomial homogeneous_part(unsigned d) const;
  Coeff evaluate(std::span<const Coeff> point) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial pow(unsigned e) const;

  /// Same ring and same set of terms, regardless of the term order.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Printed in DRL-descending order with signed coefficients, e.g. "x1^2 - x2".
  std::string to_string() const;

  /// this - c * m * g, where the caller guarantees the result only needs a
  /// merge (g sorted in this order).
  void sub_scaled_inplace(Coeff c, const Monomial& m, const Polynomial& g);

 private:
  RingPtr ring_;
  TermOrder order_ = TermOrder::drl();
  std::vector<Term> terms_;

  void sort_and_combine();
};

std::string monomial_to_string(const Monomial& m, const Ring& ring);

/// The order-maximal term of f; throws ZeroPolynomialError for f = 0.
Term leading_term(const Polynomial& f, TermOrder order);

/// Remainder of f on division by G: the leftmost reducible term is reduced by
/// the first element of G whose leading term divides it.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, TermOrder order);

/// An ordered generating set. Generators are nonzero and share a ring.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const Polynomial& operator[](std::size_t i) const { return gens_[i]; }

  bool is_homogeneous() const;
  int max_degree() const;
  int min_degree() const;
  /// Drops repeated generators, keeping the first occurrence.
  Ideal canonicalized() const;
  Ideal with_order(TermOrder order) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

}  // namespace solvdeg

#pragma once

#include <compare>
#include <string>

#include "solvdeg/monomial.hpp"

namespace solvdeg {

/// Term orders on monomials. For DrlTLast and BarSigma the last variable is
/// the homogenizing variable t.
class TermOrder {
 public:
  enum class Kind { Lex, Drl, DrlTLast, BarSigma };

  constexpr TermOrder() = default;
  static constexpr TermOrder lex() { return TermOrder(Kind::Lex, Kind::Lex); }
  static constexpr TermOrder drl() { return TermOrder(Kind::Drl, Kind::Drl); }
  static constexpr TermOrder drl_t_last() { return TermOrder(Kind::DrlTLast, Kind::DrlTLast); }
  /// The extension of `inner` (Lex or Drl on the first n-1 variables) that
  /// breaks ties by the power of t.
  static TermOrder bar_sigma(TermOrder inner);

  Kind kind() const noexcept { return kind_; }
  /// The inner order of a BarSigma extension.
  TermOrder inner() const;
  bool degree_compatible() const noexcept { return kind_ == Kind::Drl || kind_ == Kind::DrlTLast; }
  std::string name() const;
  static TermOrder from_name(const std::string& name);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend constexpr bool operator==(TermOrder a, TermOrder b) noexcept {
    return a.kind_ == b.kind_ && a.inner_ == b.inner_;
  }

 private:
  constexpr TermOrder(Kind k, Kind inner) : kind_(k), inner_(inner) {}
  Kind kind_ = Kind::Drl;
  Kind inner_ = Kind::Drl;
};

/// Orders monomials with `a` before `b` when `a` is larger; for sorting.
struct DescendingBy {
  TermOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.greater(a, b); }
};

}  // namespace solvdeg

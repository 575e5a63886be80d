#include "solvdeg/term_order.hpp"

#include "solvdeg/errors.hpp"

namespace solvdeg {

namespace {

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t n) {
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::strong_ordering drl_compare(const Monomial& a, const Monomial& b, std::size_t n) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  return revlex_tail(a, b, n);
}

}  // namespace

TermOrder TermOrder::bar_sigma(TermOrder inner) {
  if (inner.kind_ != Kind::Lex && inner.kind_ != Kind::Drl)
    throw PreconditionError("bar_sigma needs lex or drl as inner order");
  return TermOrder(Kind::BarSigma, inner.kind_);
}

TermOrder TermOrder::inner() const {
  if (kind_ != Kind::BarSigma) throw PreconditionError("order has no inner order");
  return TermOrder(inner_, inner_);
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Drl:
      return "drl";
    case Kind::DrlTLast:
      return "drl_t_last";
    case Kind::BarSigma:
      return "bar_sigma(" + inner().name() + ")";
  }
  return "?";
}

TermOrder TermOrder::from_name(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "drl") return drl();
  if (name == "drl_t_last") return drl_t_last();
  if (name == "bar_sigma(lex)") return bar_sigma(lex());
  if (name == "bar_sigma(drl)") return bar_sigma(drl());
  throw PreconditionError("unknown term order '" + name + "'");
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw DimensionError("cannot compare monomials of different lengths");
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(a, b, n);
    case Kind::Drl:
    case Kind::DrlTLast:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tail(a, b, n);
    case Kind::BarSigma: {
      if (n == 0) return std::strong_ordering::equal;
      auto c = inner_ == Kind::Lex ? lex_compare(a, b, n - 1) : drl_compare(a, b, n - 1);
      if (c != 0) return c;
      return a[n - 1] <=> b[n - 1];
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace solvdeg

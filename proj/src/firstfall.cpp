#include "solvdeg/firstfall.hpp"

#include <unordered_map>

#include "solvdeg/errors.hpp"
#include "solvdeg/homogenize.hpp"
#include "solvdeg/linalg.hpp"

namespace solvdeg {

TruncatedRing::TruncatedRing(RingPtr ring) : ring_(std::move(ring)) {}

bool TruncatedRing::is_standard(const Monomial& m) const {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] >= q()) return false;
  return true;
}

std::vector<Monomial> TruncatedRing::basis(unsigned e) const {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(ring_->nvars(), e))
    if (is_standard(m)) out.push_back(m);
  return out;
}

Polynomial TruncatedRing::reduce(const Polynomial& f) const {
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (is_standard(t.mono)) terms.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(terms), f.order());
}

namespace {

void check_quadratics(std::span<const Polynomial> F, const TruncatedRing& B) {
  if (F.empty()) throw PreconditionError("syzygies need at least one polynomial");
  for (const auto& f : F) {
    require_same_ring(f.ring(), B.ring());
    if (f.is_zero() || f.degree() != 2 || !f.is_homogeneous())
      throw PreconditionError("first fall degree is defined for homogeneous quadratics only");
    if (B.reduce(f).is_zero()) throw PreconditionError("generator vanishes in the truncated ring");
  }
}

using Index = std::unordered_map<Monomial, std::size_t>;

Index index_of(const std::vector<Monomial>& mons) {
  Index idx;
  for (std::size_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k], k);
  return idx;
}

/// Writes the B-image of m * f into slot i of a vector in B_e^r.
void place(Row& row, std::size_t slot, std::size_t width, const Polynomial& f, const Monomial& m, Coeff c,
           const TruncatedRing& B, const Index& idx) {
  const PrimeField& F = B.ring()->field;
  for (const auto& t : f.terms()) {
    const Monomial mm = t.mono * m;
    if (!B.is_standard(mm)) continue;
    auto& cell = row[slot * width + idx.at(mm)];
    cell = F.add(cell, F.mul(t.coeff, c));
  }
}

}  // namespace

std::size_t syzygy_dim(std::span<const Polynomial> F, unsigned e) {
  const TruncatedRing B(F.empty() ? RingPtr{} : F.front().ring());
  check_quadratics(F, B);
  const auto src = B.basis(e);
  const auto dst = B.basis(e + 2);
  if (src.empty()) return 0;
  const auto idx = index_of(dst);
  Matrix M(F.size() * src.size(), dst.size());
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t k = 0; k < src.size(); ++k) {
      Row row(dst.size(), 0);
      place(row, 0, dst.size(), F[i], src[k], 1, B, idx);
      std::copy(row.begin(), row.end(), M.row(i * src.size() + k).begin());
    }
  return left_kernel_dim(M, B.ring()->field);
}

std::size_t trivial_syzygy_dim(std::span<const Polynomial> F, unsigned e) {
  const TruncatedRing B(F.empty() ? RingPtr{} : F.front().ring());
  check_quadratics(F, B);
  const auto target = B.basis(e);
  if (target.empty()) return 0;
  const auto idx = index_of(target);
  const std::size_t width = target.size();
  const std::size_t r = F.size();
  const PrimeField& field = B.ring()->field;
  EchelonBasis span(field, r * width);
  if (e >= 2)
    for (const auto& m : B.basis(e - 2))
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
          Row row(r * width, 0);
          place(row, i, width, F[j], m, 1, B, idx);
          place(row, j, width, F[i], m, field.neg(1), B, idx);
          span.insert(std::move(row));
        }
  const unsigned field_deg = 2 * (B.q() - 1);
  if (e >= field_deg)
    for (std::size_t i = 0; i < r; ++i) {
      const Polynomial power = B.reduce(B.reduce(F[i]).pow(B.q() - 1));
      if (power.is_zero()) continue;
      for (const auto& m : B.basis(e - field_deg)) {
        Row row(r * width, 0);
        place(row, i, width, power, m, 1, B, idx);
        span.insert(std::move(row));
      }
    }
  return span.rank();
}

FirstFallReport first_fall_degree(const Ideal& I) {
  if (I.size() == 0) throw PreconditionError("first fall degree needs generators");
  for (const auto& f : I.gens())
    if (f.degree() != 2) throw PreconditionError("first fall degree is defined for quadratic systems only");
  const Ideal top = top_ideal(I);
  const TruncatedRing B(I.ring());
  FirstFallReport rep;
  for (unsigned e = 0; e <= B.top_degree(); ++e) {
    const auto syz = syzygy_dim(top.gens(), e);
    const auto triv = trivial_syzygy_dim(top.gens(), e);
    rep.dims.push_back({e, syz, triv});
    if (syz > triv) {
      rep.first_fall_degree = static_cast<int>(e) + 2;
      break;
    }
  }
  return rep;
}

}  // namespace solvdeg

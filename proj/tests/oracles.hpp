#pragma once

// Brute-force references shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "solvdeg/invariants.hpp"
#include "solvdeg/solver.hpp"

namespace oracle {

using namespace solvdeg;

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<unsigned>(rng() % (max_exp + 1)));
  return m;
}

/// Number of monomials of degree d outside I, by enumeration.
inline long long standard_monomials(const MonomialIdeal& I, unsigned d) {
  long long c = 0;
  for (const auto& m : monomials_of_degree(I.nvars(), d))
    if (!I.contains(m)) ++c;
  return c;
}

inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 4;
  std::vector<Monomial> gens;
  const std::size_t count = 1 + rng() % 5;
  for (std::size_t k = 0; k < count; ++k) {
    auto m = random_monomial(rng, n, 3);
    if (m.is_one()) m.set(rng() % n, 1);
    gens.push_back(m);
  }
  return MonomialIdeal(n, gens);
}


inline std::vector<VarietyPoint> exhaustive_zeros(const Ideal& I) {
  const std::size_t n = I.nvars();
  const Coeff p = I.ring()->field.modulus();
  std::vector<VarietyPoint> out;
  VarietyPoint pt(n, 0);
  while (true) {
    if (std::all_of(I.gens().begin(), I.gens().end(), [&](const Polynomial& f) { return f.evaluate(pt) == 0; }))
      out.push_back(pt);
    std::size_t pos = 0;
    while (pos < n && ++pt[pos] == p) pt[pos++] = 0;
    if (pos == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}


inline Polynomial truncate(const Polynomial& f, unsigned q) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    bool ok = true;
    for (std::size_t i = 0; i < t.mono.size(); ++i) ok = ok && t.mono[i] < q;
    if (ok) kept.push_back(t);
  }
  return Polynomial::from_terms(f.ring(), kept, f.order());
}

inline std::vector<Monomial> truncated_basis(std::size_t n, unsigned e, unsigned q) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(n, e)) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && m[i] < q;
    if (ok) out.push_back(m);
  }
  return out;
}

inline std::size_t log_q(std::size_t count, unsigned q) {
  std::size_t d = 0;
  while (count > 1) {
    if (count % q != 0) throw std::logic_error("span size is not a power of q");
    count /= q;
    ++d;
  }
  return d;
}

/// Counts the kernel of B_e^r -> B_{e+2} by enumerating every vector.
inline std::size_t brute_syzygy_dim(const std::vector<Polynomial>& F, unsigned e) {
  const auto& R = F.front().ring();
  const unsigned q = R->field.modulus();
  const auto basis = truncated_basis(R->nvars(), e, q);
  const std::size_t N = F.size() * basis.size();
  std::vector<Coeff> v(N, 0);
  std::size_t zeros = 0;
  while (true) {
    auto sum = Polynomial(R);
    for (std::size_t i = 0; i < F.size(); ++i)
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (v[i * basis.size() + k]) sum = sum + F[i] * Polynomial::term(R, basis[k], v[i * basis.size() + k]);
    if (truncate(sum, q).is_zero()) ++zeros;
    std::size_t pos = 0;
    while (pos < N && ++v[pos] == q) v[pos++] = 0;
    if (pos == N) break;
  }
  return log_q(zeros, q);
}

inline std::vector<Coeff> coords(const Polynomial& f, const std::vector<Monomial>& basis) {
  std::vector<Coeff> out;
  for (const auto& m : basis) out.push_back(f.coefficient(m));
  return out;
}

/// Trivial syzygy generators of degree e as vectors in B_e^r.
inline std::vector<std::vector<Coeff>> trivial_generators(const std::vector<Polynomial>& F, unsigned e) {
  const auto& R = F.front().ring();
  const unsigned q = R->field.modulus();
  const auto basis = truncated_basis(R->nvars(), e, q);
  const std::size_t r = F.size();
  std::vector<std::vector<Coeff>> gens;
  auto make = [&](std::vector<Polynomial> comps) {
    std::vector<Coeff> v;
    for (auto& c : comps) {
      auto part = coords(truncate(c, q), basis);
      v.insert(v.end(), part.begin(), part.end());
    }
    gens.push_back(v);
  };
  if (e >= 2)
    for (const auto& m : monomials_of_degree(R->nvars(), e - 2)) {
      const auto M = Polynomial::term(R, m, 1);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
          std::vector<Polynomial> comps(r, Polynomial(R));
          comps[i] = M * F[j];
          comps[j] = -(M * F[i]);
          make(comps);
        }
    }
  if (e >= 2 * (q - 1))
    for (const auto& m : monomials_of_degree(R->nvars(), e - 2 * (q - 1))) {
      const auto M = Polynomial::term(R, m, 1);
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<Polynomial> comps(r, Polynomial(R));
        comps[i] = M * truncate(F[i], q).pow(q - 1);
        make(comps);
      }
    }
  return gens;
}

/// Size of the span of the trivial generators, by closing a set under addition.
inline std::size_t brute_trivial_dim(const std::vector<Polynomial>& F, unsigned e) {
  const unsigned q = F.front().field().modulus();
  const auto N = F.size() * truncated_basis(F.front().nvars(), e, q).size();
  std::set<std::vector<Coeff>> span{std::vector<Coeff>(N, 0)};
  for (const auto& g : trivial_generators(F, e)) {
    std::set<std::vector<Coeff>> next;
    for (const auto& v : span)
      for (unsigned c = 0; c < q; ++c) {
        auto w = v;
        for (std::size_t k = 0; k < N; ++k) w[k] = (w[k] + c * g[k]) % q;
        next.insert(w);
      }
    span = std::move(next);
  }
  return log_q(span.size(), q);
}

inline Polynomial random_quadratic(std::mt19937_64& rng, const RingPtr& R) {
  const unsigned q = R->field.modulus();
  while (true) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(R->nvars(), 2)) ts.push_back({m, static_cast<Coeff>(rng() % q)});
    auto f = Polynomial::from_terms(R, ts, TermOrder::drl());
    if (!truncate(f, q).is_zero()) return f;
  }
}

}  // namespace oracle

#include "solvdeg/random_systems.hpp"

namespace solvdeg {

namespace {

Coeff uniform(std::mt19937_64& rng, std::uint32_t p) { return static_cast<Coeff>(rng() % p); }

Coeff nonzero(std::mt19937_64& rng, std::uint32_t p) { return static_cast<Coeff>(1 + rng() % (p - 1)); }

}  // namespace

Polynomial random_dense_polynomial(std::mt19937_64& rng, const RingPtr& ring, unsigned deg) {
  const std::uint32_t p = ring->field.modulus();
  std::vector<Term> terms;
  for (const auto& m : monomials_up_to_degree(ring->nvars(), deg)) terms.push_back({m, uniform(rng, p)});
  const auto top = monomials_of_degree(ring->nvars(), deg);
  terms.push_back({top[rng() % top.size()], nonzero(rng, p)});
  auto f = Polynomial::from_terms(ring, std::move(terms));
  while (f.degree() != static_cast<int>(deg)) f += Polynomial::term(ring, top.front(), nonzero(rng, p));
  return f;
}

Polynomial random_sparse_polynomial(std::mt19937_64& rng, const RingPtr& ring, unsigned deg, std::size_t terms) {
  const std::uint32_t p = ring->field.modulus();
  const auto all = monomials_up_to_degree(ring->nvars(), deg);
  const auto top = monomials_of_degree(ring->nvars(), deg);
  while (true) {
    std::vector<Term> ts{{top[rng() % top.size()], nonzero(rng, p)}};
    for (std::size_t k = 1; k < terms; ++k) ts.push_back({all[rng() % all.size()], nonzero(rng, p)});
    auto f = Polynomial::from_terms(ring, std::move(ts));
    if (f.degree() == static_cast<int>(deg)) return f;
  }
}

Ideal random_macaulay_system(std::uint64_t seed, std::uint32_t p, std::size_t n, unsigned max_deg) {
  std::mt19937_64 rng(seed);
  auto ring = make_ring(p, n);
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k <= n; ++k) {
    const unsigned d = 2 + static_cast<unsigned>(rng() % (max_deg - 1));
    gens.push_back(random_dense_polynomial(rng, ring, d));
  }
  return Ideal(ring, std::move(gens));
}

Ideal random_chain_system(std::uint64_t seed, std::uint32_t p, std::size_t max_vars, unsigned max_deg) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + rng() % max_vars;
  auto ring = make_ring(p, n);
  const std::size_t r = 1 + rng() % (n + 1);
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < r; ++k) {
    const unsigned d = 1 + static_cast<unsigned>(rng() % max_deg);
    gens.push_back(random_sparse_polynomial(rng, ring, d, 2 + rng() % 3));
  }
  // the constant-free case would be homogeneous for single-term inputs
  if (Ideal(ring, gens).is_homogeneous()) gens.front() += Polynomial::constant(ring, 1);
  return Ideal(ring, std::move(gens));
}

Ideal random_cubic_triple(std::uint64_t seed, std::uint32_t p) {
  std::mt19937_64 rng(seed);
  auto ring = make_ring(p, {"x", "y"});
  std::vector<Polynomial> gens;
  for (int k = 0; k < 3; ++k) gens.push_back(random_dense_polynomial(rng, ring, 3));
  return Ideal(ring, std::move(gens));
}

}  // namespace solvdeg

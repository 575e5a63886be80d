#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "solvdeg/polynomial.hpp"

namespace solvdeg {

/// Every monomial of degree <= deg gets a uniform coefficient; the degree-deg
/// part is kept nonzero.
Polynomial random_dense_polynomial(std::mt19937_64& rng, const RingPtr& ring, unsigned deg);
/// At most `terms` random monomials of degree <= deg, one of them of degree deg.
Polynomial random_sparse_polynomial(std::mt19937_64& rng, const RingPtr& ring, unsigned deg, std::size_t terms);

/// n + 1 dense polynomials in n variables with degrees in [2, max_deg], for
/// the Macaulay-bound suites. Inhomogeneous by construction.
Ideal random_macaulay_system(std::uint64_t seed, std::uint32_t p, std::size_t n, unsigned max_deg);

/// A sparse inhomogeneous system with n <= max_vars variables, 1..n+1
/// generators and degrees <= max_deg, for the chain suite.
Ideal random_chain_system(std::uint64_t seed, std::uint32_t p, std::size_t max_vars, unsigned max_deg);

/// Three dense cubics in two variables.
Ideal random_cubic_triple(std::uint64_t seed, std::uint32_t p);

}  // namespace solvdeg

#include "solvdeg/invariants.hpp"

#include <algorithm>
#include <bit>

#include "solvdeg/errors.hpp"
#include "solvdeg/groebner.hpp"
#include "solvdeg/homogenize.hpp"
#include "solvdeg/linalg.hpp"

namespace solvdeg {

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens)
    if (g.size() != nvars) throw DimensionError("monomial generator has the wrong length");
  std::sort(gens.begin(), gens.end(), DescendingBy{TermOrder::drl()});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && gens[j].divides(gens[i]);
    if (!redundant) gens_.push_back(gens[i]);
  }
  std::reverse(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

Monomial MonomialIdeal::lcm() const {
  Monomial l(nvars_);
  for (const auto& g : gens_) l = l.lcm(g);
  return l;
}

int MonomialIdeal::max_generator_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, static_cast<int>(g.degree()));
  return d;
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
  auto gens = gens_;
  gens.push_back(m);
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> gens;
  for (const auto& g : gens_) gens.push_back(g.quotient(g.gcd(m)));
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal initial_ideal(const Ideal& I, TermOrder order) {
  std::vector<Monomial> lts;
  for (const auto& g : buchberger(I, order).elements) lts.push_back(g.lm());
  return MonomialIdeal(I.nvars(), std::move(lts));
}

int monomial_krull_dim(const MonomialIdeal& I) {
  if (I.is_unit()) return -1;
  const std::size_t n = I.nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.gens()) {
    std::uint32_t mask = 0;
    for (auto v : g.support()) mask |= 1u << v;
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t S = 0; S < (1u << n); ++S) {
    const int size = std::popcount(S);
    if (size <= best) continue;
    if (std::none_of(supports.begin(), supports.end(), [S](std::uint32_t g) { return (g & ~S) == 0; })) best = size;
  }
  return best;
}

bool is_zero_dimensional(const Ideal& I, bool projective) {
  if (projective && !I.is_homogeneous())
    throw PreconditionError("projective zero-dimensionality needs a homogeneous ideal");
  const int dim = monomial_krull_dim(initial_ideal(I, TermOrder::drl()));
  return projective ? dim <= 1 : dim <= 0;
}

namespace {

using IntPoly = std::vector<long long>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly shift(const IntPoly& a, unsigned k) {
  if (a.empty()) return a;
  IntPoly r(k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

/// a * (1 - z^k)
IntPoly times_one_minus(const IntPoly& a, unsigned k) {
  IntPoly r = a;
  r.resize(a.size() + k, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] -= a[i];
  trim(r);
  return r;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!gens[i].coprime(gens[j])) return false;
  return true;
}

/// Numerator N with HS(R/I) = N(z) / (1 - z)^n.
IntPoly numerator(const MonomialIdeal& I) {
  if (I.is_zero()) return {1};
  if (I.is_unit()) return {};
  const auto& gens = I.gens();
  if (pairwise_coprime(gens)) {
    IntPoly r{1};
    for (const auto& g : gens) r = times_one_minus(r, g.degree());
    return r;
  }
  // Pivot on the variable in the most generators, to its smallest positive power.
  std::vector<int> count(I.nvars(), 0);
  std::vector<unsigned> low(I.nvars(), ~0u);
  for (const auto& g : gens)
    for (auto v : g.support()) {
      ++count[v];
      low[v] = std::min(low[v], g[v]);
    }
  const auto v = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  const Monomial p = Monomial::variable(I.nvars(), v, low[v]);
  return add(numerator(I.plus(p)), shift(numerator(I.quotient(p)), p.degree()));
}

HilbertSeries from_numerator(IntPoly N, int n) {
  HilbertSeries hs;
  if (N.empty()) return hs;
  int ell = n;
  // divide by (1 - z) while N(1) = 0
  while (ell > 0) {
    long long at_one = 0;
    for (auto c : N) at_one += c;
    if (at_one != 0) break;
    IntPoly q(N.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < N.size(); ++i) {
      acc += N[i];
      q[i] = acc;
    }
    N = q;
    trim(N);
    --ell;
  }
  hs.h = std::move(N);
  hs.ell = ell;
  return hs;
}

}  // namespace

int HilbertSeries::ireg() const {
  if (h.empty()) return 0;
  return h_degree() - ell + 1;
}

std::vector<long long> HilbertSeries::hilbert_function(unsigned up_to) const {
  std::vector<long long> series(up_to + 1, 0);
  for (std::size_t i = 0; i < h.size() && i <= up_to; ++i) series[i] = h[i];
  for (int k = 0; k < ell; ++k)
    for (std::size_t i = 1; i <= up_to; ++i) series[i] += series[i - 1];
  return series;
}

HilbertSeries hilbert_series(const MonomialIdeal& I) {
  return from_numerator(numerator(I), static_cast<int>(I.nvars()));
}

HilbertSeries hilbert_series(const Ideal& I) {
  if (!I.is_homogeneous()) throw PreconditionError("Hilbert series needs a homogeneous ideal");
  return hilbert_series(initial_ideal(I, TermOrder::drl()));
}

int index_of_regularity(const Ideal& I) { return hilbert_series(I).ireg(); }

long long BettiTable::operator()(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long v) {
  if (v != 0) entries_[{i, j}] += v;
}

int BettiTable::pd() const {
  int p = -1;
  for (const auto& [ij, v] : entries_) p = std::max(p, ij.first);
  return p;
}

int BettiTable::reg() const {
  if (entries_.empty()) throw UndefinedInvariant("regularity of the zero ideal is undefined");
  int r = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [ij, v] : entries_) r = std::max(r, ij.second - ij.first);
  return r;
}

BettiTable betti_table(const MonomialIdeal& I, std::uint32_t p) {
  BettiTable table;
  if (I.is_zero()) return table;
  if (I.is_unit()) {
    table.add(0, 0, 1);
    return table;
  }
  const PrimeField F(p);
  const std::size_t n = I.nvars();
  const Monomial top = I.lcm();
  const Coeff minus_one = F.neg(1);

  Monomial b(n);
  while (true) {
    std::uint32_t support = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (b[k] > 0) support |= 1u << k;
    if (support != 0) {
      // Koszul complex of R/I in multidegree b: basis e_S with x^(b - e_S) nonzero in R/I.
      std::vector<std::vector<std::uint32_t>> basis(n + 1);
      for (std::uint32_t S = support;; S = (S - 1) & support) {
        Monomial m = b;
        for (std::size_t k = 0; k < n; ++k)
          if (S >> k & 1u) m.set(k, m[k] - 1);
        if (!I.contains(m)) basis[std::popcount(S)].push_back(S);
        if (S == 0) break;
      }
      std::vector<std::size_t> ranks(n + 2, 0);
      for (std::size_t j = 1; j <= n; ++j) {
        if (basis[j].empty() || basis[j - 1].empty()) continue;
        Matrix d(basis[j].size(), basis[j - 1].size());
        for (std::size_t r = 0; r < basis[j].size(); ++r) {
          const std::uint32_t S = basis[j][r];
          for (std::size_t k = 0; k < n; ++k) {
            if (!(S >> k & 1u)) continue;
            const std::uint32_t T = S & ~(1u << k);
            const auto it = std::find(basis[j - 1].begin(), basis[j - 1].end(), T);
            if (it == basis[j - 1].end()) continue;
            const bool odd = std::popcount(S & ((1u << k) - 1)) % 2 == 1;
            d.at(r, static_cast<std::size_t>(it - basis[j - 1].begin())) = odd ? minus_one : 1;
          }
        }
        ranks[j] = rank(d, F);
      }
      for (std::size_t j = 1; j <= n; ++j) {
        const long long h = static_cast<long long>(basis[j].size()) - static_cast<long long>(ranks[j]) -
                            static_cast<long long>(ranks[j + 1]);
        table.add(static_cast<int>(j) - 1, static_cast<int>(b.degree()), h);
      }
    }
    // next multidegree in the box [0, top]
    std::size_t k = 0;
    while (k < n && b[k] == top[k]) b.set(k++, 0);
    if (k == n) break;
    b.set(k, b[k] + 1);
  }
  return table;
}

int cm_regularity(const MonomialIdeal& I) {
  if (I.is_zero()) throw UndefinedInvariant("regularity of the zero ideal is undefined");
  return betti_table(I).reg();
}

RegularityReport reg_via_initial(const Ideal& I, bool assert_generic_coordinates) {
  if (!I.is_homogeneous()) throw PreconditionError("reg_via_initial needs a homogeneous ideal");
  const auto in = initial_ideal(I, TermOrder::drl());
  RegularityReport rep;
  rep.value = cm_regularity(in);
  rep.zero_dimensional = monomial_krull_dim(in) <= 1;
  rep.generic_coordinates_asserted = assert_generic_coordinates;
  rep.exact = rep.zero_dimensional || assert_generic_coordinates;
  return rep;
}

int dreg_faugere(const Ideal& I) {
  const Ideal top = top_ideal(I);
  if (monomial_krull_dim(initial_ideal(top, TermOrder::drl())) > 0)
    throw UndefinedInvariant("dregF undefined: I^top_d != R_d for all d (R/I^top is not Artinian)");
  return index_of_regularity(top);
}

}  // namespace solvdeg

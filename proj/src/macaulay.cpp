#include "solvdeg/macaulay.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "solvdeg/errors.hpp"

namespace solvdeg {

Polynomial MacaulayMatrix::row_polynomial(std::size_t r, const RingPtr& ring) const {
  std::vector<Term> terms;
  const auto row = entries.row(r);
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) terms.push_back({columns[c], row[c]});
  return Polynomial::from_terms(ring, std::move(terms), order);
}

std::vector<Monomial> macaulay_columns(std::size_t nvars, unsigned d, TermOrder order, bool homogeneous) {
  auto cols = homogeneous ? monomials_of_degree(nvars, d) : monomials_up_to_degree(nvars, d);
  std::sort(cols.begin(), cols.end(), DescendingBy{order});
  return cols;
}

namespace {

using ColumnIndex = std::unordered_map<Monomial, std::size_t>;

ColumnIndex index_columns(const std::vector<Monomial>& cols) {
  ColumnIndex idx;
  idx.reserve(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) idx.emplace(cols[c], c);
  return idx;
}

Row to_row(const Polynomial& f, const ColumnIndex& idx, std::size_t ncols) {
  Row row(ncols, 0);
  for (const auto& t : f.terms()) row[idx.at(t.mono)] = t.coeff;
  return row;
}

Polynomial from_row(const Row& row, const std::vector<Monomial>& cols, const RingPtr& ring, TermOrder order) {
  std::vector<Term> terms;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) terms.push_back({cols[c], row[c]});
  return Polynomial::from_terms(ring, std::move(terms), order);
}

MacaulayMatrix build(const Ideal& I, unsigned d, TermOrder order, bool homogeneous) {
  if (homogeneous && !I.is_homogeneous())
    throw PreconditionError("homogeneous Macaulay matrix needs homogeneous generators");
  MacaulayMatrix M;
  M.degree = d;
  M.homogeneous = homogeneous;
  M.order = order;
  M.columns = macaulay_columns(I.nvars(), d, order, homogeneous);
  const auto idx = index_columns(M.columns);
  std::vector<Row> rows;
  for (std::size_t j = 0; j < I.size(); ++j) {
    const int dj = I[j].degree();
    if (dj > static_cast<int>(d)) continue;
    const unsigned room = d - static_cast<unsigned>(dj);
    auto mults = homogeneous ? monomials_of_degree(I.nvars(), room) : monomials_up_to_degree(I.nvars(), room);
    std::sort(mults.begin(), mults.end(), DescendingBy{order});
    for (const auto& m : mults) {
      M.labels.push_back({m, j, false});
      rows.push_back(to_row(I[j].mul_term(m, 1), idx, M.columns.size()));
    }
  }
  M.entries = Matrix(rows.size(), M.columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), M.entries.row(r).begin());
  return M;
}

}  // namespace

MacaulayMatrix build_macaulay(const Ideal& I, int d, TermOrder order, bool homogeneous) {
  if (d < 1) throw PreconditionError("Macaulay matrix degree must be at least 1");
  return build(I, static_cast<unsigned>(d), order, homogeneous);
}

MacaulayMatrix rref(const MacaulayMatrix& M, const PrimeField& field) {
  MacaulayMatrix out = M;
  out.entries = rref(M.entries, field);
  for (auto& label : out.labels) label = {Monomial(M.columns.empty() ? 0 : M.columns.front().size()), 0, true};
  return out;
}

bool same_labeled_matrix(const MacaulayMatrix& affine, const MacaulayMatrix& projective) {
  if (affine.degree != projective.degree || affine.rows() != projective.rows() ||
      affine.cols() != projective.cols())
    return false;
  const unsigned d = affine.degree;
  for (std::size_t c = 0; c < affine.cols(); ++c) {
    const auto& m = affine.columns[c];
    if (m.extended(m.size() + 1, d - m.degree()) != projective.columns[c]) return false;
  }
  for (std::size_t r = 0; r < affine.rows(); ++r) {
    const auto& a = affine.labels[r];
    const auto& p = projective.labels[r];
    if (a.generator != p.generator) return false;
    const unsigned pad = p.multiplier.degree() - std::min(p.multiplier.degree(), a.multiplier.degree());
    if (a.multiplier.extended(a.multiplier.size() + 1, pad) != p.multiplier) return false;
  }
  return affine.entries == projective.entries;
}

namespace {

/// Basis of the row space intersected with polynomials of degree < d, in the
/// original column coordinates. Columns are regrouped degree-first so that
/// the intersection is read off the echelon form for any term order.
std::vector<Row> lower_degree_part(const EchelonBasis& basis, const std::vector<Monomial>& cols, unsigned d,
                                   const PrimeField& field, bool degree_compatible) {
  std::vector<Row> out;
  if (degree_compatible) {
    for (auto& row : basis.rref_rows()) {
      const auto pivot = std::find_if(row.begin(), row.end(), [](Coeff c) { return c != 0; }) - row.begin();
      if (cols[pivot].degree() < d) out.push_back(std::move(row));
    }
    return out;
  }
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return cols[a].degree() > cols[b].degree(); });
  const std::size_t top = static_cast<std::size_t>(
      std::count_if(cols.begin(), cols.end(), [d](const Monomial& m) { return m.degree() == d; }));
  EchelonBasis permuted(field, cols.size());
  for (const auto& row : basis.rref_rows()) {
    Row p(cols.size());
    for (std::size_t k = 0; k < perm.size(); ++k) p[k] = row[perm[k]];
    permuted.insert(std::move(p));
  }
  for (const auto& p : permuted.rref_rows()) {
    const auto pivot = static_cast<std::size_t>(std::find_if(p.begin(), p.end(), [](Coeff c) { return c != 0; }) - p.begin());
    if (pivot < top) continue;
    Row row(cols.size(), 0);
    for (std::size_t k = 0; k < perm.size(); ++k) row[perm[k]] = p[k];
    out.push_back(std::move(row));
  }
  return out;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

}  // namespace

XlResult xl_groebner(const Ideal& I, TermOrder order, XlOptions options) {
  if (I.size() == 0) throw PreconditionError("the Macaulay loop needs at least one generator");
  const auto& ring = I.ring();
  const auto& field = ring->field;
  const std::size_t n = I.nvars();
  const GroebnerBasis reference = buchberger(I, order);
  const bool homogeneous = I.is_homogeneous();

  XlResult result;
  result.report.order = order;
  result.report.mutants = options.mutants;

  std::vector<Polynomial> carried;  // span of the previous degree, fed forward
  std::vector<Polynomial> found;    // homogeneous case: rows of all degrees so far
  std::vector<Monomial> seen_lts;

  for (int di = std::max(0, I.min_degree());; ++di) {
    if (di > options.degree_cap) throw DegreeCapExceeded(options.degree_cap);
    const unsigned d = static_cast<unsigned>(di);
    const MacaulayMatrix M = build(I, d, order, homogeneous);
    const auto idx = index_columns(M.columns);
    EchelonBasis basis(field, M.cols());
    TraceStep step{d, M.rows(), M.cols(), 0, 0, 0};
    for (std::size_t r = 0; r < M.rows(); ++r) {
      const auto row = M.entries.row(r);
      basis.insert(Row(row.begin(), row.end()));
    }
    if (!homogeneous && options.mutants) {
      for (const auto& p : carried) basis.insert(to_row(p, idx, M.cols()));
      step.rows += carried.size();
      EchelonBasis multiplied(field, M.cols());
      for (bool grew = true; grew;) {
        grew = false;
        for (const auto& low : lower_degree_part(basis, M.columns, d, field, order.degree_compatible())) {
          if (!multiplied.insert(low)) continue;
          for (std::size_t v = 0; v < n; ++v) {
            Row shifted(M.cols(), 0);
            for (std::size_t c = 0; c < low.size(); ++c)
              if (low[c] != 0) shifted[idx.at(M.columns[c] * Monomial::variable(n, v))] = low[c];
            ++step.mutants;
            if (basis.insert(std::move(shifted))) grew = true;
          }
        }
      }
      step.rows += step.mutants;
    }
    step.rank = basis.rank();

    std::vector<Polynomial> polys;
    for (const auto& row : basis.rref_rows()) polys.push_back(from_row(row, M.columns, ring, order));
    for (const auto& p : polys)
      if (!divisible_by_any(p.lm(), seen_lts)) {
        ++step.new_leading_terms;
      }
    for (const auto& p : polys) seen_lts.push_back(p.lm());
    result.report.trace.push_back(step);

    if (homogeneous)
      found.insert(found.end(), polys.begin(), polys.end());
    else
      carried = polys;
    const auto& pool = homogeneous ? found : polys;
    std::vector<Monomial> lts;
    for (const auto& p : pool) lts.push_back(p.lm());
    const bool covered = std::all_of(reference.elements.begin(), reference.elements.end(),
                                     [&](const Polynomial& g) { return divisible_by_any(g.lm(), lts); });
    if (!covered) continue;

    std::vector<Polynomial> candidates;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      bool minimal = true;
      for (std::size_t j = 0; j < pool.size() && minimal; ++j)
        if (j != k && lts[j].divides(lts[k]) && (lts[j] != lts[k] || j < k)) minimal = false;
      if (minimal) candidates.push_back(pool[k]);
    }
    auto reduced = reduce_basis(std::move(candidates), order);
    if (!is_groebner(reduced, order) || reduced != reference.elements)
      throw InvariantViolation("Macaulay rows cover the leading terms but do not reduce to the Groebner basis");
    result.basis = {std::move(reduced), order, true};
    result.report.solving_degree = di;
    return result;
  }
}

int solving_degree(const Ideal& I, TermOrder order, XlOptions options) {
  return xl_groebner(I, order, options).report.solving_degree;
}

}  // namespace solvdeg

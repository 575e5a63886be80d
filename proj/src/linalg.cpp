#include "solvdeg/linalg.hpp"

#include "solvdeg/errors.hpp"

namespace solvdeg {

namespace {

std::size_t first_nonzero(const Row& row, std::size_t from = 0) {
  for (std::size_t c = from; c < row.size(); ++c)
    if (row[c] != 0) return c;
  return row.size();
}

/// row -= factor * other, starting at column `from`.
void axpy(Row& row, Coeff factor, const Row& other, std::size_t from, const PrimeField& F) {
  const std::uint64_t p = F.modulus();
  const std::uint64_t neg = p - factor;
  for (std::size_t c = from; c < row.size(); ++c)
    if (other[c] != 0) row[c] = static_cast<Coeff>((row[c] + neg * other[c]) % p);
}

}  // namespace

std::size_t EchelonBasis::reduce(Row& row) const {
  if (row.size() != cols_) throw DimensionError("row length does not match the basis");
  for (const auto& [pivot, stored] : rows_) {
    const Coeff c = row[pivot];
    if (c != 0) axpy(row, c, stored, pivot, field_);
  }
  return first_nonzero(row);
}

bool EchelonBasis::insert(Row row) {
  const std::size_t pivot = reduce(row);
  if (pivot == cols_) return false;
  const Coeff inv = field_.inv(row[pivot]);
  for (std::size_t c = pivot; c < cols_; ++c) row[c] = field_.mul(row[c], inv);
  rows_.emplace(pivot, std::move(row));
  return true;
}

bool EchelonBasis::contains(Row row) const { return reduce(row) == cols_; }

std::vector<Row> EchelonBasis::rref_rows() const {
  std::vector<Row> out;
  std::vector<std::size_t> piv;
  for (const auto& [p, r] : rows_) {
    out.push_back(r);
    piv.push_back(p);
  }
  for (std::size_t k = out.size(); k-- > 0;)
    for (std::size_t i = 0; i < k; ++i) {
      const Coeff c = out[i][piv[k]];
      if (c != 0) axpy(out[i], c, out[k], piv[k], field_);
    }
  return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& entry : rows_) out.push_back(entry.first);
  return out;
}

namespace {

EchelonBasis basis_of(const Matrix& m, const PrimeField& field) {
  EchelonBasis basis(field, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    basis.insert(Row(row.begin(), row.end()));
  }
  return basis;
}

}  // namespace

std::size_t rank(const Matrix& m, const PrimeField& field) { return basis_of(m, field).rank(); }

Matrix rref(const Matrix& m, const PrimeField& field) {
  Matrix out(m.rows(), m.cols());
  const auto rows = basis_of(m, field).rref_rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = rows[r][c];
  return out;
}

std::size_t left_kernel_dim(const Matrix& m, const PrimeField& field) { return m.rows() - rank(m, field); }

}  // namespace solvdeg

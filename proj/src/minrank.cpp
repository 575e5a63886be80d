#include "solvdeg/minrank.hpp"

#include <random>
#include <sstream>

#include "solvdeg/errors.hpp"
#include "solvdeg/invariants.hpp"
#include "solvdeg/macaulay.hpp"

namespace solvdeg {

std::string grading_name(MatrixGrading g) {
  switch (g) {
    case MatrixGrading::Generic: return "generic";
    case MatrixGrading::RowGraded: return "row-graded";
    case MatrixGrading::ColumnGraded: return "column-graded";
    case MatrixGrading::LinearPencil: return "linear-pencil";
  }
  return "generic";
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, MatrixGrading grading)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), grading_(grading) {
  if (!ring_) throw PreconditionError("matrix needs a ring");
  entries_.assign(rows * cols, Polynomial(ring_));
}

bool PolyMatrix::is_homogeneous() const {
  for (const auto& f : entries_)
    if (!f.is_homogeneous()) return false;
  for (std::size_t i = 0; i + 1 < rows_; ++i)
    for (std::size_t k = i + 1; k < rows_; ++k)
      for (std::size_t j = 0; j + 1 < cols_; ++j)
        for (std::size_t l = j + 1; l < cols_; ++l)
          if (!(at(i, j) * at(k, l) - at(i, l) * at(k, j)).is_homogeneous()) return false;
  return true;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix T(ring_, cols_, rows_);
  if (grading_ == MatrixGrading::RowGraded) T.grading_ = MatrixGrading::ColumnGraded;
  else if (grading_ == MatrixGrading::ColumnGraded) T.grading_ = MatrixGrading::RowGraded;
  else T.grading_ = grading_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  return T;
}

PolyMatrix PolyMatrix::swapped_rows(std::size_t a, std::size_t b) const {
  PolyMatrix out = *this;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(out.at(a, j), out.at(b, j));
  return out;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).to_string();
    out << "]\n";
  }
  return out.str();
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix linear_pencil(const RingPtr& ring, const std::vector<ConstMatrix>& matrices) {
  if (matrices.size() != ring->nvars()) throw DimensionError("pencil needs one matrix per variable");
  if (matrices.empty() || matrices.front().empty()) throw DimensionError("pencil of empty matrices");
  const std::size_t rows = matrices.front().size();
  const std::size_t cols = matrices.front().front().size();
  PolyMatrix M(ring, rows, cols, MatrixGrading::LinearPencil);
  for (std::size_t v = 0; v < matrices.size(); ++v) {
    if (matrices[v].size() != rows) throw DimensionError("ragged pencil");
    const auto x = Polynomial::variable(ring, v);
    for (std::size_t i = 0; i < rows; ++i) {
      if (matrices[v][i].size() != cols) throw DimensionError("ragged pencil");
      for (std::size_t j = 0; j < cols; ++j)
        if (matrices[v][i][j] != 0) M.at(i, j) += x.scaled(ring->field.from_int(matrices[v][i][j]));
    }
  }
  return M;
}

namespace {

Polynomial laplace(const PolyMatrix& M, const std::vector<std::size_t>& rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return M.at(rows[0], cols[0]);
  const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  Polynomial det(M.ring());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& entry = M.at(rows[0], cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub = cols;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
    const auto term = entry * laplace(M, rest, sub);
    det = (k % 2 == 0) ? det + term : det - term;
  }
  return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

}  // namespace

Polynomial determinant(const PolyMatrix& M) {
  if (M.rows() != M.cols()) throw DimensionError("determinant of a non-square matrix");
  if (M.rows() == 0) return Polynomial::constant(M.ring(), 1);
  std::vector<std::size_t> idx(M.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return laplace(M, idx, idx);
}

std::vector<Polynomial> all_minors(const PolyMatrix& M, std::size_t t) {
  if (t < 1 || t > std::min(M.rows(), M.cols())) throw PreconditionError("minor size out of range");
  std::vector<Polynomial> out;
  const auto rsets = subsets(M.rows(), t);
  const auto csets = subsets(M.cols(), t);
  for (const auto& rs : rsets)
    for (const auto& cs : csets) out.push_back(laplace(M, rs, cs));
  return out;
}

Ideal minors(const PolyMatrix& M, std::size_t t) {
  std::vector<Polynomial> gens;
  for (auto& m : all_minors(M, t))
    if (!m.is_zero()) gens.push_back(std::move(m));
  return Ideal(M.ring(), std::move(gens));
}

std::string kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::GenericLinear: return "generic-linear";
    case InstanceKind::RowGraded: return "row-graded";
    case InstanceKind::ColumnGraded: return "column-graded";
  }
  return "generic-linear";
}

InstanceKind kind_from_name(const std::string& name) {
  if (name == "generic-linear") return InstanceKind::GenericLinear;
  if (name == "row-graded") return InstanceKind::RowGraded;
  if (name == "column-graded") return InstanceKind::ColumnGraded;
  throw PreconditionError("unknown instance kind: " + name);
}

std::vector<std::vector<std::size_t>> variable_blocks(std::size_t n, std::size_t blocks) {
  if (blocks == 0 || n < blocks) throw PreconditionError("not enough variables for the variable blocks");
  std::vector<std::vector<std::size_t>> out(blocks);
  std::size_t v = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t size = n / blocks + (b < n % blocks ? 1 : 0);
    for (std::size_t k = 0; k < size; ++k) out[b].push_back(v++);
  }
  return out;
}

PolyMatrix gen_instance(InstanceKind kind, std::size_t r, std::size_t s, std::size_t n, std::uint32_t p,
                        std::uint64_t seed) {
  if (r == 0 || r > s) throw PreconditionError("instance shape needs 1 <= r <= s");
  if (n == 0) throw PreconditionError("instance needs at least one variable");
  auto ring = make_ring(p, n);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> blocks;
  MatrixGrading grading = MatrixGrading::Generic;
  if (kind == InstanceKind::RowGraded) {
    blocks = variable_blocks(n, r);
    grading = MatrixGrading::RowGraded;
  } else if (kind == InstanceKind::ColumnGraded) {
    blocks = variable_blocks(n, s);
    grading = MatrixGrading::ColumnGraded;
  } else {
    blocks = variable_blocks(n, 1);
  }
  PolyMatrix M(ring, r, s, grading);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const auto& block = kind == InstanceKind::RowGraded ? blocks[i]
                          : kind == InstanceKind::ColumnGraded ? blocks[j]
                                                               : blocks[0];
      std::vector<Term> terms;
      for (std::size_t v : block) terms.push_back({Monomial::variable(n, v), static_cast<Coeff>(rng() % p)});
      M.at(i, j) = Polynomial::from_terms(ring, std::move(terms));
    }
  return M;
}

int eagon_northcott_bound(const PolyMatrix& M) {
  const std::size_t r = M.rows(), s = M.cols();
  if (r > s) throw PreconditionError("bound needs r <= s");
  int sum = 0;
  auto deg = [&](std::size_t i, std::size_t j) {
    const auto& f = M.at(i, j);
    if (f.is_zero()) throw PreconditionError("degree profile undefined for a zero entry");
    return f.degree();
  };
  for (std::size_t i = 0; i < r; ++i) sum += deg(i, i);
  for (std::size_t j = r; j < s; ++j) sum += deg(r - 1, j);
  return sum - static_cast<int>(s) + static_cast<int>(r);
}

MinRankReport minrank_experiment(const PolyMatrix& M, std::size_t t, std::optional<std::uint64_t> seed) {
  if (!M.is_homogeneous()) throw PreconditionError("minrank experiment needs a homogeneous matrix");
  const Ideal I = minors(M, t);
  if (I.size() == 0) throw PreconditionError("all minors vanish");
  MinRankReport rep;
  rep.r = M.rows();
  rep.s = M.cols();
  rep.t = t;
  rep.n = M.ring()->nvars();
  rep.seed = seed;
  if (t == std::min(rep.r, rep.s)) {
    try {
      rep.bound = eagon_northcott_bound(rep.r <= rep.s ? M : M.transposed());
    } catch (const PreconditionError&) {
      rep.bound.reset();
    }
  }
  rep.solvdeg = solving_degree(I, TermOrder::drl());
  const int dim = monomial_krull_dim(initial_ideal(I, TermOrder::drl()));
  rep.height = static_cast<int>(rep.n) - dim;
  rep.expected_height = static_cast<int>((rep.r - t + 1) * (rep.s - t + 1));
  rep.height_ok = rep.height == rep.expected_height;
  return rep;
}

}  // namespace solvdeg

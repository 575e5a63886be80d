#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvdeg/polynomial.hpp"

namespace solvdeg {

enum class MatrixGrading { Generic, RowGraded, ColumnGraded, LinearPencil };

std::string grading_name(MatrixGrading g);

/// Matrix of polynomials over a common ring, stored row-major.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, MatrixGrading grading = MatrixGrading::Generic);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  MatrixGrading grading() const noexcept { return grading_; }
  void set_grading(MatrixGrading g) noexcept { grading_ = g; }

  Polynomial& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

  /// Entries and 2-minors are homogeneous.
  bool is_homogeneous() const;
  PolyMatrix transposed() const;
  PolyMatrix swapped_rows(std::size_t a, std::size_t b) const;
  std::string to_string() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  MatrixGrading grading_;
  std::vector<Polynomial> entries_;
};

using ConstMatrix = std::vector<std::vector<std::int64_t>>;

/// sum_i x_i * M_i, one matrix per ring variable.
PolyMatrix linear_pencil(const RingPtr& ring, const std::vector<ConstMatrix>& matrices);

Polynomial determinant(const PolyMatrix& M);

/// All t x t minors as polynomials, zeros included; row subsets outer,
/// column subsets inner, both in lexicographic order.
std::vector<Polynomial> all_minors(const PolyMatrix& M, std::size_t t);
/// Ideal of the nonzero t-minors.
Ideal minors(const PolyMatrix& M, std::size_t t);

enum class InstanceKind { GenericLinear, RowGraded, ColumnGraded };

std::string kind_name(InstanceKind k);
InstanceKind kind_from_name(const std::string& name);

/// Variables split into `blocks` contiguous groups, as even as possible.
std::vector<std::vector<std::size_t>> variable_blocks(std::size_t n, std::size_t blocks);

/// Pseudo-random matrix of linear forms: generic-linear entries use all
/// variables, graded kinds use the variable block of their row or column.
PolyMatrix gen_instance(InstanceKind kind, std::size_t r, std::size_t s, std::size_t n, std::uint32_t p,
                        std::uint64_t seed);

struct MinRankReport {
  std::size_t r = 0, s = 0, t = 0, n = 0;
  std::optional<int> bound;  // Eagon-Northcott regularity when t = r
  int solvdeg = 0;
  int height = 0;
  int expected_height = 0;
  bool height_ok = false;
  std::optional<std::uint64_t> seed;
};

/// Degree part of the Eagon-Northcott formula for maximal minors.
int eagon_northcott_bound(const PolyMatrix& M);

/// Measures solvdeg_DRL of I_t(M) and checks the height hypothesis through
/// the codimension of the DRL initial ideal.
MinRankReport minrank_experiment(const PolyMatrix& M, std::size_t t, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace solvdeg

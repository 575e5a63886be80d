#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "solvdeg/prime_field.hpp"

namespace solvdeg {

using Row = std::vector<Coeff>;

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

/// Incrementally maintained row space in semi-echelon form. Each stored row
/// has a distinct pivot (its first nonzero column) normalized to 1.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t cols) : field_(field), cols_(cols) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces `row` against the stored rows (in place). Returns the pivot of
  /// the remainder, or cols() when it reduced to zero.
  std::size_t reduce(Row& row) const;
  /// Adds a row; returns true if the rank grew.
  bool insert(Row row);
  bool contains(Row row) const;

  /// The unique reduced row echelon basis, ordered by increasing pivot.
  std::vector<Row> rref_rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  PrimeField field_;
  std::size_t cols_;
  std::map<std::size_t, Row> rows_;
};

std::size_t rank(const Matrix& m, const PrimeField& field);
/// Reduced row echelon form with the same shape; zero rows at the bottom.
Matrix rref(const Matrix& m, const PrimeField& field);
/// Dimension of {v : v * m = 0}, i.e. rows - rank.
std::size_t left_kernel_dim(const Matrix& m, const PrimeField& field);

}  // namespace solvdeg

#pragma once

#include <string>
#include <vector>

#include "solvdeg/groebner.hpp"
#include "solvdeg/homogenize.hpp"
#include "solvdeg/linalg.hpp"
#include "solvdeg/polynomial.hpp"

namespace solvdeg {

struct RowLabel {
  Monomial multiplier;
  std::size_t generator = 0;
  /// Rows produced by elimination carry no (multiplier, generator) meaning.
  bool synthetic = false;
  bool operator==(const RowLabel&) const = default;
};

struct MacaulayMatrix {
  unsigned degree = 0;
  bool homogeneous = false;
  TermOrder order;
  std::vector<Monomial> columns;  // strictly decreasing under `order`
  std::vector<RowLabel> labels;
  Matrix entries{0, 0};

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }
  Polynomial row_polynomial(std::size_t r, const RingPtr& ring) const;
};

/// Columns of M_d: monomials of degree d (homogeneous) or <= d, decreasing.
std::vector<Monomial> macaulay_columns(std::size_t nvars, unsigned d, TermOrder order, bool homogeneous);

/// Rows m * f_j with deg(m f_j) = d (homogeneous) or <= d, ordered by
/// generator index and then by decreasing multiplier.
MacaulayMatrix build_macaulay(const Ideal& I, int d, TermOrder order, bool homogeneous);
MacaulayMatrix rref(const MacaulayMatrix& M, const PrimeField& field);

/// M_d(I) under DRL and M~_d(I~) under DRL_T_LAST agree after homogenizing
/// row multipliers and column monomials to degree d.
bool same_labeled_matrix(const MacaulayMatrix& affine, const MacaulayMatrix& projective);

struct TraceStep {
  unsigned d = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t new_leading_terms = 0;
  std::size_t mutants = 0;
};

struct SolveReport {
  int solving_degree = 0;
  std::vector<TraceStep> trace;
  TermOrder order;
  bool mutants = true;
};

struct XlOptions {
  bool mutants = true;
  int degree_cap = 30;
};

struct XlResult {
  GroebnerBasis basis;
  SolveReport report;
};

/// Eliminates Macaulay matrices of increasing degree until their row space
/// contains a Groebner basis of I. With mutants on, reduced rows of degree
/// below d are multiplied by monomials up to degree d and fed back in.
XlResult xl_groebner(const Ideal& I, TermOrder order, XlOptions options = {});
int solving_degree(const Ideal& I, TermOrder order, XlOptions options = {});

}  // namespace solvdeg

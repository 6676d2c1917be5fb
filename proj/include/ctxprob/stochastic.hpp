#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "ctxprob/classical.hpp"
#include "ctxprob/rational.hpp"

namespace ctxprob {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact verdict for a conditional probability matrix. Sums over Undefined rows (or
// columns touching one) are themselves Undefined.
struct StochasticVerdict {
  bool row_stochastic = false;
  bool doubly_stochastic = false;
  bool partial = false;  // at least one Undefined row
  std::vector<CondProbEntry> row_sums, col_sums;
  std::vector<std::string> violations;
};

// Tolerance-based verdict for a real matrix.
struct StochasticVerdictReal {
  bool row_stochastic = false;
  bool doubly_stochastic = false;
  std::vector<double> row_sums, col_sums;
  std::vector<std::string> violations;
};

// row_stochastic: every fully Defined row sums to exactly 1.
// doubly_stochastic: square, no Undefined rows, and column sums are exactly 1 too.
StochasticVerdict classify_stochastic(const CondProbMatrix& m);

// Same checks within tol. Throws DomainError when entries leave [0-tol, 1+tol].
StochasticVerdictReal classify_stochastic(const Eigen::MatrixXd& m, double tol = 1e-10);

// One vertex of a decomposition: cols[r] is the column holding the single 1 of row r.
// Permutation terms are additionally bijective.
template <class Coeff>
struct DecompositionTerm {
  Coeff coeff;
  std::vector<int> cols;
};

template <class Coeff>
struct Decomposition {
  std::string kind;  // "permutation" or "row-vertex"
  std::vector<DecompositionTerm<Coeff>> terms;
};

using RealDecomposition = Decomposition<double>;
using RationalDecomposition = Decomposition<Rational>;

// Birkhoff decomposition of a doubly stochastic n x n matrix into at most (n-1)^2 + 1
// permutation matrices, by repeated extraction of a perfect matching on the positive
// support (entry positive iff > tol; rows scanned in order, columns tried lowest index
// first) with the minimal matched entry as coefficient. The term bound is enforced: if
// the greedy ever exceeds it, an exact Caratheodory pruning pass brings it back.
// Throws DomainError("not doubly stochastic") on bad input and "matching failure ..."
// when thresholding starves the support.
RealDecomposition birkhoff_decompose(const Eigen::MatrixXd& m, double tol = 1e-12);
RationalDecomposition birkhoff_decompose(const RationalMatrix& m);

// Decomposition of a row-stochastic n x m matrix into at most n(m-1) + 1 vertices of
// the row-stochastic polytope (0/1 matrices with one 1 per row): every round each row
// picks its leftmost positive entry and the minimum across rows is extracted.
RealDecomposition row_polytope_decompose(const Eigen::MatrixXd& m, double tol = 1e-12);
RationalDecomposition row_polytope_decompose(const RationalMatrix& m);

// Sum of coeff * vertex, for round-trip checks.
Eigen::MatrixXd reconstruct(const RealDecomposition& d, int rows, int cols);
RationalMatrix reconstruct(const RationalDecomposition& d, int rows, int cols);

}  // namespace ctxprob

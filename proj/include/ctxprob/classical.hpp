#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ctxprob/partition.hpp"
#include "ctxprob/rational.hpp"
#include "ctxprob/states.hpp"

namespace ctxprob {

// Convex weights over the states of a family, one per 1-based state index.
struct Measure {
  std::vector<Rational> weights;

  // All weights nonnegative and summing to exactly 1. Throws DomainError.
  void validate() const;
};

// One conditional probability, or Undefined (a 0/0 the measure cannot resolve).
struct CondProbEntry {
  bool defined = false;
  Rational p;

  static CondProbEntry undefined() { return {}; }
  static CondProbEntry of(Rational value) { return {true, std::move(value)}; }
};

// entry(i,j) = P(col atom j | row atom i). Rows are all-or-nothing: a row is either
// fully Defined or fully Undefined.
struct CondProbMatrix {
  std::string row_context_name, col_context_name;
  std::vector<std::string> row_atoms, col_atoms;
  std::vector<std::vector<CondProbEntry>> entries;

  int rows() const { return static_cast<int>(row_atoms.size()); }
  int cols() const { return static_cast<int>(col_atoms.size()); }
  bool row_defined(int i) const { return entries[i].empty() || entries[i][0].defined; }
  bool fully_defined() const;
};

// P(atom) = sum of weights over the atom's label.
Rational atom_probability(const PartitionLabeling& labeling, const Measure& measure,
                          std::string_view atom);

// Conditional probabilities between two contexts of one logic. Entries that no measure
// can move are resolved first: disjoint labels give 0 and containment of the row label
// gives 1. The remaining entries evaluate weight(row ^ col)/weight(row); when that hits
// 0/0 the whole row becomes Undefined, as does a row whose label is empty.
CondProbMatrix classical_cond_prob_matrix(const Logic& logic, const PartitionLabeling& labeling,
                                          const Measure& measure, std::string_view row_context,
                                          std::string_view col_context);

// Matrix induced by a {0,1/2}-valued dispersionless state: entry = 2 s(row) s(col).
// Throws DomainError when the state takes values outside {0, 1/2}.
CondProbMatrix exotic_cond_prob_matrix(const Logic& logic, const DispersionlessState& state,
                                       std::string_view row_context,
                                       std::string_view col_context);

}  // namespace ctxprob

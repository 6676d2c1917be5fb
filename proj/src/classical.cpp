#include "ctxprob/classical.hpp"

#include <algorithm>

#include "ctxprob/error.hpp"

namespace ctxprob {

void Measure::validate() const {
  Rational sum = 0;
  for (const auto& w : weights) {
    if (w < 0) throw DomainError("measure weight " + rational_to_string(w) + " is negative");
    sum += w;
  }
  if (sum != 1)
    throw DomainError("measure weights sum to " + rational_to_string(sum) + ", expected 1");
}

bool CondProbMatrix::fully_defined() const {
  for (int i = 0; i < rows(); ++i)
    if (!row_defined(i)) return false;
  return true;
}

namespace {

Rational label_weight(const Measure& measure, const std::vector<int>& label) {
  Rational sum = 0;
  for (int i : label) sum += measure.weights[i - 1];
  return sum;
}

void check_alignment(const PartitionLabeling& labeling, const Measure& measure) {
  if (static_cast<int>(measure.weights.size()) != labeling.num_states)
    throw DomainError("measure has " + std::to_string(measure.weights.size()) +
                      " weights for " + std::to_string(labeling.num_states) + " states");
}

}  // namespace

Rational atom_probability(const PartitionLabeling& labeling, const Measure& measure,
                          std::string_view atom) {
  check_alignment(labeling, measure);
  return label_weight(measure, labeling.label(std::string(atom)));
}

CondProbMatrix classical_cond_prob_matrix(const Logic& logic, const PartitionLabeling& labeling,
                                          const Measure& measure, std::string_view row_context,
                                          std::string_view col_context) {
  check_alignment(labeling, measure);
  measure.validate();
  const Context& rows = logic.context(row_context);
  const Context& cols = logic.context(col_context);

  CondProbMatrix m;
  m.row_context_name = rows.name;
  m.col_context_name = cols.name;
  m.row_atoms = rows.atoms;
  m.col_atoms = cols.atoms;

  for (const auto& e : rows.atoms) {
    const auto& le = labeling.label(e);
    const Rational pe = label_weight(measure, le);
    std::vector<CondProbEntry> row;
    bool undefined = le.empty();
    for (const auto& f : cols.atoms) {
      if (undefined) break;
      const auto& lf = labeling.label(f);
      std::vector<int> common;
      std::set_intersection(le.begin(), le.end(), lf.begin(), lf.end(),
                            std::back_inserter(common));
      if (common.empty())
        row.push_back(CondProbEntry::of(Rational(0)));
      else if (common.size() == le.size())
        row.push_back(CondProbEntry::of(Rational(1)));
      else if (pe != 0)
        row.push_back(CondProbEntry::of(label_weight(measure, common) / pe));
      else
        undefined = true;  // a genuinely measure-dependent entry hit 0/0
    }
    if (undefined)
      row.assign(cols.atoms.size(), CondProbEntry::undefined());
    m.entries.push_back(std::move(row));
  }
  return m;
}

CondProbMatrix exotic_cond_prob_matrix(const Logic& logic, const DispersionlessState& state,
                                       std::string_view row_context,
                                       std::string_view col_context) {
  for (const auto& id : logic.atoms()) {
    auto it = state.values.find(id);
    if (it == state.values.end()) throw DomainError("state has no value for atom '" + id + "'");
    if (it->second != 0 && it->second != Rational(1, 2))
      throw DomainError("state value " + rational_to_string(it->second) + " for atom '" + id +
                        "' is outside {0, 1/2}");
  }
  const Context& rows = logic.context(row_context);
  const Context& cols = logic.context(col_context);

  CondProbMatrix m;
  m.row_context_name = rows.name;
  m.col_context_name = cols.name;
  m.row_atoms = rows.atoms;
  m.col_atoms = cols.atoms;
  for (const auto& e : rows.atoms) {
    std::vector<CondProbEntry> row;
    for (const auto& f : cols.atoms)
      row.push_back(CondProbEntry::of(2 * state.values.at(e) * state.values.at(f)));
    m.entries.push_back(std::move(row));
  }
  return m;
}

}  // namespace ctxprob

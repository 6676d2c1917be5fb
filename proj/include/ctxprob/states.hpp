#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctxprob/logic.hpp"
#include "ctxprob/rational.hpp"

namespace ctxprob {

// One {0,1} assignment over the canonical atom order, exactly one 1 per context.
struct TwoValuedState {
  std::vector<std::uint8_t> values;

  bool operator==(const TwoValuedState&) const = default;
};

// A logic together with an ordered list of its two-valued states. State indices are
// 1-based everywhere they face the user, matching the partition-label convention.
class StateFamily {
 public:
  StateFamily(Logic logic, std::vector<TwoValuedState> states)
      : logic_(std::move(logic)), states_(std::move(states)) {}

  const Logic& logic() const { return logic_; }
  const std::vector<TwoValuedState>& states() const { return states_; }
  int size() const { return static_cast<int>(states_.size()); }

  // Value of state k (1-based) on an atom.
  int value(int state_index, std::string_view atom_id) const {
    return states_[state_index - 1].values[logic_.atom_index(atom_id)];
  }

 private:
  Logic logic_;
  std::vector<TwoValuedState> states_;
};

// All two-valued states, found by backtracking over contexts with forced-zero
// propagation. Output is sorted descending-lexicographically by the 0/1 vector over
// canonical atom order; this ordering (not the search order) is the contract.
// Requires a valid logic.
StateFamily enumerate_two_valued_states(const Logic& logic);

struct SeparationReport {
  bool separating = false;
  // Atom pairs (canonical order) no state in the family tells apart.
  std::vector<std::pair<std::string, std::string>> non_separated;
};

SeparationReport is_separating(const StateFamily& family);

// A [0,1]-valued assignment summing to 1 over every context.
struct DispersionlessState {
  std::map<std::string, Rational> values;
};

// The 1/2-on-intertwines, 0-elsewhere state. Only defined when the logic is a single
// odd cycle of contexts pasted corner-to-corner: every intertwine lies in exactly two
// contexts, every context holds exactly two intertwines, and the context-adjacency
// graph is one odd cycle covering all contexts. Throws DomainError otherwise.
DispersionlessState exotic_half_state(const Logic& logic);

}  // namespace ctxprob

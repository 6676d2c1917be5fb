#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctxprob/states.hpp"

namespace ctxprob {

// label(atom) = the set of 1-based state indices valuing that atom 1. Within every
// context the labels partition {1..num_states}.
struct PartitionLabeling {
  int num_states = 0;
  std::map<std::string, std::vector<int>> labels;  // values sorted ascending

  const std::vector<int>& label(const std::string& atom) const;  // throws DomainError
};

// Labels induced by the family's canonical state order. Throws DomainError when the
// family is empty (labels would all be empty and partition nothing).
PartitionLabeling canonical_partition_labels(const StateFamily& family);

// Exact match against the family's canonical labels.
bool verify_partition_labels(const StateFamily& family, const PartitionLabeling& labeling);

// Searches for a relabeling pi of {1..num_states} with pi(from.label(a)) == to.label(a)
// for every atom. Index i is matched to the unique j whose atom-support sets coincide,
// so two labelings of the same family always differ by at most such a permutation.
// Returns pi as a vector indexed by i-1, or nullopt when the labelings are inequivalent.
std::optional<std::vector<int>> find_state_index_permutation(const PartitionLabeling& from,
                                                             const PartitionLabeling& to);

}  // namespace ctxprob

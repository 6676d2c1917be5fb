#include "ctxprob/partition.hpp"

#include <algorithm>
#include <set>

#include "ctxprob/error.hpp"

namespace ctxprob {

const std::vector<int>& PartitionLabeling::label(const std::string& atom) const {
  auto it = labels.find(atom);
  if (it == labels.end()) throw DomainError("no label for atom '" + atom + "'");
  return it->second;
}

PartitionLabeling canonical_partition_labels(const StateFamily& family) {
  if (family.size() == 0)
    throw DomainError("family admits no two-valued states; partition labels are undefined");
  PartitionLabeling labeling;
  labeling.num_states = family.size();
  for (const auto& atom : family.logic().atoms()) {
    std::vector<int> label;
    for (int k = 1; k <= family.size(); ++k)
      if (family.value(k, atom) == 1) label.push_back(k);
    labeling.labels.emplace(atom, std::move(label));
  }
  return labeling;
}

bool verify_partition_labels(const StateFamily& family, const PartitionLabeling& labeling) {
  if (labeling.num_states != family.size()) return false;
  const auto canonical = canonical_partition_labels(family);
  return canonical.labels == labeling.labels;
}

std::optional<std::vector<int>> find_state_index_permutation(const PartitionLabeling& from,
                                                             const PartitionLabeling& to) {
  if (from.num_states != to.num_states) return std::nullopt;
  const int n = from.num_states;
  if (from.labels.size() != to.labels.size()) return std::nullopt;
  for (const auto& [atom, label] : from.labels)
    if (to.labels.find(atom) == to.labels.end()) return std::nullopt;

  // Support of index i = set of atoms whose label contains i. Distinct states have
  // distinct supports, so matching supports pins the permutation.
  auto supports = [](const PartitionLabeling& l, int n) {
    std::vector<std::set<std::string>> s(n);
    for (const auto& [atom, label] : l.labels)
      for (int i : label) {
        if (i < 1 || i > n) return std::vector<std::set<std::string>>{};
        s[i - 1].insert(atom);
      }
    return s;
  };
  const auto sf = supports(from, n);
  const auto st = supports(to, n);
  if (sf.empty() || st.empty()) return std::nullopt;

  std::vector<int> pi(n, 0);
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    int match = -1;
    for (int j = 0; j < n; ++j)
      if (!used[j] && st[j] == sf[i]) {
        match = j;
        break;
      }
    if (match < 0) return std::nullopt;
    used[match] = 1;
    pi[i] = match + 1;
  }
  return pi;
}

}  // namespace ctxprob

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ctxprob/classical.hpp"
#include "ctxprob/partition.hpp"

namespace ctxprob {

// Ball mix: one ball type per state, drawn with exact probability weight[k]. Looking at
// a ball through the filter of one context reveals the unique atom of that context whose
// label contains the ball's state index.
struct UrnSpec {
  PartitionLabeling labeling;
  Measure measure;
  std::uint64_t seed = 0;
};

// Empirical conditional frequencies: counts[i][j] draws showed row atom i and column
// atom j. A row with zero condition count has no estimate (the empirical 0/0).
struct EmpiricalMatrix {
  std::string row_context_name, col_context_name;
  std::vector<std::string> row_atoms, col_atoms;
  std::vector<std::vector<std::uint64_t>> counts;
  std::vector<std::uint64_t> row_totals;
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  int shards = 1;

  bool row_defined(int i) const { return row_totals[i] > 0; }
  double estimate(int i, int j) const {
    return static_cast<double>(counts[i][j]) / static_cast<double>(row_totals[i]);
  }
};

// Draws n_draws ball types i.i.d. from the exact measure (integer thresholds over the
// common denominator; mt19937_64 with rejection sampling, so no floating-point rounding
// enters the distribution) and tallies row-context versus column-context outcomes.
// Sharding splits the draws across `shards` independently seeded streams (splitmix64 of
// seed and shard index) merged by summation: the result depends only on
// (seed, n_draws, shards), never on scheduling. Determinism is within this
// implementation, not across standard libraries.
EmpiricalMatrix simulate_cond_prob(const Logic& logic, const UrnSpec& spec,
                                   std::string_view row_context, std::string_view col_context,
                                   std::uint64_t n_draws, int shards = 1);

// Conditional measure given that the filter of `context_name` showed `atom`: weights
// outside the atom's label drop to 0, the rest renormalize. Throws DomainError when the
// atom has probability 0 or lies outside the context.
Measure intrinsic_prepare(const Logic& logic, const PartitionLabeling& labeling,
                          const Measure& measure, std::string_view context_name,
                          std::string_view atom);

}  // namespace ctxprob

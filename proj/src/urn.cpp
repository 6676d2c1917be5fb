#include "ctxprob/urn.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <random>

#include "ctxprob/error.hpp"

namespace ctxprob {

namespace {

std::uint64_t splitmix64_next(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Sub-seed for one shard: the (shard+1)-th output of the splitmix64 stream at `seed`.
std::uint64_t shard_seed(std::uint64_t seed, int shard) {
  std::uint64_t x = seed;
  std::uint64_t s = 0;
  for (int i = 0; i <= shard; ++i) s = splitmix64_next(x);
  return s;
}

// state index (0-based) -> position of the owning atom in the context. Throws unless the
// context's labels partition {1..num_states}.
std::vector<int> state_to_position(const Context& ctx, const PartitionLabeling& labeling) {
  std::vector<int> owner(labeling.num_states, -1);
  for (size_t p = 0; p < ctx.atoms.size(); ++p) {
    for (int i : labeling.label(ctx.atoms[p])) {
      if (i < 1 || i > labeling.num_states || owner[i - 1] != -1)
        throw DomainError("labels of context '" + ctx.name +
                          "' do not partition the state indices");
      owner[i - 1] = static_cast<int>(p);
    }
  }
  for (int o : owner)
    if (o < 0)
      throw DomainError("labels of context '" + ctx.name +
                        "' do not partition the state indices");
  return owner;
}

// Exact sampler over cumulative integer thresholds modulo the common denominator.
// Rejection keeps the draw uniform; no floating point is involved.
class ExactSampler {
 public:
  explicit ExactSampler(const Measure& measure) {
    BigInt q = 1;
    for (const auto& w : measure.weights) q = lcm(q, BigInt(denominator(w)));
    BigInt acc = 0;
    std::vector<BigInt> cuts;
    for (const auto& w : measure.weights) {
      acc += BigInt(numerator(w)) * (q / BigInt(denominator(w)));
      cuts.push_back(acc);
    }
    if (q <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
      q64_ = q.convert_to<std::uint64_t>();
      for (const auto& c : cuts) cuts64_.push_back(c.convert_to<std::uint64_t>());
      const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
      rem64_ = (max64 % q64_ + 1) % q64_;  // 2^64 mod q
    } else {
      qbig_ = q;
      cutsbig_ = std::move(cuts);
      const unsigned bits = msb(q) + 1;
      words_ = (bits + 63) / 64;
      const BigInt range = BigInt(1) << (64 * words_);
      limitbig_ = range - range % q;
    }
  }

  // 0-based state index.
  int draw(std::mt19937_64& rng) const {
    if (q64_ != 0) {
      std::uint64_t r = rng();
      if (rem64_ != 0) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem64_ + 1;
        while (r >= limit) r = rng();
      }
      r %= q64_;
      const auto it = std::upper_bound(cuts64_.begin(), cuts64_.end(), r);
      return static_cast<int>(it - cuts64_.begin());
    }
    BigInt r;
    do {
      r = 0;
      for (unsigned w = 0; w < words_; ++w) r = (r << 64) | BigInt(rng());
    } while (r >= limitbig_);
    r %= qbig_;
    const auto it = std::upper_bound(cutsbig_.begin(), cutsbig_.end(), r);
    return static_cast<int>(it - cutsbig_.begin());
  }

 private:
  std::uint64_t q64_ = 0, rem64_ = 0;
  std::vector<std::uint64_t> cuts64_;
  BigInt qbig_, limitbig_;
  std::vector<BigInt> cutsbig_;
  unsigned words_ = 0;
};

}  // namespace

EmpiricalMatrix simulate_cond_prob(const Logic& logic, const UrnSpec& spec,
                                   std::string_view row_context, std::string_view col_context,
                                   std::uint64_t n_draws, int shards) {
  spec.measure.validate();
  if (static_cast<int>(spec.measure.weights.size()) != spec.labeling.num_states)
    throw DomainError("measure has " + std::to_string(spec.measure.weights.size()) +
                      " weights for " + std::to_string(spec.labeling.num_states) + " states");
  if (n_draws == 0) throw DomainError("draw count must be positive");
  if (shards < 1) throw DomainError("shard count must be positive");

  const Context& rows = logic.context(row_context);
  const Context& cols = logic.context(col_context);
  const auto row_of = state_to_position(rows, spec.labeling);
  const auto col_of = state_to_position(cols, spec.labeling);
  const ExactSampler sampler(spec.measure);
  const size_t nr = rows.atoms.size(), nc = cols.atoms.size();

  auto run_shard = [&](int shard, std::uint64_t draws) {
    std::vector<std::vector<std::uint64_t>> counts(nr, std::vector<std::uint64_t>(nc, 0));
    std::mt19937_64 rng(shard_seed(spec.seed, shard));
    for (std::uint64_t d = 0; d < draws; ++d) {
      const int state = sampler.draw(rng);
      ++counts[row_of[state]][col_of[state]];
    }
    return counts;
  };

  std::vector<std::vector<std::vector<std::uint64_t>>> partials(shards);
  if (shards == 1) {
    partials[0] = run_shard(0, n_draws);
  } else {
    std::vector<std::future<std::vector<std::vector<std::uint64_t>>>> futures;
    for (int s = 0; s < shards; ++s) {
      const std::uint64_t quota =
          n_draws / shards + (static_cast<std::uint64_t>(s) < n_draws % shards ? 1 : 0);
      futures.push_back(std::async(std::launch::async, run_shard, s, quota));
    }
    for (int s = 0; s < shards; ++s) partials[s] = futures[s].get();
  }

  EmpiricalMatrix m;
  m.row_context_name = rows.name;
  m.col_context_name = cols.name;
  m.row_atoms = rows.atoms;
  m.col_atoms = cols.atoms;
  m.counts.assign(nr, std::vector<std::uint64_t>(nc, 0));
  m.row_totals.assign(nr, 0);
  m.draws = n_draws;
  m.seed = spec.seed;
  m.shards = shards;
  for (const auto& partial : partials)
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) m.counts[i][j] += partial[i][j];
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) m.row_totals[i] += m.counts[i][j];
  return m;
}

Measure intrinsic_prepare(const Logic& logic, const PartitionLabeling& labeling,
                          const Measure& measure, std::string_view context_name,
                          std::string_view atom) {
  measure.validate();
  if (static_cast<int>(measure.weights.size()) != labeling.num_states)
    throw DomainError("measure has " + std::to_string(measure.weights.size()) +
                      " weights for " + std::to_string(labeling.num_states) + " states");
  const Context& ctx = logic.context(context_name);
  if (std::find(ctx.atoms.begin(), ctx.atoms.end(), std::string(atom)) == ctx.atoms.end())
    throw DomainError("atom '" + std::string(atom) + "' is not in context '" + ctx.name + "'");

  const auto& label = labeling.label(std::string(atom));
  Rational total = 0;
  for (int i : label) total += measure.weights[i - 1];
  if (total == 0)
    throw DomainError("cannot prepare on atom '" + std::string(atom) +
                      "': it has probability 0");

  Measure prepared;
  prepared.weights.assign(measure.weights.size(), Rational(0));
  for (int i : label) prepared.weights[i - 1] = measure.weights[i - 1] / total;
  return prepared;
}

}  // namespace ctxprob

#pragma once

// Shared fixtures and independent oracles for the test suite.
//
// Everything here is deliberately computed by a different route than the
// library under test: state enumeration by brute force over all 2^n
// assignments, conditional probabilities by direct set arithmetic over
// label sets, random matrices built as explicit convex combinations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ctxprob/classical.hpp"
#include "ctxprob/json_io.hpp"
#include "ctxprob/logic.hpp"
#include "ctxprob/orthorep.hpp"
#include "ctxprob/partition.hpp"
#include "ctxprob/rational.hpp"
#include "ctxprob/states.hpp"
#include "ctxprob/stochastic.hpp"

#ifndef CTXPROB_DATA_DIR
#error "CTXPROB_DATA_DIR must be defined by the build"
#endif

namespace testsupport {

inline std::string data_path(const std::string& name) {
  return std::string(CTXPROB_DATA_DIR) + "/" + name;
}

inline ctxprob::Logic load_logic(const std::string& file) {
  return ctxprob::parse_logic(ctxprob::read_text_file(data_path(file)));
}

inline ctxprob::OrthogonalRep load_rep(const std::string& file) {
  return ctxprob::parse_orthogonal_rep(ctxprob::read_text_file(data_path(file)));
}

inline ctxprob::Measure uniform_measure(int k) {
  ctxprob::Measure m;
  m.weights.assign(static_cast<size_t>(k), ctxprob::Rational(1, k));
  return m;
}

inline ctxprob::Measure point_measure(int k, int support) {
  ctxprob::Measure m;
  m.weights.assign(static_cast<size_t>(k), ctxprob::Rational(0));
  m.weights[static_cast<size_t>(support)] = ctxprob::Rational(1);
  return m;
}

// ---------------------------------------------------------------------------
// Reference partition labels, transcribed from the source diagrams.

using LabelTable = std::map<std::string, std::vector<int>>;

inline LabelTable reference_labels_square() {
  return {{"a1", {1, 2}}, {"a2", {3, 4}}, {"b1", {1, 3}}, {"b2", {2, 4}}};
}

inline LabelTable reference_labels_firefly() {
  return {{"e1", {1, 2}},
          {"e2", {3, 4}},
          {"h", {5}},
          {"f1", {1, 3}},
          {"f2", {2, 4}}};
}

inline LabelTable reference_labels_pentagon() {
  return {{"c1", {1, 2, 3}},
          {"m1", {7, 8, 9, 10, 11}},
          {"c2", {4, 5, 6}},
          {"c3", {2, 7, 8}},
          {"m2", {1, 3, 9, 10, 11}},
          {"m3", {1, 4, 6, 10, 11}},
          {"c4", {3, 5, 9}},
          {"m4", {1, 2, 4, 7, 11}},
          {"c5", {6, 8, 10}},
          {"m5", {4, 5, 7, 9, 11}}};
}

// ---------------------------------------------------------------------------
// Brute-force two-valued-state oracle: test every 0/1 assignment.

inline std::vector<ctxprob::TwoValuedState> brute_force_states(
    const ctxprob::Logic& logic) {
  const int n = logic.num_atoms();
  if (n > 20) throw std::runtime_error("brute force oracle capped at 20 atoms");
  std::vector<ctxprob::TwoValuedState> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::uint8_t> values(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = (mask >> i) & 1u;
    bool admissible = true;
    for (const auto& ctx : logic.contexts()) {
      int ones = 0;
      for (const auto& atom : ctx.atoms)
        ones += values[static_cast<size_t>(logic.atom_index(atom))];
      if (ones != 1) {
        admissible = false;
        break;
      }
    }
    if (admissible) out.push_back(ctxprob::TwoValuedState{values});
  }
  std::sort(out.begin(), out.end(),
            [](const ctxprob::TwoValuedState& a, const ctxprob::TwoValuedState& b) {
              return a.values > b.values;
            });
  return out;
}

// ---------------------------------------------------------------------------
// Set-arithmetic conditional-probability oracle.
//
// Computes the conditional matrix directly from label sets and per-state
// weights, without going through Measure/atom_probability: the weight of a
// label is the sum over its member indices, the entry is
// weight(Le ∩ Lf) / weight(Le), rows with weight(Le) == 0 are Undefined.

struct OracleEntry {
  bool defined = false;
  ctxprob::Rational p;
};

inline std::vector<std::vector<OracleEntry>> oracle_cond_matrix(
    const std::vector<std::vector<int>>& row_labels,
    const std::vector<std::vector<int>>& col_labels,
    const std::map<int, ctxprob::Rational>& weight_by_index) {
  auto weight_of = [&](const std::set<int>& s) {
    ctxprob::Rational w = 0;
    for (int k : s) {
      auto it = weight_by_index.find(k);
      if (it != weight_by_index.end()) w += it->second;
    }
    return w;
  };
  std::vector<std::vector<OracleEntry>> out;
  for (const auto& le_vec : row_labels) {
    std::set<int> le(le_vec.begin(), le_vec.end());
    ctxprob::Rational we = weight_of(le);
    std::vector<OracleEntry> row;
    bool undefined = le.empty();
    for (const auto& lf_vec : col_labels) {
      std::set<int> lf(lf_vec.begin(), lf_vec.end());
      std::set<int> both;
      std::set_intersection(le.begin(), le.end(), lf.begin(), lf.end(),
                            std::inserter(both, both.begin()));
      OracleEntry e;
      if (both.empty()) {
        e.defined = true;
        e.p = 0;
      } else if (both.size() == le.size()) {
        e.defined = true;
        e.p = 1;
      } else if (we != 0) {
        e.defined = true;
        e.p = weight_of(both) / we;
      } else {
        undefined = true;  // measure-dependent entry with zero row weight
      }
      row.push_back(e);
    }
    if (undefined)
      for (auto& e : row) e = OracleEntry{};  // whole row Undefined
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic random generators for property tests.

inline ctxprob::Measure random_positive_measure(int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(1, 40);
  std::vector<ctxprob::BigInt> nums(static_cast<size_t>(k));
  ctxprob::BigInt total = 0;
  for (auto& v : nums) {
    v = digit(rng);
    total += v;
  }
  ctxprob::Measure m;
  m.weights.reserve(static_cast<size_t>(k));
  for (const auto& v : nums)
    m.weights.push_back(ctxprob::Rational(v, total));
  return m;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Convex combination of random permutation matrices: doubly stochastic by
// construction, with known term count for sanity (not an upper bound check).
inline Eigen::MatrixXd random_doubly_stochastic(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kdist(1, 2 * n);
  std::uniform_real_distribution<double> wdist(0.05, 1.0);
  const int k = kdist(rng);
  std::vector<double> w(static_cast<size_t>(k));
  double total = 0;
  for (auto& x : w) {
    x = wdist(rng);
    total += x;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int t = 0; t < k; ++t) {
    auto perm = random_permutation(n, rng);
    for (int r = 0; r < n; ++r)
      m(r, perm[static_cast<size_t>(r)]) += w[static_cast<size_t>(t)] / total;
  }
  return m;
}

inline ctxprob::RationalMatrix random_doubly_stochastic_rational(
    int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kdist(1, 2 * n);
  std::uniform_int_distribution<int> wdist(1, 30);
  const int k = kdist(rng);
  std::vector<ctxprob::BigInt> w(static_cast<size_t>(k));
  ctxprob::BigInt total = 0;
  for (auto& x : w) {
    x = wdist(rng);
    total += x;
  }
  ctxprob::RationalMatrix m(static_cast<size_t>(n),
                            std::vector<ctxprob::Rational>(static_cast<size_t>(n), 0));
  for (int t = 0; t < k; ++t) {
    auto perm = random_permutation(n, rng);
    for (int r = 0; r < n; ++r)
      m[static_cast<size_t>(r)][static_cast<size_t>(perm[static_cast<size_t>(r)])] +=
          ctxprob::Rational(w[static_cast<size_t>(t)], total);
  }
  return m;
}

inline ctxprob::RationalMatrix random_row_stochastic_rational(
    int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cell(0, 30);
  ctxprob::RationalMatrix m(static_cast<size_t>(rows));
  for (auto& row : m) {
    std::vector<ctxprob::BigInt> raw(static_cast<size_t>(cols));
    ctxprob::BigInt total = 0;
    for (auto& v : raw) {
      v = cell(rng);
      total += v;
    }
    if (total == 0) {
      raw[0] = 1;
      total = 1;
    }
    row.reserve(static_cast<size_t>(cols));
    for (const auto& v : raw) row.push_back(ctxprob::Rational(v, total));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Builders for CondProbMatrix literals used by classification tests.

inline ctxprob::CondProbMatrix make_exact_matrix(
    const std::vector<std::vector<std::string>>& entries) {
  ctxprob::CondProbMatrix m;
  m.row_context_name = "R";
  m.col_context_name = "C";
  for (size_t i = 0; i < entries.size(); ++i)
    m.row_atoms.push_back("r" + std::to_string(i + 1));
  if (!entries.empty())
    for (size_t j = 0; j < entries[0].size(); ++j)
      m.col_atoms.push_back("c" + std::to_string(j + 1));
  for (const auto& row : entries) {
    std::vector<ctxprob::CondProbEntry> out;
    for (const auto& cell : row) {
      if (cell == "0/0")
        out.push_back(ctxprob::CondProbEntry::undefined());
      else
        out.push_back(ctxprob::CondProbEntry::of(ctxprob::parse_rational(cell)));
    }
    m.entries.push_back(std::move(out));
  }
  return m;
}

}  // namespace testsupport

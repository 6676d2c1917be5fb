#include "ctxprob/states.hpp"

#include <algorithm>
#include <functional>

#include "ctxprob/error.hpp"

namespace ctxprob {

namespace {

// -1 = unassigned. Setting a value never contradicts an earlier one: callers only set
// unassigned cells and undo their own writes on backtrack.
struct Search {
  const Logic& logic;
  std::vector<int> assign;
  std::vector<std::vector<int>> context_atoms;  // context -> atom indices
  std::vector<TwoValuedState> out;

  explicit Search(const Logic& l) : logic(l), assign(l.num_atoms(), -1) {
    for (const auto& ctx : l.contexts()) {
      std::vector<int> ids;
      for (const auto& a : ctx.atoms) ids.push_back(l.atom_index(a));
      context_atoms.push_back(std::move(ids));
    }
  }

  void run(size_t ctx) {
    if (ctx == context_atoms.size()) {
      TwoValuedState s;
      s.values.reserve(assign.size());
      for (int v : assign) s.values.push_back(v == 1 ? 1 : 0);
      out.push_back(std::move(s));
      return;
    }
    const auto& atoms = context_atoms[ctx];
    int ones = 0, chosen = -1;
    for (int a : atoms)
      if (assign[a] == 1) {
        ++ones;
        chosen = a;
      }
    if (ones > 1) return;  // two earlier contexts forced 1s into this one

    if (chosen >= 0) {
      // An earlier context already placed the 1; the rest of this context is forced to 0.
      std::vector<int> touched;
      for (int a : atoms)
        if (assign[a] == -1) {
          assign[a] = 0;
          touched.push_back(a);
        }
      run(ctx + 1);
      for (int a : touched) assign[a] = -1;
      return;
    }

    for (int pick : atoms) {
      if (assign[pick] != -1) continue;  // forced 0 by an earlier context
      std::vector<int> touched;
      assign[pick] = 1;
      touched.push_back(pick);
      for (int a : atoms)
        if (assign[a] == -1) {
          assign[a] = 0;
          touched.push_back(a);
        }
      run(ctx + 1);
      for (int a : touched) assign[a] = -1;
    }
  }
};

}  // namespace

StateFamily enumerate_two_valued_states(const Logic& logic) {
  require_valid(logic);
  Search search(logic);
  search.run(0);
  std::sort(search.out.begin(), search.out.end(),
            [](const TwoValuedState& a, const TwoValuedState& b) { return a.values > b.values; });
  return StateFamily(logic, std::move(search.out));
}

SeparationReport is_separating(const StateFamily& family) {
  SeparationReport report;
  const auto& atoms = family.logic().atoms();
  for (size_t i = 0; i < atoms.size(); ++i) {
    const int ai = family.logic().atom_index(atoms[i]);
    for (size_t j = i + 1; j < atoms.size(); ++j) {
      const int aj = family.logic().atom_index(atoms[j]);
      bool separated = false;
      for (const auto& s : family.states())
        if (s.values[ai] != s.values[aj]) {
          separated = true;
          break;
        }
      if (!separated) report.non_separated.emplace_back(atoms[i], atoms[j]);
    }
  }
  report.separating = report.non_separated.empty();
  return report;
}

DispersionlessState exotic_half_state(const Logic& logic) {
  require_valid(logic);
  const auto twines = logic.intertwines();
  if (twines.empty()) throw DomainError("logic has no intertwine atoms");
  for (const auto& id : twines)
    if (logic.membership_count(id) != 2)
      throw DomainError("intertwine atom '" + id + "' lies in more than two contexts");

  // Context adjacency through intertwines. Two intertwines per context and two contexts
  // per intertwine make the graph 2-regular, so it is a single cycle iff connected.
  const int n = logic.num_contexts();
  std::vector<std::vector<int>> adj(n);
  for (const auto& id : twines) {
    std::vector<int> owners;
    for (int c = 0; c < n; ++c) {
      const auto& atoms = logic.contexts()[c].atoms;
      if (std::find(atoms.begin(), atoms.end(), id) != atoms.end()) owners.push_back(c);
    }
    adj[owners[0]].push_back(owners[1]);
    adj[owners[1]].push_back(owners[0]);
  }
  for (int c = 0; c < n; ++c)
    if (adj[c].size() != 2)
      throw DomainError("context '" + logic.contexts()[c].name + "' contains " +
                        std::to_string(adj[c].size()) + " intertwine atoms, need exactly 2");

  std::vector<char> seen(n, 0);
  std::function<void(int)> visit = [&](int c) {
    seen[c] = 1;
    for (int d : adj[c])
      if (!seen[d]) visit(d);
  };
  visit(0);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw DomainError("contexts do not form a single cycle");
  if (n % 2 == 0) throw DomainError("context cycle has even length " + std::to_string(n));

  DispersionlessState state;
  for (const auto& id : logic.atoms())
    state.values[id] = logic.membership_count(id) >= 2 ? Rational(1, 2) : Rational(0);
  return state;
}

}  // namespace ctxprob

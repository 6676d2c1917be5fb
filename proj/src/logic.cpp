#include "ctxprob/logic.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "ctxprob/error.hpp"

namespace ctxprob {

Logic Logic::from_contexts(std::vector<Context> contexts,
                           std::optional<std::vector<std::string>> declared_atoms) {
  Logic logic;

  if (declared_atoms) {
    for (const auto& id : *declared_atoms) {
      if (!logic.atom_index_.emplace(id, logic.atoms_.size()).second)
        throw DomainError("duplicate atom '" + id + "' in atom list");
      logic.atoms_.push_back(id);
    }
  }

  for (auto& ctx : contexts) {
    if (ctx.name.empty()) throw DomainError("context with empty name");
    if (!logic.context_index_.emplace(ctx.name, logic.contexts_.size()).second)
      throw DomainError("duplicate context name '" + ctx.name + "'");
    std::unordered_set<std::string> seen;
    for (const auto& id : ctx.atoms) {
      if (!seen.insert(id).second)
        throw DomainError("duplicate atom '" + id + "' in context '" + ctx.name + "'");
      if (logic.atom_index_.find(id) == logic.atom_index_.end()) {
        if (declared_atoms)
          throw DomainError("context '" + ctx.name + "' references undeclared atom '" + id + "'");
        logic.atom_index_.emplace(id, logic.atoms_.size());
        logic.atoms_.push_back(id);
      }
    }
    logic.contexts_.push_back(std::move(ctx));
  }

  logic.memberships_.assign(logic.atoms_.size(), {});
  for (int c = 0; c < logic.num_contexts(); ++c)
    for (const auto& id : logic.contexts_[c].atoms)
      logic.memberships_[logic.atom_index_.at(id)].push_back(c);

  return logic;
}

bool Logic::has_atom(std::string_view id) const {
  return atom_index_.find(std::string(id)) != atom_index_.end();
}

int Logic::atom_index(std::string_view id) const {
  auto it = atom_index_.find(std::string(id));
  if (it == atom_index_.end()) throw DomainError("unknown atom '" + std::string(id) + "'");
  return it->second;
}

bool Logic::has_context(std::string_view name) const {
  return context_index_.find(std::string(name)) != context_index_.end();
}

int Logic::context_index(std::string_view name) const {
  auto it = context_index_.find(std::string(name));
  if (it == context_index_.end())
    throw DomainError("unknown context '" + std::string(name) + "'");
  return it->second;
}

const Context& Logic::context(std::string_view name) const {
  return contexts_[context_index(name)];
}

int Logic::membership_count(std::string_view atom_id) const {
  return static_cast<int>(memberships_[atom_index(atom_id)].size());
}

std::vector<std::string> Logic::intertwines() const {
  std::vector<std::string> result;
  for (int a = 0; a < num_atoms(); ++a)
    if (memberships_[a].size() >= 2) result.push_back(atoms_[a]);
  return result;
}

bool Logic::share_context(std::string_view a, std::string_view b) const {
  const auto& ma = memberships_[atom_index(a)];
  const auto& mb = memberships_[atom_index(b)];
  for (int c : ma)
    if (std::find(mb.begin(), mb.end(), c) != mb.end()) return true;
  return false;
}

ValidationReport validate_logic(const Logic& logic) {
  ValidationReport report;

  for (const auto& ctx : logic.contexts()) {
    if (ctx.atoms.empty())
      report.violations.push_back(
          {Severity::error, "empty-context", "context '" + ctx.name + "' has no atoms"});
    else if (ctx.atoms.size() == 1)
      report.violations.push_back({Severity::error, "singleton-context",
                                   "context '" + ctx.name + "' has a single atom"});
  }

  const auto& contexts = logic.contexts();
  for (size_t i = 0; i < contexts.size(); ++i) {
    std::set<std::string> a(contexts[i].atoms.begin(), contexts[i].atoms.end());
    for (size_t j = i + 1; j < contexts.size(); ++j) {
      int shared = 0;
      for (const auto& id : contexts[j].atoms) shared += a.count(id);
      if (shared > 1)
        report.violations.push_back(
            {Severity::error, "overlap",
             "contexts '" + contexts[i].name + "' and '" + contexts[j].name + "' share " +
                 std::to_string(shared) + " atoms (at most 1 allowed)"});
    }
  }

  for (const auto& id : logic.atoms())
    if (logic.membership_count(id) == 0)
      report.violations.push_back(
          {Severity::error, "orphan-atom", "atom '" + id + "' belongs to no context"});

  return report;
}

void require_valid(const Logic& logic) {
  const auto report = validate_logic(logic);
  for (const auto& v : report.violations)
    if (v.severity == Severity::error) throw DomainError("invalid logic: " + v.message);
}

}  // namespace ctxprob

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctxprob {

// A context is one maximal set of mutually exclusive outcomes. Atom order inside a
// context is significant for printing: conditional matrices list rows and columns in
// the order the context declares its atoms.
struct Context {
  std::string name;
  std::vector<std::string> atoms;
};

// A collection of contexts pasted along shared atoms. Structural problems that make the
// object unrepresentable (duplicate names, duplicate atom inside one context, references
// to undeclared atoms) are rejected at construction; semantic defects (empty or singleton
// contexts, pairwise overlap above one atom, orphan atoms) are representable and reported
// by validate_logic so diagnostics can be emitted as data.
class Logic {
 public:
  // declared_atoms pins the canonical atom order; without it the order is first
  // appearance across contexts. Throws DomainError on structural problems.
  static Logic from_contexts(std::vector<Context> contexts,
                             std::optional<std::vector<std::string>> declared_atoms = {});

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<Context>& contexts() const { return contexts_; }
  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_contexts() const { return static_cast<int>(contexts_.size()); }

  bool has_atom(std::string_view id) const;
  int atom_index(std::string_view id) const;  // throws DomainError if unknown
  bool has_context(std::string_view name) const;
  int context_index(std::string_view name) const;  // throws DomainError if unknown
  const Context& context(std::string_view name) const;

  // Number of contexts the atom belongs to.
  int membership_count(std::string_view atom_id) const;

  // Atoms with membership count >= 2, in canonical atom order.
  std::vector<std::string> intertwines() const;

  // True when some context contains both atoms.
  bool share_context(std::string_view a, std::string_view b) const;

 private:
  std::vector<std::string> atoms_;
  std::vector<Context> contexts_;
  std::unordered_map<std::string, int> atom_index_;
  std::unordered_map<std::string, int> context_index_;
  std::vector<std::vector<int>> memberships_;  // atom index -> context indices
};

enum class Severity { error, warning };

struct Violation {
  Severity severity;
  std::string kind;  // stable machine-readable tag, e.g. "overlap"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  // No error-severity entries (warnings allowed).
  bool ok() const {
    for (const auto& v : violations)
      if (v.severity == Severity::error) return false;
    return true;
  }
};

// Semantic diagnostics: empty contexts, singleton contexts, two contexts sharing more
// than one atom, atoms in no context.
ValidationReport validate_logic(const Logic& logic);

// Throws DomainError quoting the first violation unless validate_logic(logic).ok().
void require_valid(const Logic& logic);

}  // namespace ctxprob

// Command-line front end. Every subcommand is a thin adapter: read files, call the
// library, serialize the result. Exit codes: 0 success, 1 parse/domain error (message
// on stderr with an "error: " prefix), 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "ctxprob/classical.hpp"
#include "ctxprob/error.hpp"
#include "ctxprob/json_io.hpp"
#include "ctxprob/logic.hpp"
#include "ctxprob/orthorep.hpp"
#include "ctxprob/partition.hpp"
#include "ctxprob/quantum.hpp"
#include "ctxprob/states.hpp"
#include "ctxprob/stochastic.hpp"
#include "ctxprob/urn.hpp"

namespace {

void emit(const nlohmann::ordered_json& as_json, const std::string& as_table,
          const std::string& format) {
  if (format == "table")
    std::cout << as_table;
  else
    std::cout << as_json.dump(2) << "\n";
}

ctxprob::Logic load_logic(const std::string& path) {
  return ctxprob::parse_logic(ctxprob::read_text_file(path));
}

ctxprob::RationalMatrix to_rational_matrix(const ctxprob::CondProbMatrix& m,
                                           const std::string& undefined_message) {
  ctxprob::RationalMatrix out;
  for (int i = 0; i < m.rows(); ++i) {
    if (!m.row_defined(i)) throw ctxprob::DomainError(undefined_message);
    std::vector<ctxprob::Rational> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.entries[i][j].p);
    out.push_back(std::move(row));
  }
  return out;
}

struct Options {
  std::string logic_file, rep_file, measure_file, matrix_file;
  std::string rows, cols, row_context, col_context;
  std::string prepare_atom, prepare_context;
  std::string format = "json";
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::uint64_t draws = 0;
  int shards = 1;
};

void run_validate(const Options& opt) {
  const auto logic = load_logic(opt.logic_file);
  const auto report = ctxprob::validate_logic(logic);
  if (opt.rep_file.empty()) {
    emit(ctxprob::validation_to_json(report), ctxprob::validation_to_table(report), opt.format);
    return;
  }
  const auto rep = ctxprob::parse_orthogonal_rep(ctxprob::read_text_file(opt.rep_file));
  const auto rep_report = ctxprob::check_orthogonal_rep(logic, rep, opt.tol);
  nlohmann::ordered_json j;
  j["valid"] = report.ok() && rep_report.ok();
  j["logic"] = ctxprob::validation_to_json(report);
  j["rep"] = ctxprob::validation_to_json(rep_report);
  emit(j,
       "logic:\n" + ctxprob::validation_to_table(report) + "rep:\n" +
           ctxprob::validation_to_table(rep_report),
       opt.format);
}

void run_states(const Options& opt) {
  const auto logic = load_logic(opt.logic_file);
  const auto family = ctxprob::enumerate_two_valued_states(logic);
  emit(ctxprob::states_to_json(family), ctxprob::states_to_table(family), opt.format);
}

void run_labels(const Options& opt) {
  const auto logic = load_logic(opt.logic_file);
  const auto family = ctxprob::enumerate_two_valued_states(logic);
  const auto labeling = ctxprob::canonical_partition_labels(family);
  emit(ctxprob::labels_to_json(logic, labeling), ctxprob::labels_to_table(logic, labeling),
       opt.format);
}

void run_condprob_classical(const Options& opt) {
  const auto logic = load_logic(opt.logic_file);
  const auto family = ctxprob::enumerate_two_valued_states(logic);
  const auto labeling = ctxprob::canonical_partition_labels(family);
  const auto measure = ctxprob::parse_measure(ctxprob::read_text_file(opt.measure_file));
  const auto m =
      ctxprob::classical_cond_prob_matrix(logic, labeling, measure, opt.rows, opt.cols);
  emit(ctxprob::matrix_to_json(m), ctxprob::matrix_to_table(m), opt.format);
}

void run_condprob_quantum(const Options& opt) {
  const auto logic = load_logic(opt.logic_file);
  ctxprob::require_valid(logic);
  const auto rep = ctxprob::parse_orthogonal_rep(ctxprob::read_text_file(opt.rep_file));
  const auto rows = ctxprob::basis_from_rep(logic, rep, opt.rows);
  const auto cols = ctxprob::basis_from_rep(logic, rep, opt.cols);
  const auto m = ctxprob::born_cond_prob_matrix(rows, cols, opt.tol);
  emit(ctxprob::real_matrix_to_json(m, rows.name, cols.name, rows.atom_ids, cols.atom_ids),
       ctxprob::real_matrix_to_table(m, rows.atom_ids, cols.atom_ids), opt.format);
}

void run_condprob_exotic(const Options& opt) {
  const auto logic = load_logic(opt.logic_file);
  const auto state = ctxprob::exotic_half_state(logic);
  const auto m = ctxprob::exotic_cond_prob_matrix(logic, state, opt.rows, opt.cols);
  auto j = ctxprob::matrix_to_json(m);
  j["rule"] = "half-state-product";
  emit(j, ctxprob::matrix_to_table(m) + "rule: half-state-product\n", opt.format);
}

void run_check(const Options& opt) {
  const auto parsed = ctxprob::parse_matrix(ctxprob::read_text_file(opt.matrix_file));
  if (parsed.exact) {
    const auto v = ctxprob::classify_stochastic(parsed.rational);
    emit(ctxprob::verdict_to_json(v), ctxprob::verdict_to_table(v), opt.format);
  } else {
    const auto v = ctxprob::classify_stochastic(parsed.real, opt.tol);
    emit(ctxprob::verdict_to_json(v), ctxprob::verdict_to_table(v), opt.format);
  }
}

void run_birkhoff(const Options& opt) {
  const auto parsed = ctxprob::parse_matrix(ctxprob::read_text_file(opt.matrix_file));
  if (parsed.exact) {
    const auto d =
        ctxprob::birkhoff_decompose(to_rational_matrix(parsed.rational, "not doubly stochastic"));
    emit(ctxprob::decomposition_to_json(d), ctxprob::decomposition_to_table(d), opt.format);
  } else {
    const auto d = ctxprob::birkhoff_decompose(parsed.real, opt.tol);
    emit(ctxprob::decomposition_to_json(d), ctxprob::decomposition_to_table(d), opt.format);
  }
}

void run_rowdecomp(const Options& opt) {
  const auto parsed = ctxprob::parse_matrix(ctxprob::read_text_file(opt.matrix_file));
  if (parsed.exact) {
    const auto d = ctxprob::row_polytope_decompose(
        to_rational_matrix(parsed.rational, "matrix has Undefined entries"));
    emit(ctxprob::decomposition_to_json(d), ctxprob::decomposition_to_table(d), opt.format);
  } else {
    const auto d = ctxprob::row_polytope_decompose(parsed.real, opt.tol);
    emit(ctxprob::decomposition_to_json(d), ctxprob::decomposition_to_table(d), opt.format);
  }
}

void run_simulate(const Options& opt) {
  const auto logic = load_logic(opt.logic_file);
  const auto family = ctxprob::enumerate_two_valued_states(logic);
  const auto labeling = ctxprob::canonical_partition_labels(family);
  auto measure = ctxprob::parse_measure(ctxprob::read_text_file(opt.measure_file));
  if (!opt.prepare_atom.empty())
    measure = ctxprob::intrinsic_prepare(logic, labeling, measure, opt.prepare_context,
                                         opt.prepare_atom);
  ctxprob::UrnSpec spec{labeling, measure, opt.seed};
  const auto em = ctxprob::simulate_cond_prob(logic, spec, opt.row_context, opt.col_context,
                                              opt.draws, opt.shards);
  const auto exact = ctxprob::classical_cond_prob_matrix(logic, labeling, measure,
                                                         opt.row_context, opt.col_context);
  emit(ctxprob::empirical_to_json(em, &exact), ctxprob::empirical_to_table(em, &exact),
       opt.format);
}

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Contexts, states, labels, and conditional probability matrices"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check a logic (and optionally a vector "
                                                  "representation) for structural defects");
  validate->add_option("--logic", opt.logic_file, "Logic JSON file")->required();
  validate->add_option("--rep", opt.rep_file, "Orthogonal representation JSON file");
  validate->add_option("--tol", opt.tol, "Numeric tolerance");
  add_format(validate, opt);

  auto* states = app.add_subcommand("states", "Enumerate all two-valued states");
  states->add_option("--logic", opt.logic_file, "Logic JSON file")->required();
  add_format(states, opt);

  auto* labels = app.add_subcommand("labels", "Canonical partition labels");
  labels->add_option("--logic", opt.logic_file, "Logic JSON file")->required();
  add_format(labels, opt);

  auto* condprob = app.add_subcommand("condprob", "Conditional probability matrices");
  condprob->require_subcommand(1);
  auto* classical = condprob->add_subcommand("classical", "From a measure on the states");
  classical->add_option("--logic", opt.logic_file, "Logic JSON file")->required();
  classical->add_option("--measure", opt.measure_file, "Measure JSON file")->required();
  classical->add_option("--rows", opt.rows, "Conditioning context")->required();
  classical->add_option("--cols", opt.cols, "Outcome context")->required();
  add_format(classical, opt);
  auto* quantum = condprob->add_subcommand("quantum", "From an orthogonal representation");
  quantum->add_option("--logic", opt.logic_file, "Logic JSON file")->required();
  quantum->add_option("--rep", opt.rep_file, "Orthogonal representation JSON file")->required();
  quantum->add_option("--rows", opt.rows, "Conditioning context")->required();
  quantum->add_option("--cols", opt.cols, "Outcome context")->required();
  quantum->add_option("--tol", opt.tol, "Orthonormality tolerance");
  add_format(quantum, opt);
  auto* exotic = condprob->add_subcommand("exotic", "From the half-valued dispersionless state");
  exotic->add_option("--logic", opt.logic_file, "Logic JSON file")->required();
  exotic->add_option("--rows", opt.rows, "Conditioning context")->required();
  exotic->add_option("--cols", opt.cols, "Outcome context")->required();
  add_format(exotic, opt);

  auto* check = app.add_subcommand("check", "Classify a matrix as row/doubly stochastic");
  check->add_option("--matrix", opt.matrix_file, "Matrix JSON file")->required();
  check->add_option("--tol", opt.tol, "Numeric tolerance for real matrices");
  add_format(check, opt);

  auto* birkhoff = app.add_subcommand("birkhoff",
                                      "Decompose a doubly stochastic matrix into permutations");
  birkhoff->add_option("--matrix", opt.matrix_file, "Matrix JSON file")->required();
  birkhoff->add_option("--tol", opt.tol, "Support threshold for real matrices");
  add_format(birkhoff, opt);

  auto* rowdecomp = app.add_subcommand("rowdecomp",
                                       "Decompose a row-stochastic matrix into 0/1 vertices");
  rowdecomp->add_option("--matrix", opt.matrix_file, "Matrix JSON file")->required();
  rowdecomp->add_option("--tol", opt.tol, "Support threshold for real matrices");
  add_format(rowdecomp, opt);

  auto* simulate = app.add_subcommand("simulate", "Draw from the ball mix and tally "
                                                  "conditional frequencies");
  simulate->add_option("--logic", opt.logic_file, "Logic JSON file")->required();
  simulate->add_option("--measure", opt.measure_file, "Measure JSON file")->required();
  simulate->add_option("--row-context", opt.row_context, "Conditioning context")->required();
  simulate->add_option("--col-context", opt.col_context, "Outcome context")->required();
  simulate->add_option("--draws", opt.draws, "Number of draws")->required();
  simulate->add_option("--seed", opt.seed, "Random seed");
  simulate->add_option("--shards", opt.shards, "Independent sampling shards");
  auto* prep = simulate->add_option("--prepare", opt.prepare_atom,
                                    "Condition the mix on this atom before sampling");
  simulate->add_option("--prepare-context", opt.prepare_context,
                       "Context the preparation atom belongs to")
      ->needs(prep);
  prep->needs("--prepare-context");
  add_format(simulate, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) run_validate(opt);
    if (*states) run_states(opt);
    if (*labels) run_labels(opt);
    if (*classical) run_condprob_classical(opt);
    if (*quantum) run_condprob_quantum(opt);
    if (*exotic) run_condprob_exotic(opt);
    if (*check) run_check(opt);
    if (*birkhoff) run_birkhoff(opt);
    if (*rowdecomp) run_rowdecomp(opt);
    if (*simulate) run_simulate(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

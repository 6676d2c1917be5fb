#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ctxprob/classical.hpp"
#include "ctxprob/orthorep.hpp"
#include "ctxprob/partition.hpp"
#include "ctxprob/quantum.hpp"
#include "ctxprob/states.hpp"
#include "ctxprob/stochastic.hpp"
#include "ctxprob/urn.hpp"

namespace ctxprob {

// All emitted JSON uses ordered_json: keys appear in canonical (atom/context) order and
// the serialization is stable across runs. Parsers reject unknown structural fields so
// typos fail loudly instead of being ignored.

std::string read_text_file(const std::string& path);  // throws Error on failure

Logic parse_logic(const std::string& text);
std::string serialize_logic(const Logic& logic);  // parse_logic round-trips it

OrthogonalRep parse_orthogonal_rep(const std::string& text);
Measure parse_measure(const std::string& text);

// Matrix file for classification and decomposition: either the matrix object emitted by
// this tool or a bare array of rows. String entries ("1/2", "0/0") and JSON integers
// parse exactly; any floating-point entry switches the whole matrix to real arithmetic.
struct ParsedMatrix {
  bool exact = false;
  CondProbMatrix rational;  // when exact; context names may be empty
  Eigen::MatrixXd real;     // otherwise
};
ParsedMatrix parse_matrix(const std::string& text);

nlohmann::ordered_json states_to_json(const StateFamily& family);
nlohmann::ordered_json labels_to_json(const Logic& logic, const PartitionLabeling& labeling);
nlohmann::ordered_json validation_to_json(const ValidationReport& report);
nlohmann::ordered_json separation_to_json(const SeparationReport& report);
nlohmann::ordered_json matrix_to_json(const CondProbMatrix& m);
nlohmann::ordered_json real_matrix_to_json(const Eigen::MatrixXd& m, const std::string& row_ctx,
                                           const std::string& col_ctx,
                                           const std::vector<std::string>& row_atoms,
                                           const std::vector<std::string>& col_atoms);
nlohmann::ordered_json verdict_to_json(const StochasticVerdict& v);
nlohmann::ordered_json verdict_to_json(const StochasticVerdictReal& v);
nlohmann::ordered_json decomposition_to_json(const RationalDecomposition& d);
nlohmann::ordered_json decomposition_to_json(const RealDecomposition& d);
// exact == nullptr omits the reference matrix and the deviation field.
nlohmann::ordered_json empirical_to_json(const EmpiricalMatrix& em, const CondProbMatrix* exact);

std::string states_to_table(const StateFamily& family);
std::string labels_to_table(const Logic& logic, const PartitionLabeling& labeling);
std::string validation_to_table(const ValidationReport& report);
std::string matrix_to_table(const CondProbMatrix& m);
std::string real_matrix_to_table(const Eigen::MatrixXd& m,
                                 const std::vector<std::string>& row_atoms,
                                 const std::vector<std::string>& col_atoms);
std::string verdict_to_table(const StochasticVerdict& v);
std::string verdict_to_table(const StochasticVerdictReal& v);
std::string decomposition_to_table(const RationalDecomposition& d);
std::string decomposition_to_table(const RealDecomposition& d);
std::string empirical_to_table(const EmpiricalMatrix& em, const CondProbMatrix* exact);

}  // namespace ctxprob

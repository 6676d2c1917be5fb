#include "ctxprob/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctxprob/error.hpp"

namespace ctxprob {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const char* what) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known)
      throw ParseError(std::string(what) + ": unknown structural field '" + it.key() + "'");
  }
}

std::string get_string(const json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> get_string_array(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(get_string(e, what));
  return out;
}

Rational json_to_rational(const json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational(v.get<unsigned long long>());
  throw ParseError(std::string(what) +
                   ": expected an exact rational like \"1/5\" or an integer");
}

// Right-aligned grid with a left-aligned label column.
std::string render_grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> width;
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      if (c == 0)
        cell.append(width[c] - cell.size(), ' ');
      else
        cell.insert(0, width[c] - cell.size(), ' ');
      out += cell;
      if (c + 1 < row.size()) out += "  ";
    }
    out += '\n';
  }
  return out;
}

std::string entry_string(const CondProbEntry& e) {
  return e.defined ? rational_to_string(e.p) : "0/0";
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Logic parse_logic(const std::string& text) {
  const json j = parse_json(text, "logic");
  if (!j.is_object()) throw ParseError("logic: top level must be an object");
  check_keys(j, {"atoms", "contexts"}, "logic");
  if (!j.contains("contexts")) throw ParseError("logic: missing 'contexts'");
  if (!j["contexts"].is_array()) throw ParseError("logic: 'contexts' must be an array");

  std::optional<std::vector<std::string>> declared;
  if (j.contains("atoms")) declared = get_string_array(j["atoms"], "logic: 'atoms'");

  std::vector<Context> contexts;
  for (const auto& c : j["contexts"]) {
    if (!c.is_object()) throw ParseError("logic: each context must be an object");
    check_keys(c, {"name", "atoms"}, "context");
    if (!c.contains("name") || !c.contains("atoms"))
      throw ParseError("logic: each context needs 'name' and 'atoms'");
    Context ctx;
    ctx.name = get_string(c["name"], "context 'name'");
    ctx.atoms = get_string_array(c["atoms"], "context 'atoms'");
    contexts.push_back(std::move(ctx));
  }
  return Logic::from_contexts(std::move(contexts), std::move(declared));
}

std::string serialize_logic(const Logic& logic) {
  ordered_json j;
  j["atoms"] = logic.atoms();
  j["contexts"] = ordered_json::array();
  for (const auto& ctx : logic.contexts())
    j["contexts"].push_back(ordered_json{{"name", ctx.name}, {"atoms", ctx.atoms}});
  return j.dump(2) + "\n";
}

OrthogonalRep parse_orthogonal_rep(const std::string& text) {
  const json j = parse_json(text, "representation");
  if (!j.is_object()) throw ParseError("representation: top level must be an object");
  check_keys(j, {"dimension", "vectors"}, "representation");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw ParseError("representation: missing integer 'dimension'");
  if (!j.contains("vectors") || !j["vectors"].is_object())
    throw ParseError("representation: missing 'vectors' object");

  OrthogonalRep rep;
  rep.dimension = j["dimension"].get<int>();
  if (rep.dimension <= 0) throw ParseError("representation: 'dimension' must be positive");
  for (auto it = j["vectors"].begin(); it != j["vectors"].end(); ++it) {
    const json& comps = it.value();
    if (!comps.is_array())
      throw ParseError("representation: vector for '" + it.key() + "' must be an array");
    Eigen::VectorXcd v(comps.size());
    for (size_t k = 0; k < comps.size(); ++k) {
      const json& pair = comps[k];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        throw ParseError("representation: component " + std::to_string(k) + " of '" +
                         it.key() + "' must be a [re, im] pair");
      v[k] = std::complex<double>(pair[0].get<double>(), pair[1].get<double>());
    }
    rep.vectors.emplace(it.key(), std::move(v));
  }
  return rep;
}

Measure parse_measure(const std::string& text) {
  const json j = parse_json(text, "measure");
  if (!j.is_object()) throw ParseError("measure: top level must be an object");
  check_keys(j, {"weights"}, "measure");
  if (!j.contains("weights") || !j["weights"].is_array())
    throw ParseError("measure: missing 'weights' array");
  Measure m;
  for (const auto& w : j["weights"]) m.weights.push_back(json_to_rational(w, "measure weight"));
  m.validate();
  return m;
}

ParsedMatrix parse_matrix(const std::string& text) {
  const json j = parse_json(text, "matrix");
  json entries;
  ParsedMatrix out;
  if (j.is_array()) {
    entries = j;
  } else if (j.is_object()) {
    check_keys(j, {"rows", "cols", "row_atoms", "col_atoms", "entries", "rule"}, "matrix");
    if (!j.contains("entries")) throw ParseError("matrix: missing 'entries'");
    entries = j["entries"];
    if (j.contains("rows")) out.rational.row_context_name = get_string(j["rows"], "'rows'");
    if (j.contains("cols")) out.rational.col_context_name = get_string(j["cols"], "'cols'");
    if (j.contains("row_atoms"))
      out.rational.row_atoms = get_string_array(j["row_atoms"], "'row_atoms'");
    if (j.contains("col_atoms"))
      out.rational.col_atoms = get_string_array(j["col_atoms"], "'col_atoms'");
  } else {
    throw ParseError("matrix: top level must be an object or an array of rows");
  }
  if (!entries.is_array() || entries.empty())
    throw ParseError("matrix: 'entries' must be a non-empty array of rows");

  bool has_float = false, has_undefined = false;
  size_t cols = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.empty())
      throw ParseError("matrix: each row must be a non-empty array");
    if (i == 0)
      cols = row.size();
    else if (row.size() != cols)
      throw ParseError("matrix: rows have different lengths");
    for (const auto& e : row) {
      if (e.is_number_float()) has_float = true;
      else if (e.is_string() && e.get<std::string>() == "0/0") has_undefined = true;
      else if (!e.is_string() && !e.is_number()) throw ParseError("matrix: bad entry type");
    }
  }
  if (has_float && has_undefined)
    throw ParseError("matrix: cannot mix floating-point and Undefined entries");

  if (has_float) {
    out.exact = false;
    out.real.resize(entries.size(), cols);
    for (size_t i = 0; i < entries.size(); ++i)
      for (size_t k = 0; k < cols; ++k) {
        const json& e = entries[i][k];
        out.real(i, k) = e.is_string()
                             ? rational_to_double(parse_rational(e.get<std::string>()))
                             : e.get<double>();
      }
    return out;
  }

  out.exact = true;
  for (size_t i = 0; i < entries.size(); ++i) {
    std::vector<CondProbEntry> row;
    bool undefined = false, defined = false;
    for (size_t k = 0; k < cols; ++k) {
      const json& e = entries[i][k];
      if (e.is_string() && e.get<std::string>() == "0/0") {
        undefined = true;
        row.push_back(CondProbEntry::undefined());
      } else {
        defined = true;
        row.push_back(CondProbEntry::of(json_to_rational(e, "matrix entry")));
      }
    }
    if (undefined && defined)
      throw ParseError("matrix: row " + std::to_string(i + 1) +
                       " mixes Defined and Undefined entries");
    out.rational.entries.push_back(std::move(row));
  }
  if (out.rational.row_atoms.empty())
    out.rational.row_atoms.assign(entries.size(), "");
  if (out.rational.col_atoms.empty())
    out.rational.col_atoms.assign(cols, "");
  if (out.rational.row_atoms.size() != entries.size() || out.rational.col_atoms.size() != cols)
    throw ParseError("matrix: atom name lists do not match the entry shape");
  return out;
}

nlohmann::ordered_json states_to_json(const StateFamily& family) {
  ordered_json out;
  out["states"] = ordered_json::array();
  for (int k = 1; k <= family.size(); ++k) {
    ordered_json s = ordered_json::object();
    for (const auto& atom : family.logic().atoms()) s[atom] = family.value(k, atom);
    out["states"].push_back(std::move(s));
  }
  return out;
}

nlohmann::ordered_json labels_to_json(const Logic& logic, const PartitionLabeling& labeling) {
  ordered_json out;
  out["labels"] = ordered_json::object();
  for (const auto& atom : logic.atoms()) out["labels"][atom] = labeling.label(atom);
  return out;
}

nlohmann::ordered_json validation_to_json(const ValidationReport& report) {
  ordered_json out;
  out["valid"] = report.ok();
  out["violations"] = ordered_json::array();
  for (const auto& v : report.violations)
    out["violations"].push_back(
        ordered_json{{"severity", v.severity == Severity::error ? "error" : "warning"},
                     {"kind", v.kind},
                     {"message", v.message}});
  return out;
}

nlohmann::ordered_json separation_to_json(const SeparationReport& report) {
  ordered_json out;
  out["separating"] = report.separating;
  out["non_separated"] = ordered_json::array();
  for (const auto& [a, b] : report.non_separated)
    out["non_separated"].push_back(ordered_json::array({a, b}));
  return out;
}

nlohmann::ordered_json matrix_to_json(const CondProbMatrix& m) {
  ordered_json out;
  out["rows"] = m.row_context_name;
  out["cols"] = m.col_context_name;
  out["row_atoms"] = m.row_atoms;
  out["col_atoms"] = m.col_atoms;
  out["entries"] = ordered_json::array();
  for (const auto& row : m.entries) {
    ordered_json r = ordered_json::array();
    for (const auto& e : row) r.push_back(entry_string(e));
    out["entries"].push_back(std::move(r));
  }
  return out;
}

nlohmann::ordered_json real_matrix_to_json(const Eigen::MatrixXd& m, const std::string& row_ctx,
                                           const std::string& col_ctx,
                                           const std::vector<std::string>& row_atoms,
                                           const std::vector<std::string>& col_atoms) {
  ordered_json out;
  out["rows"] = row_ctx;
  out["cols"] = col_ctx;
  out["row_atoms"] = row_atoms;
  out["col_atoms"] = col_atoms;
  out["entries"] = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json r = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    out["entries"].push_back(std::move(r));
  }
  return out;
}

nlohmann::ordered_json verdict_to_json(const StochasticVerdict& v) {
  ordered_json out;
  out["row_stochastic"] = v.row_stochastic;
  out["doubly_stochastic"] = v.doubly_stochastic;
  out["partial"] = v.partial;
  out["row_sums"] = ordered_json::array();
  for (const auto& s : v.row_sums) out["row_sums"].push_back(entry_string(s));
  out["col_sums"] = ordered_json::array();
  for (const auto& s : v.col_sums) out["col_sums"].push_back(entry_string(s));
  out["violations"] = v.violations;
  return out;
}

nlohmann::ordered_json verdict_to_json(const StochasticVerdictReal& v) {
  ordered_json out;
  out["row_stochastic"] = v.row_stochastic;
  out["doubly_stochastic"] = v.doubly_stochastic;
  out["partial"] = false;
  out["row_sums"] = v.row_sums;
  out["col_sums"] = v.col_sums;
  out["violations"] = v.violations;
  return out;
}

namespace {

template <class Coeff, class Fmt>
ordered_json decomposition_json(const Decomposition<Coeff>& d, Fmt format) {
  ordered_json out;
  out["kind"] = d.kind;
  const char* key = d.kind == "permutation" ? "perm" : "cols";
  out["terms"] = ordered_json::array();
  for (const auto& t : d.terms) {
    ordered_json term;
    term["coeff"] = format(t.coeff);
    term[key] = t.cols;
    out["terms"].push_back(std::move(term));
  }
  return out;
}

}  // namespace

nlohmann::ordered_json decomposition_to_json(const RationalDecomposition& d) {
  return decomposition_json(d, [](const Rational& c) { return rational_to_string(c); });
}

nlohmann::ordered_json decomposition_to_json(const RealDecomposition& d) {
  return decomposition_json(d, [](double c) { return c; });
}

nlohmann::ordered_json empirical_to_json(const EmpiricalMatrix& em, const CondProbMatrix* exact) {
  ordered_json out;
  out["rows"] = em.row_context_name;
  out["cols"] = em.col_context_name;
  out["row_atoms"] = em.row_atoms;
  out["col_atoms"] = em.col_atoms;
  out["generator"] = "mt19937_64";
  out["seed"] = em.seed;
  out["shards"] = em.shards;
  out["draws"] = em.draws;
  out["counts"] = em.counts;
  out["row_totals"] = em.row_totals;
  out["estimates"] = ordered_json::array();
  for (size_t i = 0; i < em.counts.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (size_t j = 0; j < em.counts[i].size(); ++j) {
      if (em.row_defined(static_cast<int>(i)))
        row.push_back(em.estimate(static_cast<int>(i), static_cast<int>(j)));
      else
        row.push_back("0/0");
    }
    out["estimates"].push_back(std::move(row));
  }
  if (exact) {
    out["exact"] = matrix_to_json(*exact)["entries"];
    double dev = 0;
    bool any = false;
    for (int i = 0; i < exact->rows(); ++i) {
      if (!em.row_defined(i) || !exact->row_defined(i)) continue;
      for (int j = 0; j < exact->cols(); ++j) {
        dev = std::max(dev, std::abs(em.estimate(i, j) -
                                     rational_to_double(exact->entries[i][j].p)));
        any = true;
      }
    }
    if (any)
      out["max_abs_deviation"] = dev;
    else
      out["max_abs_deviation"] = nullptr;
  }
  return out;
}

std::string states_to_table(const StateFamily& family) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"atom"};
  for (int k = 1; k <= family.size(); ++k) header.push_back(std::to_string(k));
  cells.push_back(std::move(header));
  for (const auto& atom : family.logic().atoms()) {
    std::vector<std::string> row{atom};
    for (int k = 1; k <= family.size(); ++k) row.push_back(std::to_string(family.value(k, atom)));
    cells.push_back(std::move(row));
  }
  return render_grid(cells);
}

std::string labels_to_table(const Logic& logic, const PartitionLabeling& labeling) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& atom : logic.atoms()) {
    std::string set = "{";
    const auto& label = labeling.label(atom);
    for (size_t i = 0; i < label.size(); ++i) {
      if (i) set += ",";
      set += std::to_string(label[i]);
    }
    set += "}";
    cells.push_back({atom, set});
  }
  return render_grid(cells);
}

std::string validation_to_table(const ValidationReport& report) {
  std::string out = report.ok() ? "valid\n" : "invalid\n";
  for (const auto& v : report.violations)
    out += std::string(v.severity == Severity::error ? "error" : "warning") + " [" + v.kind +
           "] " + v.message + "\n";
  return out;
}

std::string matrix_to_table(const CondProbMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& a : m.col_atoms) header.push_back(a);
  cells.push_back(std::move(header));
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row{m.row_atoms[i]};
    for (int j = 0; j < m.cols(); ++j) row.push_back(entry_string(m.entries[i][j]));
    cells.push_back(std::move(row));
  }
  return render_grid(cells);
}

std::string real_matrix_to_table(const Eigen::MatrixXd& m,
                                 const std::vector<std::string>& row_atoms,
                                 const std::vector<std::string>& col_atoms) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& a : col_atoms) header.push_back(a);
  cells.push_back(std::move(header));
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row{i < static_cast<int>(row_atoms.size()) ? row_atoms[i]
                                                                        : std::to_string(i + 1)};
    for (int j = 0; j < m.cols(); ++j) row.push_back(fmt(m(i, j)));
    cells.push_back(std::move(row));
  }
  return render_grid(cells);
}

namespace {

std::string verdict_flags(bool row, bool doubly, bool partial) {
  std::string out;
  out += "row_stochastic:    " + std::string(row ? "yes" : "no") + "\n";
  out += "doubly_stochastic: " + std::string(doubly ? "yes" : "no") + "\n";
  out += "partial:           " + std::string(partial ? "yes" : "no") + "\n";
  return out;
}

}  // namespace

std::string verdict_to_table(const StochasticVerdict& v) {
  std::string out = verdict_flags(v.row_stochastic, v.doubly_stochastic, v.partial);
  out += "row_sums:";
  for (const auto& s : v.row_sums) out += " " + entry_string(s);
  out += "\ncol_sums:";
  for (const auto& s : v.col_sums) out += " " + entry_string(s);
  out += "\n";
  for (const auto& s : v.violations) out += "violation: " + s + "\n";
  return out;
}

std::string verdict_to_table(const StochasticVerdictReal& v) {
  std::string out = verdict_flags(v.row_stochastic, v.doubly_stochastic, false);
  out += "row_sums:";
  for (double s : v.row_sums) out += " " + fmt(s);
  out += "\ncol_sums:";
  for (double s : v.col_sums) out += " " + fmt(s);
  out += "\n";
  for (const auto& s : v.violations) out += "violation: " + s + "\n";
  return out;
}

namespace {

template <class Coeff, class Fmt>
std::string decomposition_table(const Decomposition<Coeff>& d, Fmt format) {
  std::string out = d.kind + ", " + std::to_string(d.terms.size()) + " terms\n";
  for (const auto& t : d.terms) {
    out += format(t.coeff) + "  (";
    for (size_t i = 0; i < t.cols.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(t.cols[i]);
    }
    out += ")\n";
  }
  return out;
}

}  // namespace

std::string decomposition_to_table(const RationalDecomposition& d) {
  return decomposition_table(d, [](const Rational& c) { return rational_to_string(c); });
}

std::string decomposition_to_table(const RealDecomposition& d) {
  return decomposition_table(d, [](double c) { return fmt(c); });
}

std::string empirical_to_table(const EmpiricalMatrix& em, const CondProbMatrix* exact) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& a : em.col_atoms) header.push_back(a);
  cells.push_back(std::move(header));
  for (size_t i = 0; i < em.counts.size(); ++i) {
    std::vector<std::string> row{em.row_atoms[i]};
    for (size_t j = 0; j < em.counts[i].size(); ++j)
      row.push_back(em.row_defined(static_cast<int>(i))
                        ? fmt(em.estimate(static_cast<int>(i), static_cast<int>(j)))
                        : "0/0");
    cells.push_back(std::move(row));
  }
  std::string out = render_grid(cells);
  out += "draws: " + std::to_string(em.draws) + ", seed: " + std::to_string(em.seed) +
         ", shards: " + std::to_string(em.shards) + ", generator: mt19937_64\n";
  if (exact) {
    double dev = 0;
    bool any = false;
    for (int i = 0; i < exact->rows(); ++i) {
      if (!em.row_defined(i) || !exact->row_defined(i)) continue;
      for (int j = 0; j < exact->cols(); ++j) {
        dev = std::max(dev, std::abs(em.estimate(i, j) -
                                     rational_to_double(exact->entries[i][j].p)));
        any = true;
      }
    }
    out += "max_abs_deviation: " + (any ? fmt(dev) : std::string("n/a")) + "\n";
  }
  return out;
}

}  // namespace ctxprob

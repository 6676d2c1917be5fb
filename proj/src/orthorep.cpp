#include "ctxprob/orthorep.hpp"

#include <cmath>
#include <string>

#include "ctxprob/error.hpp"

namespace ctxprob {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

ValidationReport check_orthogonal_rep(const Logic& logic, const OrthogonalRep& rep,
                                      double tol) {
  if (rep.dimension <= 0) throw DomainError("representation dimension must be positive");
  for (const auto& id : logic.atoms()) {
    auto it = rep.vectors.find(id);
    if (it == rep.vectors.end()) throw DomainError("missing vector for atom '" + id + "'");
    if (it->second.size() != rep.dimension)
      throw DomainError("vector for atom '" + id + "' has dimension " +
                        std::to_string(it->second.size()) + ", expected " +
                        std::to_string(rep.dimension));
  }

  ValidationReport report;
  const auto& atoms = logic.atoms();

  for (const auto& id : atoms) {
    const double norm = rep.vectors.at(id).norm();
    if (std::abs(norm - 1.0) > tol)
      report.violations.push_back({Severity::error, "unit-norm",
                                   "vector for atom '" + id + "' has norm " + fmt(norm)});
  }

  for (size_t i = 0; i < atoms.size(); ++i) {
    for (size_t j = i + 1; j < atoms.size(); ++j) {
      const auto& u = rep.vectors.at(atoms[i]);
      const auto& v = rep.vectors.at(atoms[j]);
      const double overlap = std::abs(u.dot(v));
      if ((u - v).norm() <= tol)
        report.violations.push_back({Severity::error, "duplicate-vector",
                                     "atoms '" + atoms[i] + "' and '" + atoms[j] +
                                         "' map to numerically identical vectors"});
      if (logic.share_context(atoms[i], atoms[j])) {
        if (overlap > tol)
          report.violations.push_back(
              {Severity::error, "orthogonality",
               "co-contextual atoms '" + atoms[i] + "' and '" + atoms[j] +
                   "' have |<u,v>| = " + fmt(overlap)});
      } else if (overlap <= tol) {
        report.violations.push_back(
            {Severity::warning, "faithfulness",
             "atoms '" + atoms[i] + "' and '" + atoms[j] +
                 "' share no context but their vectors are orthogonal"});
      }
    }
  }

  return report;
}

}  // namespace ctxprob

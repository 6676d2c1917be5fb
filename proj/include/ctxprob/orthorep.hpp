#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>

#include "ctxprob/logic.hpp"

namespace ctxprob {

// Assignment of one complex unit vector per atom. Vectors for atoms inside a common
// context are expected to be mutually orthogonal.
struct OrthogonalRep {
  int dimension = 0;
  std::map<std::string, Eigen::VectorXcd> vectors;
};

// Checks a representation against a logic.
//   errors:   missing vector for an atom, dimension mismatch (thrown as DomainError);
//             unit-norm violation, in-context orthogonality violation, numerically
//             identical vectors for distinct atoms (reported).
//   warnings: atoms sharing no context whose vectors are orthogonal within tol
//             (the representation fails to be faithful there).
ValidationReport check_orthogonal_rep(const Logic& logic, const OrthogonalRep& rep,
                                      double tol = 1e-10);

}  // namespace ctxprob

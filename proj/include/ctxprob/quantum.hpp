#pragma once

#include <Eigen/Dense>

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ctxprob/orthorep.hpp"

namespace ctxprob {

// A full orthonormal basis playing the role of one context, columns in context order.
struct BasisContext {
  std::string name;
  std::vector<std::string> atom_ids;
  Eigen::MatrixXcd vectors;  // d x d, column k belongs to atom_ids[k]

  int dimension() const { return static_cast<int>(vectors.rows()); }
};

// Extracts the basis of one context from a representation. Requires the context to have
// exactly `dimension` atoms; orthonormality is checked by the consumers below.
BasisContext basis_from_rep(const Logic& logic, const OrthogonalRep& rep,
                            std::string_view context_name);

// Throws DomainError unless the columns form an orthonormal basis within tol.
void require_orthonormal(const BasisContext& basis, double tol);

// entry(i,j) = |<e_i, f_j>|^2. Both arguments must be full orthonormal bases of the
// same dimension (within tol); the result is then doubly stochastic up to roundoff.
Eigen::MatrixXd born_cond_prob_matrix(const BasisContext& rows, const BasisContext& cols,
                                      double tol = 1e-10);

Eigen::MatrixXcd rank1_projector(const Eigen::VectorXcd& v);

// Re tr(E F) for orthogonal projectors E, F (hermiticity and idempotence checked
// within tol). Agrees with the |<e,f>|^2 form on rank-1 projectors.
double projector_trace_prob(const Eigen::MatrixXcd& e, const Eigen::MatrixXcd& f,
                            double tol = 1e-10);

// Probabilities |<psi, e_i>|^2 of a unit vector across one basis.
Eigen::VectorXd state_probability_vector(const Eigen::VectorXcd& psi, const BasisContext& basis,
                                         double tol = 1e-10);

// Unitary with Haar-like distribution: QR of an i.i.d. standard complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(int dimension, std::mt19937_64& rng);

}  // namespace ctxprob

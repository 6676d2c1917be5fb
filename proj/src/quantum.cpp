#include "ctxprob/quantum.hpp"

#include <cmath>

#include "ctxprob/error.hpp"

namespace ctxprob {

BasisContext basis_from_rep(const Logic& logic, const OrthogonalRep& rep,
                            std::string_view context_name) {
  const Context& ctx = logic.context(context_name);
  if (static_cast<int>(ctx.atoms.size()) != rep.dimension)
    throw DomainError("context '" + ctx.name + "' has " + std::to_string(ctx.atoms.size()) +
                      " atoms; a full basis in dimension " + std::to_string(rep.dimension) +
                      " needs exactly that many");
  BasisContext basis;
  basis.name = ctx.name;
  basis.atom_ids = ctx.atoms;
  basis.vectors.resize(rep.dimension, rep.dimension);
  for (size_t k = 0; k < ctx.atoms.size(); ++k) {
    auto it = rep.vectors.find(ctx.atoms[k]);
    if (it == rep.vectors.end())
      throw DomainError("missing vector for atom '" + ctx.atoms[k] + "'");
    if (it->second.size() != rep.dimension)
      throw DomainError("vector for atom '" + ctx.atoms[k] + "' has wrong dimension");
    basis.vectors.col(k) = it->second;
  }
  return basis;
}

void require_orthonormal(const BasisContext& basis, double tol) {
  const int d = basis.dimension();
  if (basis.vectors.cols() != d) throw DomainError("basis is not square");
  const Eigen::MatrixXcd gram = basis.vectors.adjoint() * basis.vectors;
  const double defect = (gram - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > tol)
    throw DomainError("basis '" + basis.name + "' is not orthonormal (defect " +
                      std::to_string(defect) + ")");
}

Eigen::MatrixXd born_cond_prob_matrix(const BasisContext& rows, const BasisContext& cols,
                                      double tol) {
  if (rows.dimension() != cols.dimension())
    throw DomainError("bases have different dimensions");
  require_orthonormal(rows, tol);
  require_orthonormal(cols, tol);
  return (rows.vectors.adjoint() * cols.vectors).cwiseAbs2();
}

Eigen::MatrixXcd rank1_projector(const Eigen::VectorXcd& v) { return v * v.adjoint(); }

namespace {

void require_projector(const Eigen::MatrixXcd& p, double tol, const char* which) {
  if (p.rows() != p.cols()) throw DomainError(std::string(which) + " is not square");
  if ((p - p.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw DomainError(std::string(which) + " is not hermitian");
  if ((p * p - p).cwiseAbs().maxCoeff() > tol)
    throw DomainError(std::string(which) + " is not idempotent");
}

}  // namespace

double projector_trace_prob(const Eigen::MatrixXcd& e, const Eigen::MatrixXcd& f, double tol) {
  require_projector(e, tol, "left projector");
  require_projector(f, tol, "right projector");
  if (e.rows() != f.rows()) throw DomainError("projectors have different dimensions");
  return (e * f).trace().real();
}

Eigen::VectorXd state_probability_vector(const Eigen::VectorXcd& psi, const BasisContext& basis,
                                         double tol) {
  if (psi.size() != basis.dimension())
    throw DomainError("state vector has wrong dimension");
  if (std::abs(psi.norm() - 1.0) > tol) throw DomainError("state vector is not normalized");
  require_orthonormal(basis, tol);
  return (basis.vectors.adjoint() * psi).cwiseAbs2();
}

Eigen::MatrixXcd random_unitary(int dimension, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(dimension, dimension);
  for (int i = 0; i < dimension; ++i)
    for (int j = 0; j < dimension; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  return q.leftCols(dimension);
}

}  // namespace ctxprob

#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <memory>
#include <stdexcept>
#include <vector>

#include "greenflow/grid.hpp"

namespace greenflow {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Discrete Laplace-Beltrami operator in stiffness form A = -W L, where L is
// the 5-point flux stencil of (1/phi) d_r(phi d_r) + (1/phi^2) d_theta^2 and
// W the diagonal of node weights. A is symmetric with nonpositive
// off-diagonal entries and zero row sums at interior rows, so L is symmetric
// in the volume-weighted inner product and the discrete maximum principle
// holds.
class SparseOperator {
 public:
  SparseOperator(std::shared_ptr<const PolarGrid> grid,
                 Eigen::SparseMatrix<double> stiffness);

  const PolarGrid& grid() const { return *grid_; }
  std::shared_ptr<const PolarGrid> grid_ptr() const { return grid_; }
  int dimension() const { return static_cast<int>(stiffness_.rows()); }
  bool symmetric() const { return true; }
  const Eigen::SparseMatrix<double>& stiffness() const { return stiffness_; }

  // (Delta u)_i = -(A u)_i / w_i at every node; boundary-ring rows see the
  // truncation circle as Dirichlet zero.
  ScalarField apply_laplacian(const ScalarField& u) const;

 private:
  std::shared_ptr<const PolarGrid> grid_;
  Eigen::SparseMatrix<double> stiffness_;
};

SparseOperator discrete_laplacian(std::shared_ptr<const PolarGrid> grid);

// Dirichlet solves on B_p(R) for one exhaustion radius R: factors once,
// solves many right-hand sides. Solutions vanish on and outside the
// boundary ring. Residual contract ||A u + W f|| <= 1e-10 ||W f||.
class DirichletSolver {
 public:
  DirichletSolver(const SparseOperator& op, double domain_radius);

  // Delta u = rhs on the interior of B_p(R), u = 0 outside.
  ScalarField solve(const ScalarField& rhs) const;
  // Delta u = -delta_node (discrete delta: 1/cell volume at `node`).
  ScalarField solve_delta(int node) const;

  double domain_radius() const { return domain_radius_; }
  int interior_count() const { return static_cast<int>(interior_.size()); }
  const SparseOperator& op() const { return *op_; }

 private:
  ScalarField expand(const Eigen::VectorXd& x) const;
  Eigen::VectorXd solve_reduced(const Eigen::VectorXd& rhs_reduced) const;

  const SparseOperator* op_;
  double domain_radius_;
  std::vector<int> interior_;       // node ids inside B_p(R)
  std::vector<int> reduced_index_;  // node id -> interior position or -1
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
};

ScalarField solve_dirichlet(const SparseOperator& op, const ScalarField& rhs,
                            double domain_radius);

struct EigenPair {
  double value = 0.0;
  ScalarField field;  // ground state, positive in the interior, W-normalized
  int iterations = 0;
};

// Smallest Dirichlet eigenvalue of -Delta on B_p(R) via inverse iteration
// with the factored stiffness matrix; Rayleigh quotient and returned value
// agree to 1e-8 by construction.
EigenPair smallest_eigenpair(const SparseOperator& op, double domain_radius);

// Same on an arbitrary interior node set (geodesic balls off the pole).
EigenPair smallest_eigenpair_masked(const SparseOperator& op,
                                    const std::vector<int>& interior_nodes);

}  // namespace greenflow

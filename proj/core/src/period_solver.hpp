#pragma once

#include <vector>

#include "macrogame/state_space.hpp"

namespace macrogame {
namespace internal {

bool model_is_symmetric(const StateSpaceModel& m);

// Pair-basis image of the structural system. All solver algebra runs here:
// under a country swap the pair components only change sign, which floating
// point preserves exactly, so symmetric-model solves mirror bit-for-bit.
struct PairSystem {
  explicit PairSystem(const StateSpaceModel& m);

  const StateSpaceModel* model;
  Matrix Gp, Hp, Jp, Kp;
  Vector Lp;  // zero when the model has no jump variable
  Matrix Sxv_p, Sxu_p;
  int e_slot = 0;
  bool has_jump = false;
  bool symmetric = false;

  // Within-period solve anchored on a next-period jump rule
  // E[e'] = C x' + c'. With C empty (or no jump) this is the plain reduction.
  struct Reduced {
    Matrix Phi_x, Phi_u, Phi_d;  // v = Phi_x x + Phi_u u + Phi_d d + phi_c c'
    Vector phi_c;
    Matrix A, B, E;  // x' = A x + B u + E d + b c'
    Vector b;
    Eigen::RowVectorXd ex, eu, ed;  // e = ex x + eu u + ed d + ec c'
    double ec = 0.0;
  };
  Reduced reduce(const Eigen::RowVectorXd& c_rule) const;
  Reduced reduce() const { return reduce(Eigen::RowVectorXd()); }

  // Blanchard-Kahn transition over [x; e] (or plain x when no jump), with
  // instruments closed by the feedback u = -P x when given.
  Matrix bk_matrix(const Eigen::RowVectorXd* unused = nullptr) const;
  Matrix bk_matrix_with_feedback(const Matrix* feedback_pair) const;

  // Zeroes pair-basis entries whose parity cannot appear for a symmetric
  // model (used to strip numerical cross-parity residue from subspace
  // computations). sign = parity of the quantity the row describes.
  void purify_row(Eigen::RowVectorXd& row, int sign,
                  const PairBasis& basis) const;
};

struct SortedSchur {
  Matrix vs;                   // orthogonal basis, stable block first
  std::vector<double> moduli;  // eigenvalue moduli in Schur order
  int n_stable = 0;
};

// Real Schur decomposition with stable eigenvalues (|lambda| <= 1 + tol)
// ordered to the top-left, via LAPACK dgees.
SortedSchur sorted_real_schur(const Matrix& m, double unit_circle_tol);

}  // namespace internal
}  // namespace macrogame

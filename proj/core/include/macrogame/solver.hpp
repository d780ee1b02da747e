#pragma once

#include <vector>

#include "macrogame/state_space.hpp"

namespace macrogame {

enum class StabilityClass { Determinate, Explosive, Indeterminate };

const char* to_string(StabilityClass c);

// Eigenvalue census of the closed transition map with Blanchard-Kahn
// counting: determinate exactly when the unstable roots match the jump
// variables in number.
struct StabilityReport {
  std::vector<double> eigenvalue_moduli;  // sorted descending
  int n_unstable = 0;
  int n_jump = 0;
  StabilityClass classification = StabilityClass::Determinate;
  double unit_circle_tol = 1e-9;
};

// Time-indexed record of a solved path. Columns are dates; all blocks are in
// country coordinates. x_init is the predetermined state entering date 0.
struct Trajectory {
  int horizon = 0;
  Vector x_init;
  Matrix v;  // nv x horizon, within-period variables
  Matrix x;  // nx x horizon, end-of-period states
  Matrix u;  // nu x horizon, instruments
  Matrix d;  // nd x horizon, exogenous inputs
  bool has_jump = false;
  double e_terminal = 0.0;       // exchange-rate closure at the horizon end
  double terminal_drift = 0.0;   // max |x_{T-1} - x_{T-2}|, settles to ~0
  bool terminal_converged = true;
  StabilityReport stability;

  double value(const StateSpaceModel& m, Cv var, CountryId c, int t) const {
    return v(m.v_of(var, c), t);
  }
  double e(const StateSpaceModel& m, int t) const { return v(m.v_e(), t); }
  double z(const StateSpaceModel& m, int t) const { return v(m.v_z(), t); }
};

// Anticipated exogenous paths. Columns past the stored range repeat the last
// column (sequences settle to constants); missing blocks are zero.
struct AnticipatedSequence {
  Matrix d;  // nd x T_d
  Matrix u;  // nu x T_u (instrument paths under passive/exogenous policy)

  Vector d_at(int t, int nd) const;
  Vector u_at(int t, int nu) const;
  // First date from which both paths are constant.
  int settle_date() const;
};

struct SolverOptions {
  double unit_circle_tol = 1e-9;
  double terminal_tol = 1e-6;
  bool strict_terminal = false;  // throw HorizonTooShort on unsettled tails
};

// Spectrum of the transition map under the supplied linear feedback rules
// (u = -P x, country coordinates), or under passive instruments when absent.
StabilityReport eigen_classify(const StateSpaceModel& model,
                               const Matrix* feedback = nullptr,
                               double unit_circle_tol = 1e-9);

// Unique bounded perfect-foresight path for an anticipated instrument/shock
// sequence. Jump variables take their saddle values at every date (news moves
// the exchange rate on impact); predetermined states evolve forward. With no
// jump variables this is the plain forward recursion, produced for any
// stability class so divergent paths remain inspectable.
Trajectory solve_saddle_path(const StateSpaceModel& model,
                             const AnticipatedSequence& seq, int horizon,
                             const Vector& x_init,
                             const SolverOptions& opts = {});
Trajectory solve_saddle_path(const StateSpaceModel& model,
                             const AnticipatedSequence& seq, int horizon,
                             const SolverOptions& opts = {});

// Forward recursion for the backward-expectations variant (requires
// n_jump == 0); identical residual contract as solve_saddle_path.
Trajectory simulate_backward(const StateSpaceModel& model,
                             const AnticipatedSequence& seq, int horizon,
                             const Vector& x_init,
                             const SolverOptions& opts = {});
Trajectory simulate_backward(const StateSpaceModel& model,
                             const AnticipatedSequence& seq, int horizon,
                             const SolverOptions& opts = {});

// Largest violation of any structural equation (and of the state-update
// identities) along the trajectory.
double residual_check(const StateSpaceModel& model, const Trajectory& traj);

}  // namespace macrogame

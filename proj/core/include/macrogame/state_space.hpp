#pragma once

#include <array>
#include <string>
#include <vector>

#include "macrogame/equations.hpp"
#include "macrogame/pair_basis.hpp"

namespace macrogame {

// Within-period endogenous variables, one (home, foreign) pair each.
enum class Cv { y, q, pi, r, i, tau, tb, b, f, w, p };
constexpr int kNumCv = 11;

// Predetermined states carried between periods, one pair each; lagged
// instruments (and, under Flexible/Backward, the lagged exchange rate) are
// appended after these.
enum class Cx { b, f, w, p, pilag };
constexpr int kNumCx = 5;

// Exogenous inputs, one pair each: debt targets and additive shocks to the
// demand and inflation equations.
enum class Cd { b_target, eps_y, eps_pi };
constexpr int kNumCd = 3;

enum class PlayerId { GovHome, GovForeign, CBHome, CBForeign, CBUnion };

const char* to_string(PlayerId id);

struct InstrumentInfo {
  std::string name;   // "g_home", "i_union", ...
  PlayerId owner;     // canonical owner
  bool is_rate;       // false for spending
};

// Linearized two-country model in structural form:
//
//   G v_t = H x_{t-1} + J u_t + K d_t + L E_t[e_{t+1}]
//   x_t   = Sx_v v_t + Sx_u u_t
//
// v stacks all within-period variables (see Cv plus the exchange rate e and
// the real exchange rate z), x the predetermined states, u the instruments
// owned by players, d the exogenous inputs. L is nonzero only under
// Flexible/Rational, where the exchange rate is the single jump variable.
// Evaluating these rows reproduces the behavioral equations in
// equations.hpp, linearized around the reference path.
struct StateSpaceModel {
  Calibration calib_home;
  Calibration calib_foreign;
  RegimeSpec regime;
  BehaviorSpec behavior;

  int nv = 0;      // within-period variables
  int nx = 0;      // predetermined states
  int nu = 0;      // instruments
  int nd = 0;      // exogenous inputs
  int n_jump = 0;  // non-predetermined variables (0 or 1)

  Matrix G, H, J, K, L;
  Matrix Sx_v, Sx_u;

  PairBasis rows;    // equation pairing (same shape as vars)
  PairBasis vars;    // v layout
  PairBasis states;  // x layout
  PairBasis inst;    // u layout
  PairBasis shocks;  // d layout

  std::vector<InstrumentInfo> instruments;

  // --- index accessors -----------------------------------------------------
  int v_of(Cv v, CountryId c) const {
    return 2 * static_cast<int>(v) + (c == CountryId::Foreign ? 1 : 0);
  }
  int v_e() const { return 2 * kNumCv; }
  int v_z() const { return 2 * kNumCv + 1; }

  int x_of(Cx v, CountryId c) const {
    return 2 * static_cast<int>(v) + (c == CountryId::Foreign ? 1 : 0);
  }
  // State slot holding the lag of instrument k.
  int x_lag_of(int instrument) const { return 2 * kNumCx + instrument; }
  // Lagged exchange-rate state; -1 when absent.
  int x_elag() const { return x_elag_; }

  int d_of(Cd v, CountryId c) const {
    return 2 * static_cast<int>(v) + (c == CountryId::Foreign ? 1 : 0);
  }

  const Calibration& calib(CountryId c) const {
    return c == CountryId::Home ? calib_home : calib_foreign;
  }

  int n_pre() const { return nx; }
  int n_inst() const { return nu; }

  int x_elag_ = -1;
};

// Stacks the behavioral equations into the structural form above. The
// symmetric-country overload is the common case.
StateSpaceModel assemble_linear_system(const Calibration& home,
                                       const Calibration& foreign,
                                       const RegimeSpec& regime,
                                       const BehaviorSpec& behavior);

inline StateSpaceModel assemble_linear_system(const Calibration& calib,
                                              const RegimeSpec& regime,
                                              const BehaviorSpec& behavior) {
  return assemble_linear_system(calib, calib, regime, behavior);
}

// Long-run wealth balance: solves w0 + a*r = b_target + f per country,
// jointly with the two-country closure (net-foreign-asset deviations sum to
// zero) and the regime's long-run rate link. Output gaps are zero; debt sits
// on target. All entries of the returned WorldState are deviations from the
// reference path.
struct SteadyTargets {
  double b_target_home = 0.0;     // deviation of the home debt target
  double b_target_foreign = 0.0;  // deviation of the foreign debt target
};
WorldState steady_state(const Calibration& home, const Calibration& foreign,
                        const RegimeSpec& regime, const SteadyTargets& targets);

inline WorldState steady_state(const Calibration& calib,
                               const RegimeSpec& regime,
                               const SteadyTargets& targets) {
  return steady_state(calib, calib, regime, targets);
}

}  // namespace macrogame

#include "macrogame/solver.hpp"

#include <lapacke.h>

#include <cmath>

#include "period_solver.hpp"

namespace macrogame {

namespace internal {

bool model_is_symmetric(const StateSpaceModel& m) {
  if (m.regime.kind == RegimeKind::SingleMarket) return false;
  const Calibration& a = m.calib_home;
  const Calibration& b = m.calib_foreign;
  return a.c == b.c && a.sigma == b.sigma && a.a == b.a && a.w0 == b.w0 &&
         a.kappa == b.kappa && a.alpha_open == b.alpha_open && a.nu == b.nu &&
         a.m == b.m && a.lambda_p == b.lambda_p && a.theta_idx == b.theta_idx &&
         a.phi_risk == b.phi_risk && a.beta_tax == b.beta_tax &&
         a.b_bar == b.b_bar && a.f_bar == b.f_bar && a.discount == b.discount;
}

PairSystem::PairSystem(const StateSpaceModel& m) : model(&m) {
  Gp = m.rows.mat_to_pair(m.G, m.vars);
  Hp = m.rows.mat_to_pair(m.H, m.states);
  Jp = m.rows.mat_to_pair(m.J, m.inst);
  Kp = m.rows.mat_to_pair(m.K, m.shocks);
  has_jump = m.n_jump > 0;
  if (has_jump) {
    Lp = m.rows.mat_to_pair(m.L, PairBasis({0}, {1})).col(0);
  } else {
    Lp = Vector::Zero(m.nv);
  }
  Sxv_p = m.states.mat_to_pair(m.Sx_v, m.vars);
  Sxu_p = m.states.mat_to_pair(m.Sx_u, m.inst);
  e_slot = m.v_e();
  symmetric = model_is_symmetric(m);
}

PairSystem::Reduced PairSystem::reduce(const Eigen::RowVectorXd& c_rule) const {
  const int nv = model->nv;
  Matrix lhs = Gp;
  Matrix j_eff = Jp;
  if (has_jump && c_rule.size() > 0) {
    lhs.noalias() -= Lp * (c_rule * Sxv_p);
    j_eff.noalias() += Lp * (c_rule * Sxu_p);
  }
  Eigen::FullPivLU<Matrix> lu(lhs);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible())
    throw DecompositionFailure("within-period system is singular");

  Reduced r;
  r.Phi_x = lu.solve(Hp);
  r.Phi_u = lu.solve(j_eff);
  r.Phi_d = lu.solve(Kp);
  r.phi_c = has_jump ? Vector(lu.solve(Lp)) : Vector(Vector::Zero(nv));
  r.A = Sxv_p * r.Phi_x;
  r.B = Sxv_p * r.Phi_u + Sxu_p;
  r.E = Sxv_p * r.Phi_d;
  r.b = Sxv_p * r.phi_c;
  r.ex = r.Phi_x.row(e_slot);
  r.eu = r.Phi_u.row(e_slot);
  r.ed = r.Phi_d.row(e_slot);
  r.ec = r.phi_c(e_slot);
  return r;
}

void PairSystem::purify_row(Eigen::RowVectorXd& row, int sign,
                            const PairBasis& basis) const {
  if (!symmetric) return;
  const auto& signs = basis.pair_signs();
  for (int i = 0; i < row.size(); ++i)
    if (signs[i] != sign) row(i) = 0.0;
}

Matrix PairSystem::bk_matrix_with_feedback(const Matrix* feedback_pair) const {
  const int nx = model->nx;
  Eigen::FullPivLU<Matrix> lu(Gp);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible())
    throw DecompositionFailure("within-period system is singular");
  // Open transition with the realized next jump as an input:
  //   x' = ax x + bu u + w e',  e = sx x + su u + st e'
  const Matrix px = lu.solve(Hp);
  const Matrix pu = lu.solve(Jp);
  Matrix ax = Sxv_p * px;
  Matrix bu = Sxv_p * pu + Sxu_p;
  if (!has_jump) {
    if (feedback_pair) ax.noalias() -= bu * (*feedback_pair);
    return ax;
  }
  const Vector tl = lu.solve(Lp);
  Eigen::RowVectorXd sx = px.row(e_slot);
  const Eigen::RowVectorXd su = pu.row(e_slot);
  const double st = tl(e_slot);
  if (std::abs(st) < 1e-14)
    throw DecompositionFailure(
        "jump variable does not respond to its own expectation");
  const Vector w = Sxv_p * tl;
  if (feedback_pair) {
    ax.noalias() -= bu * (*feedback_pair);
    sx -= su * (*feedback_pair);
  }
  Matrix m(nx + 1, nx + 1);
  m.topLeftCorner(nx, nx) = ax - (w / st) * sx;
  m.topRightCorner(nx, 1) = w / st;
  m.bottomLeftCorner(1, nx) = -sx / st;
  m(nx, nx) = 1.0 / st;
  return m;
}

Matrix PairSystem::bk_matrix(const Eigen::RowVectorXd*) const {
  return bk_matrix_with_feedback(nullptr);
}

namespace {
thread_local double g_schur_tol = 1e-9;
lapack_logical select_stable(const double* wr, const double* wi) {
  return std::hypot(*wr, *wi) <= 1.0 + g_schur_tol ? 1 : 0;
}
}  // namespace

SortedSchur sorted_real_schur(const Matrix& m, double unit_circle_tol) {
  const lapack_int n = static_cast<lapack_int>(m.rows());
  Matrix a = m;  // column-major, overwritten by dgees
  Matrix vs(n, n);
  std::vector<double> wr(n), wi(n);
  lapack_int sdim = 0;
  g_schur_tol = unit_circle_tol;
  const lapack_int info = LAPACKE_dgees(
      LAPACK_COL_MAJOR, 'V', 'S', select_stable, n, a.data(), n, &sdim,
      wr.data(), wi.data(), vs.data(), n);
  if (info != 0)
    throw DecompositionFailure("Schur decomposition failed (dgees info=" +
                               std::to_string(info) + ")");
  SortedSchur out;
  out.vs = std::move(vs);
  out.moduli.resize(n);
  for (lapack_int i = 0; i < n; ++i) out.moduli[i] = std::hypot(wr[i], wi[i]);
  out.n_stable = static_cast<int>(sdim);
  return out;
}

}  // namespace internal

using internal::PairSystem;

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Determinate:   return "determinate";
    case StabilityClass::Explosive:     return "explosive";
    case StabilityClass::Indeterminate: return "indeterminate";
  }
  return "?";
}

Vector AnticipatedSequence::d_at(int t, int nd) const {
  if (d.rows() == 0) return Vector::Zero(nd);
  if (d.rows() != nd) throw DimensionMismatch("sequence d row count");
  if (d.cols() == 0) return Vector::Zero(nd);
  const int c = std::min<int>(t, static_cast<int>(d.cols()) - 1);
  return d.col(std::max(c, 0));
}

Vector AnticipatedSequence::u_at(int t, int nu) const {
  if (u.rows() == 0) return Vector::Zero(nu);
  if (u.rows() != nu) throw DimensionMismatch("sequence u row count");
  if (u.cols() == 0) return Vector::Zero(nu);
  const int c = std::min<int>(t, static_cast<int>(u.cols()) - 1);
  return u.col(std::max(c, 0));
}

int AnticipatedSequence::settle_date() const {
  int settle = 0;
  const auto scan = [&settle](const Matrix& m) {
    if (m.cols() <= 1) return;
    const Vector last = m.col(m.cols() - 1);
    for (int t = static_cast<int>(m.cols()) - 2; t >= 0; --t) {
      if ((m.col(t) - last).lpNorm<Eigen::Infinity>() != 0.0) {
        settle = std::max(settle, t + 1);
        return;
      }
    }
  };
  scan(d);
  scan(u);
  return settle;
}

namespace {

StabilityReport classify_matrix(const Matrix& m, int n_jump, double tol) {
  const internal::SortedSchur schur = internal::sorted_real_schur(m, tol);
  StabilityReport rep;
  rep.unit_circle_tol = tol;
  rep.n_jump = n_jump;
  rep.eigenvalue_moduli = schur.moduli;
  std::sort(rep.eigenvalue_moduli.rbegin(), rep.eigenvalue_moduli.rend());
  rep.n_unstable = static_cast<int>(m.rows()) - schur.n_stable;
  rep.classification = rep.n_unstable == n_jump ? StabilityClass::Determinate
                       : rep.n_unstable > n_jump ? StabilityClass::Explosive
                                               : StabilityClass::Indeterminate;
  return rep;
}

// Stationary saddle relation e = C x from the stable invariant subspace.
Eigen::RowVectorXd stationary_jump_rule(const PairSystem& sys,
                                        const Matrix& bk, double tol) {
  const int nx = sys.model->nx;
  const internal::SortedSchur schur = internal::sorted_real_schur(bk, tol);
  if (schur.n_stable != nx)
    throw NotDeterminate("saddle path requires a determinate system");
  const Matrix u1x = schur.vs.topLeftCorner(nx, nx);
  const Matrix u1e = schur.vs.block(nx, 0, 1, nx);
  // e = C x requires C u1x = u1e, i.e. u1x' C' = u1e'.
  Eigen::FullPivLU<Matrix> lu(u1x.transpose());
  lu.setThreshold(1e-13);
  if (!lu.isInvertible())
    throw DecompositionFailure(
        "stable subspace is not a graph over the predetermined states");
  Eigen::RowVectorXd c_rule = lu.solve(u1e.transpose()).transpose();
  // For symmetric models the exchange-rate rule has odd parity; strip the
  // numerical cross-parity residue so mirrored runs stay exact.
  sys.purify_row(c_rule, -1, sys.model->states);
  return c_rule;
}

Trajectory forward_simulate(const PairSystem& sys,
                            const PairSystem::Reduced& red,
                            const AnticipatedSequence& seq, int horizon,
                            const Vector& x_init,
                            const Eigen::RowVectorXd& c_rule,
                            const Vector& c_path, double e_terminal_intercept,
                            const SolverOptions& opts,
                            const StabilityReport& stability) {
  const StateSpaceModel& m = *sys.model;
  if (horizon < 1) throw DimensionMismatch("horizon must be >= 1");
  if (x_init.size() != m.nx) throw DimensionMismatch("x_init size");

  Trajectory traj;
  traj.horizon = horizon;
  traj.x_init = x_init;
  traj.v.resize(m.nv, horizon);
  traj.x.resize(m.nx, horizon);
  traj.u.resize(m.nu, horizon);
  traj.d.resize(m.nd, horizon);
  traj.has_jump = sys.has_jump;
  traj.stability = stability;

  Vector x_prev_pair = m.states.to_pair(x_init);
  Vector x_prev_prev = x_prev_pair;
  for (int t = 0; t < horizon; ++t) {
    const Vector u_t = seq.u_at(t, m.nu);
    const Vector d_t = seq.d_at(t, m.nd);
    const Vector u_p = m.inst.to_pair(u_t);
    const Vector d_p = m.shocks.to_pair(d_t);
    Vector v_p = red.Phi_x * x_prev_pair + red.Phi_u * u_p + red.Phi_d * d_p;
    if (sys.has_jump) v_p += red.phi_c * c_path(t + 1);
    Vector x_p = red.A * x_prev_pair + red.B * u_p + red.E * d_p;
    if (sys.has_jump) x_p += red.b * c_path(t + 1);

    traj.v.col(t) = m.vars.to_country(v_p);
    traj.x.col(t) = m.states.to_country(x_p);
    traj.u.col(t) = u_t;
    traj.d.col(t) = d_t;

    x_prev_prev = x_prev_pair;
    x_prev_pair = x_p;
  }
  if (sys.has_jump) {
    traj.e_terminal =
        c_rule.size() > 0
            ? c_rule.dot(x_prev_pair) + e_terminal_intercept
            : e_terminal_intercept;
  }
  traj.terminal_drift =
      horizon >= 2 ? (x_prev_pair - x_prev_prev).lpNorm<Eigen::Infinity>()
                   : x_prev_pair.lpNorm<Eigen::Infinity>();
  traj.terminal_converged = traj.terminal_drift <= opts.terminal_tol;
  if (opts.strict_terminal && !traj.terminal_converged)
    throw HorizonTooShort("terminal drift " + std::to_string(traj.terminal_drift) +
                          " exceeds tolerance; lengthen the horizon");
  return traj;
}

}  // namespace

StabilityReport eigen_classify(const StateSpaceModel& model,
                               const Matrix* feedback, double unit_circle_tol) {
  const PairSystem sys(model);
  Matrix fb_pair;
  const Matrix* fb = nullptr;
  if (feedback) {
    if (feedback->rows() != model.nu || feedback->cols() != model.nx)
      throw DimensionMismatch("feedback rule must be nu x nx");
    fb_pair = model.inst.mat_to_pair(*feedback, model.states);
    fb = &fb_pair;
  }
  const Matrix bk = sys.bk_matrix_with_feedback(fb);
  return classify_matrix(bk, model.n_jump, unit_circle_tol);
}

Trajectory solve_saddle_path(const StateSpaceModel& model,
                             const AnticipatedSequence& seq, int horizon,
                             const Vector& x_init, const SolverOptions& opts) {
  const PairSystem sys(model);
  const Matrix bk = sys.bk_matrix();
  const StabilityReport stability =
      classify_matrix(bk, model.n_jump, opts.unit_circle_tol);

  if (!sys.has_jump) {
    // No forward-looking variables: the unique path is the forward recursion,
    // produced for any stability class so divergent dynamics stay
    // inspectable.
    const PairSystem::Reduced red = sys.reduce();
    return forward_simulate(sys, red, seq, horizon, x_init,
                            Eigen::RowVectorXd(), Vector::Zero(horizon + 1),
                            0.0, opts, stability);
  }

  if (stability.classification != StabilityClass::Determinate)
    throw NotDeterminate(std::string("saddle path needs a determinate system, got ") +
                         to_string(stability.classification));

  const Eigen::RowVectorXd c_rule =
      stationary_jump_rule(sys, bk, opts.unit_circle_tol);
  const PairSystem::Reduced red = sys.reduce(c_rule);

  // Intercept recursion c_t = eu u_t + ed d_t + ec c_{t+1}, anchored at the
  // settled-input fixed point.
  const Vector u_inf = model.inst.to_pair(seq.u_at(horizon, model.nu));
  const Vector d_inf = model.shocks.to_pair(seq.d_at(horizon, model.nd));
  const double drive_inf = red.eu.dot(u_inf) + red.ed.dot(d_inf);
  double c_inf = 0.0;
  bool anchored = true;
  if (std::abs(1.0 - red.ec) > 1e-12) {
    c_inf = drive_inf / (1.0 - red.ec);
  } else {
    anchored = false;  // unit root in the jump recursion; flagged below
  }
  Vector c_path = Vector::Zero(horizon + 1);
  c_path(horizon) = c_inf;
  for (int t = horizon - 1; t >= 0; --t) {
    const Vector u_p = model.inst.to_pair(seq.u_at(t, model.nu));
    const Vector d_p = model.shocks.to_pair(seq.d_at(t, model.nd));
    c_path(t) = red.eu.dot(u_p) + red.ed.dot(d_p) + red.ec * c_path(t + 1);
  }

  Trajectory traj = forward_simulate(sys, red, seq, horizon, x_init, c_rule,
                                     c_path, c_inf, opts, stability);
  if (!anchored) {
    traj.terminal_converged = false;
    if (opts.strict_terminal)
      throw HorizonTooShort("jump intercept has no settled anchor");
  }
  return traj;
}

Trajectory solve_saddle_path(const StateSpaceModel& model,
                             const AnticipatedSequence& seq, int horizon,
                             const SolverOptions& opts) {
  return solve_saddle_path(model, seq, horizon, Vector::Zero(model.nx), opts);
}

Trajectory simulate_backward(const StateSpaceModel& model,
                             const AnticipatedSequence& seq, int horizon,
                             const Vector& x_init, const SolverOptions& opts) {
  if (model.n_jump != 0)
    throw NotDeterminate("simulate_backward requires a model with no jump variables");
  return solve_saddle_path(model, seq, horizon, x_init, opts);
}

Trajectory simulate_backward(const StateSpaceModel& model,
                             const AnticipatedSequence& seq, int horizon,
                             const SolverOptions& opts) {
  return simulate_backward(model, seq, horizon, Vector::Zero(model.nx), opts);
}

double residual_check(const StateSpaceModel& model, const Trajectory& traj) {
  if (traj.v.rows() != model.nv || traj.x.rows() != model.nx ||
      traj.u.rows() != model.nu || traj.d.rows() != model.nd ||
      traj.v.cols() != traj.horizon || traj.x.cols() != traj.horizon)
    throw DimensionMismatch("trajectory blocks do not match the model");
  if (traj.x_init.size() != model.nx)
    throw DimensionMismatch("trajectory x_init does not match the model");

  double worst = 0.0;
  for (int t = 0; t < traj.horizon; ++t) {
    const Vector x_lag = t == 0 ? traj.x_init : Vector(traj.x.col(t - 1));
    Vector res = model.G * traj.v.col(t) - model.H * x_lag -
                 model.J * traj.u.col(t) - model.K * traj.d.col(t);
    if (model.n_jump > 0) {
      const double e_next =
          t + 1 < traj.horizon ? traj.v(model.v_e(), t + 1) : traj.e_terminal;
      res -= model.L.col(0) * e_next;
    }
    worst = std::max(worst, res.lpNorm<Eigen::Infinity>());
    const Vector xres = traj.x.col(t) - model.Sx_v * traj.v.col(t) -
                        model.Sx_u * traj.u.col(t);
    worst = std::max(worst, xres.lpNorm<Eigen::Infinity>());
  }
  return worst;
}

}  // namespace macrogame

#include "macrogame/state_space.hpp"

namespace macrogame {

WorldState steady_state(const Calibration& home, const Calibration& foreign,
                        const RegimeSpec& regime, const SteadyTargets& targets) {
  home.validate();
  foreign.validate();
  if (!(home.a > 0.0 && foreign.a > 0.0))
    throw NoSteadyState("steady_state: wealth demand not invertible (a <= 0)");

  // Unknowns: [r_h, r_f, f_h, f_f], all deviations from the reference path.
  Matrix A = Matrix::Zero(4, 4);
  Vector rhs = Vector::Zero(4);

  // Wealth balance per country: a r = b_target + f.
  A(0, 0) = home.a;    A(0, 2) = -1.0; rhs(0) = targets.b_target_home;
  A(1, 1) = foreign.a; A(1, 3) = -1.0; rhs(1) = targets.b_target_foreign;
  // Two-country closure: net-foreign-asset deviations offset.
  A(2, 2) = 1.0; A(2, 3) = 1.0;
  // Long-run rate link (settled exchange rate, equal long-run inflation).
  const double phi_bar = 0.5 * (home.phi_risk + foreign.phi_risk);
  switch (regime.kind) {
    case RegimeKind::Flexible:
      A(3, 0) = 1.0; A(3, 1) = -1.0;
      A(3, 2) = -0.5 * phi_bar; A(3, 3) = 0.5 * phi_bar;
      break;
    case RegimeKind::EMU:
      A(3, 0) = 1.0; A(3, 1) = -1.0;
      break;
    case RegimeKind::SingleMarket: {
      const int sub = regime.dominated() == CountryId::Home ? 0 : 1;
      const int dom = 1 - sub;
      A(3, sub) = 1.0; A(3, dom) = -1.0;
      A(3, 2 + sub) = 0.5 * phi_bar; A(3, 2 + dom) = -0.5 * phi_bar;
      break;
    }
  }

  Eigen::FullPivLU<Matrix> lu(A);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible())
    throw NoSteadyState("steady_state: long-run closure is singular");
  const Vector sol = lu.solve(rhs);

  WorldState ws;
  ws.home.r_real = sol(0);
  ws.foreign.r_real = sol(1);
  ws.home.f = sol(2);
  ws.foreign.f = sol(3);
  ws.home.b = targets.b_target_home;
  ws.foreign.b = targets.b_target_foreign;
  ws.home.w = ws.home.b + ws.home.f;
  ws.foreign.w = ws.foreign.b + ws.foreign.f;
  // Zero output gaps and reference-path inflation; the nominal rate then
  // coincides with the real rate in deviations.
  ws.home.i_nom = ws.home.r_real;
  ws.foreign.i_nom = ws.foreign.r_real;
  return ws;
}

}  // namespace macrogame

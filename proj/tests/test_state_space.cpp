#include <doctest.h>

#include <macrogame/solver.hpp>
#include <macrogame/state_space.hpp>

using namespace macrogame;

namespace {

Calibration base() { return Calibration{}; }

BehaviorSpec behavior(Expectations e = Expectations::Rational,
                      ConsumerBehavior c = ConsumerBehavior::Keynesian) {
  BehaviorSpec b;
  b.expectations = e;
  b.consumer = c;
  return b;
}

RegimeSpec flexible() { return RegimeSpec{}; }
RegimeSpec emu() { return RegimeSpec{RegimeKind::EMU, CountryId::Foreign}; }
RegimeSpec single_market(CountryId dominant = CountryId::Foreign) {
  return RegimeSpec{RegimeKind::SingleMarket, dominant};
}

// Residual of one structural row given candidate within-period values.
double row_residual(const StateSpaceModel& m, int row, const Vector& v,
                    const Vector& x, const Vector& u, const Vector& d,
                    double e_next = 0.0) {
  double r = m.G.row(row).dot(v) - m.H.row(row).dot(x) - m.J.row(row).dot(u) -
             m.K.row(row).dot(d);
  if (m.n_jump > 0) r -= m.L(row, 0) * e_next;
  return r;
}

}  // namespace

TEST_CASE("jump-variable census by regime and expectations") {
  const Calibration cal = base();
  CHECK(assemble_linear_system(cal, flexible(), behavior()).n_jump == 1);
  CHECK(assemble_linear_system(cal, emu(), behavior()).n_jump == 0);
  CHECK(assemble_linear_system(cal, single_market(), behavior()).n_jump == 0);
  CHECK(assemble_linear_system(cal, flexible(), behavior(Expectations::Backward))
            .n_jump == 0);
}

TEST_CASE("EMU carries exactly one nominal-rate instrument") {
  const StateSpaceModel m = assemble_linear_system(base(), emu(), behavior());
  int rates = 0;
  for (const auto& inst : m.instruments) rates += inst.is_rate ? 1 : 0;
  CHECK(rates == 1);
  CHECK(m.instruments[2].owner == PlayerId::CBUnion);
  // Flexible has one per central bank.
  const StateSpaceModel mf = assemble_linear_system(base(), flexible(), behavior());
  rates = 0;
  for (const auto& inst : mf.instruments) rates += inst.is_rate ? 1 : 0;
  CHECK(rates == 2);
}

TEST_CASE("demand row reproduces the aggregate-demand operation") {
  const Calibration cal = base();
  const StateSpaceModel m = assemble_linear_system(cal, flexible(), behavior());

  // Deviations for the inputs of the demand equation.
  const double r_dev = 0.013, z_dev = -0.008, yj_dev = 0.004, g_dev = 0.006,
               w_dev = -0.02, tau_dev = 0.003;

  // Operation value, evaluated at levels with stocks on their baselines so
  // the bilinear income terms coincide with the linearization.
  WorldState world;
  WorldState lags;
  world.home.r_real = r_dev;
  world.home.g = g_dev;
  world.home.tau = tau_dev;
  world.foreign.y = yj_dev;
  world.z = z_dev;
  lags.home.b = cal.b_bar;
  lags.home.f = cal.f_bar;
  lags.home.w = desired_wealth(0.0, cal) + w_dev;
  const double y_op =
      aggregate_demand(world, lags, cal, behavior(), CountryId::Home);

  // Demand row: plug the operation's output alongside the income the
  // operation saw internally (state y was zero there).
  Vector v = Vector::Zero(m.nv);
  Vector x = Vector::Zero(m.nx);
  Vector u = Vector::Zero(m.nu);
  Vector d = Vector::Zero(m.nd);
  const double q_seen = cal.b_bar * r_dev - tau_dev;  // partner rate zero
  v(m.v_of(Cv::y, CountryId::Home)) = y_op;
  v(m.v_of(Cv::q, CountryId::Home)) = q_seen;
  v(m.v_of(Cv::r, CountryId::Home)) = r_dev;
  v(m.v_of(Cv::tau, CountryId::Home)) = tau_dev;
  v(m.v_of(Cv::y, CountryId::Foreign)) = yj_dev;
  v(m.v_z()) = z_dev;
  x(m.x_of(Cx::w, CountryId::Home)) = w_dev;
  u(0) = g_dev;

  // The demand row reads q as an input, so correct for the feedback of y_op
  // into the row's own q slot not being part of the operation's evaluation.
  CHECK(row_residual(m, m.v_of(Cv::y, CountryId::Home), v, x, u, d) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Income row checked at a consistent point of its own.
  Vector v2 = Vector::Zero(m.nv);
  const double y2 = 0.009;
  v2(m.v_of(Cv::y, CountryId::Home)) = y2;
  v2(m.v_of(Cv::r, CountryId::Home)) = r_dev;
  v2(m.v_of(Cv::tau, CountryId::Home)) = tau_dev;
  CountryState s2;
  s2.y = y2;
  s2.r_real = r_dev;
  s2.tau = tau_dev;
  v2(m.v_of(Cv::q, CountryId::Home)) =
      disposable_income(s2, cal.b_bar, cal.f_bar, 0.0, cal, behavior());
  CHECK(row_residual(m, m.v_of(Cv::q, CountryId::Home), v2,
                     Vector::Zero(m.nx), Vector::Zero(m.nu),
                     Vector::Zero(m.nd)) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("price and tax rows reproduce their operations") {
  const Calibration cal = base();
  const StateSpaceModel m = assemble_linear_system(cal, flexible(), behavior());
  Vector v = Vector::Zero(m.nv);
  Vector x = Vector::Zero(m.nx);
  const Vector u = Vector::Zero(m.nu);
  Vector d = Vector::Zero(m.nd);

  const double pilag = 0.004, y = 0.011;
  v(m.v_of(Cv::pi, CountryId::Home)) =
      price_update(pilag, 0.0, y, cal, behavior());
  v(m.v_of(Cv::y, CountryId::Home)) = y;
  x(m.x_of(Cx::pilag, CountryId::Home)) = pilag;
  CHECK(row_residual(m, m.v_of(Cv::pi, CountryId::Home), v, x, u, d) ==
        doctest::Approx(0.0).epsilon(1e-13));

  const double b_lag = 0.02, b_target = -0.03;
  v(m.v_of(Cv::tau, CountryId::Home)) =
      tax_rule(cal.b_bar + b_lag, cal.b_bar + b_target, cal);
  x(m.x_of(Cx::b, CountryId::Home)) = b_lag;
  d(m.d_of(Cd::b_target, CountryId::Home)) = b_target;
  CHECK(row_residual(m, m.v_of(Cv::tau, CountryId::Home), v, x, u, d) ==
        doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("accumulation rows reproduce the stock-flow operation") {
  const Calibration cal = base();
  const StateSpaceModel m = assemble_linear_system(cal, flexible(), behavior());

  WorldState world;
  world.home.y = 0.01;
  world.foreign.y = -0.004;
  world.z = 0.006;
  world.home.g = 0.005;
  world.home.tau = 0.002;
  world.home.r_real = 0.012;
  world.foreign.r_real = -0.003;
  StockFlows flows;  // baseline rates are zero; deviations enter via b_bar/f_bar
  const WorldState next = accumulate_stocks(world, flows, cal);

  Vector v = Vector::Zero(m.nv);
  Vector x = Vector::Zero(m.nx);
  Vector u = Vector::Zero(m.nu);
  const Vector d = Vector::Zero(m.nd);
  for (CountryId k : {CountryId::Home, CountryId::Foreign}) {
    v(m.v_of(Cv::y, k)) = world.country(k).y;
    v(m.v_of(Cv::r, k)) = world.country(k).r_real;
    v(m.v_of(Cv::tau, k)) = world.country(k).tau;
  }
  v(m.v_z()) = world.z;
  u(0) = world.home.g;
  // The linearized debt row adds b_bar * r on top of the zero-baseline flows.
  v(m.v_of(Cv::b, CountryId::Home)) = next.home.b + cal.b_bar * world.home.r_real;
  v(m.v_of(Cv::b, CountryId::Foreign)) =
      next.foreign.b + cal.b_bar * world.foreign.r_real;
  // NFA earns the partner rate in deviations.
  v(m.v_of(Cv::tb, CountryId::Home)) =
      cal.nu * world.z - cal.m * world.home.y + cal.m * world.foreign.y;
  v(m.v_of(Cv::tb, CountryId::Foreign)) = -v(m.v_of(Cv::tb, CountryId::Home));
  v(m.v_of(Cv::f, CountryId::Home)) =
      next.home.f + cal.f_bar * world.foreign.r_real;
  v(m.v_of(Cv::f, CountryId::Foreign)) =
      next.foreign.f + cal.f_bar * world.home.r_real;
  v(m.v_of(Cv::w, CountryId::Home)) = v(m.v_of(Cv::b, CountryId::Home)) +
                                      v(m.v_of(Cv::f, CountryId::Home));
  v(m.v_of(Cv::w, CountryId::Foreign)) = v(m.v_of(Cv::b, CountryId::Foreign)) +
                                         v(m.v_of(Cv::f, CountryId::Foreign));

  for (Cv row : {Cv::tb, Cv::b, Cv::f, Cv::w}) {
    for (CountryId k : {CountryId::Home, CountryId::Foreign}) {
      CAPTURE(static_cast<int>(row));
      CHECK(row_residual(m, m.v_of(row, k), v, x, u, d) ==
            doctest::Approx(0.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("parity row matches the parity operation on current-account paths") {
  const Calibration cal = base();
  const StateSpaceModel m = assemble_linear_system(cal, flexible(), behavior());

  const double ih = 0.004, iff = -0.002, e_now = 0.01, e_next = 0.013,
               fdev = 0.05;
  WorldState world;
  world.home.i_nom = ih;
  world.foreign.i_nom = iff;
  world.home.f = cal.f_bar + fdev;
  world.foreign.f = cal.f_bar - fdev;  // pure current-account redistribution
  const double op_residual =
      parity_condition(world, flexible(), e_next - e_now, cal);

  Vector v = Vector::Zero(m.nv);
  const Vector x = Vector::Zero(m.nx);
  Vector u = Vector::Zero(m.nu);
  const Vector d = Vector::Zero(m.nd);
  v(m.v_of(Cv::i, CountryId::Home)) = ih;
  v(m.v_of(Cv::i, CountryId::Foreign)) = iff;
  v(m.v_of(Cv::f, CountryId::Home)) = fdev;
  v(m.v_of(Cv::f, CountryId::Foreign)) = -fdev;
  v(m.v_e()) = e_now;
  u(2) = ih;
  u(3) = iff;
  const double row = row_residual(m, m.v_e(), v, x, u, d, e_next);
  CHECK(row == doctest::Approx(op_residual).epsilon(1e-13));
}

TEST_CASE("steady state reproduces the baseline at unchanged targets") {
  const WorldState ss = steady_state(base(), flexible(), SteadyTargets{});
  CHECK(ss.home.r_real == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(ss.home.f == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(ss.foreign.w == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("EMU debt cut lowers the union long-run real rate") {
  SteadyTargets t;
  t.b_target_home = -0.03;
  const WorldState ss = steady_state(base(), emu(), t);
  CHECK(ss.home.r_real == doctest::Approx(ss.foreign.r_real).epsilon(1e-12));
  CHECK(ss.home.r_real < 0.0);
  // Union closure: r = sum of target deviations / (2a).
  CHECK(ss.home.r_real == doctest::Approx(-0.03 / (2 * base().a)).epsilon(1e-10));
  // The cutting country absorbs the wealth shift through foreign assets.
  CHECK(ss.home.f > 0.0);
  CHECK(ss.home.f + ss.foreign.f == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("a larger wealth slope damps the long-run rate response") {
  // Direct linear-solve oracle over a grid of wealth slopes.
  double prev = -1e9;
  for (double a : {3.0, 5.0, 8.0, 12.0}) {
    Calibration cal = base();
    cal.a = a;
    cal.f_bar = cal.w0 - cal.b_bar;  // keep the baseline rate at zero
    SteadyTargets t;
    t.b_target_home = -0.03;
    const WorldState ss = steady_state(cal, emu(), t);
    const double oracle = -0.03 / (2.0 * a);
    CHECK(ss.home.r_real == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(std::abs(ss.home.r_real) < std::abs(prev) + 1e-15);
    prev = ss.home.r_real;
  }
}

TEST_CASE("single-market steady state shifts the burden to the dominated rate") {
  SteadyTargets t;
  t.b_target_home = -0.03;  // dominated country cuts
  const WorldState ss = steady_state(base(), single_market(CountryId::Foreign), t);
  CHECK(ss.home.r_real < ss.foreign.r_real);  // dominated rate falls relative
  CHECK(ss.home.f > 0.0);
}

TEST_CASE("singular long-run closure raises NoSteadyState") {
  Calibration cal = base();
  // Flexible link: a*(r_h - r_f) = dtargets + 2 f_h with r_h - r_f = phi f_h;
  // a*phi = 2 makes the closure singular.
  cal.a = 20.0;
  cal.phi_risk = 0.1;
  cal.f_bar = cal.w0 - cal.b_bar;
  SteadyTargets t;
  t.b_target_home = -0.01;
  CHECK_THROWS_AS(steady_state(cal, flexible(), t), NoSteadyState);
}

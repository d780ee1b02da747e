#include "macrogame/equations.hpp"

#include <cmath>

namespace macrogame {

double desired_wealth(double r_real, const Calibration& calib) {
  return calib.w0 + calib.a * r_real;
}

double disposable_income(const CountryState& state, double b_lag, double f_lag,
                         double r_star, const Calibration& calib,
                         const BehaviorSpec& behavior) {
  (void)calib;
  if (behavior.consumer == ConsumerBehavior::Keynesian) {
    return state.y + state.r_real * b_lag - state.tau + r_star * f_lag;
  }
  // Ricardian: debt interest and taxes net out against anticipated taxes.
  return state.y - state.g + r_star * f_lag;
}

double aggregate_demand(const WorldState& world, const WorldState& lags,
                        const Calibration& calib, const BehaviorSpec& behavior,
                        CountryId country) {
  const CountryState& own = world.country(country);
  const CountryState& own_lag = lags.country(country);
  const CountryState& partner = world.country(other(country));
  const double z_signed = country == CountryId::Home ? world.z : -world.z;
  const double q = disposable_income(own, own_lag.b, own_lag.f,
                                     partner.r_real, calib, behavior);
  // Spending falls when desired wealth exceeds held wealth: households save
  // to close the gap, so a higher real rate is recessionary through both the
  // direct channel and the desired-wealth channel.
  const double wealth_gap = own_lag.w - desired_wealth(own.r_real, calib);
  return calib.c * q + own.g - calib.sigma * own.r_real +
         calib.kappa * wealth_gap + calib.nu * z_signed + calib.m * partner.y;
}

double price_update(double pi_lag, double pi_expected_anchor, double y,
                    const Calibration& calib, const BehaviorSpec& behavior) {
  const double theta = behavior.effective_theta();
  return theta * pi_lag + (1.0 - theta) * pi_expected_anchor +
         calib.lambda_p * y;
}

double parity_condition(const WorldState& world, const RegimeSpec& regime,
                        double expected_depreciation, const Calibration& calib) {
  switch (regime.kind) {
    case RegimeKind::Flexible:
      return world.home.i_nom - world.foreign.i_nom - expected_depreciation -
             calib.phi_risk * (world.home.f - calib.f_bar);
    case RegimeKind::EMU:
      // No currency risk inside the union; the asset split is indeterminate.
      return world.home.i_nom - world.foreign.i_nom;
    case RegimeKind::SingleMarket: {
      const CountryState& dominated = world.country(regime.dominated());
      const CountryState& dominant = world.country(regime.dominant);
      return dominated.i_nom - dominant.i_nom +
             calib.phi_risk * (dominated.f - calib.f_bar);
    }
  }
  return 0.0;
}

WorldState accumulate_stocks(const WorldState& world, const StockFlows& flows,
                             const Calibration& calib) {
  for (double v :
       {world.home.b, world.home.f, world.home.g, world.home.tau,
        world.home.y, world.foreign.b, world.foreign.f, world.foreign.g,
        world.foreign.tau, world.foreign.y, world.z, flows.r_home,
        flows.r_foreign, flows.r_star_home, flows.r_star_foreign}) {
    if (!std::isfinite(v)) throw ValidationError("accumulate_stocks: non-finite input");
  }
  const double tb_home =
      calib.nu * world.z - calib.m * world.home.y + calib.m * world.foreign.y;
  const double tb_foreign = -tb_home;

  WorldState next = world;
  next.home.b = world.home.b + flows.r_home * world.home.b + world.home.g -
                world.home.tau;
  next.foreign.b = world.foreign.b + flows.r_foreign * world.foreign.b +
                   world.foreign.g - world.foreign.tau;
  next.home.f = world.home.f + flows.r_star_home * world.home.f + tb_home;
  next.foreign.f =
      world.foreign.f + flows.r_star_foreign * world.foreign.f + tb_foreign;
  next.home.w = next.home.b + next.home.f;
  next.foreign.w = next.foreign.b + next.foreign.f;
  return next;
}

double tax_rule(double b, double b_target, const Calibration& calib) {
  return calib.beta_tax * (b - b_target);
}

}  // namespace macrogame

#pragma once

#include "macrogame/model_types.hpp"

namespace macrogame {

// Behavioral equations of the two-country model. Every function here is a
// pure, total map from its inputs; the linear system assembled in
// state_space.hpp is the first-order expansion of these around the reference
// path.

// Desired private wealth, an affine, strictly increasing function of the real
// interest rate: w0 + a * r.
double desired_wealth(double r_real, const Calibration& calib);

// Disposable income under the selected consumer behavior.
// Keynesian (Hicks): q = y + r*b_lag - tau + r_star*f_lag; government debt
// interest is private income. Ricardian (Barro): q = y - g + r_star*f_lag;
// debt interest and taxes net out against anticipated future taxes.
// `r_star` is the rate earned on net foreign assets.
double disposable_income(const CountryState& state, double b_lag, double f_lag,
                         double r_star, const Calibration& calib,
                         const BehaviorSpec& behavior);

// Aggregate demand:
//   y_d = c*q + g - sigma*r + kappa*(w_lag - desired_wealth(r)) + nu*z_signed
//         + m*y_partner
// where z_signed is +z for Home and -z for Foreign. Spending falls when
// desired wealth exceeds held wealth (households save to close the gap);
// without this wealth effect a country could accumulate foreign assets
// without bound.
double aggregate_demand(const WorldState& world, const WorldState& lags,
                        const Calibration& calib, const BehaviorSpec& behavior,
                        CountryId country);

// Inflation under partial indexation:
//   pi = theta*pi_lag + (1-theta)*pi_expected_anchor + lambda_p*y
// Full indexation (theta = 1) is accelerationist: lagged inflation carries
// forward one for one.
double price_update(double pi_lag, double pi_expected_anchor, double y,
                    const Calibration& calib, const BehaviorSpec& behavior);

// Parity residual for the given regime; zero in equilibrium.
// Flexible: i_h - i_f - expected_depreciation - phi_risk*(f_h - f_bar).
// EMU: i_h - i_f with the exchange rate frozen and no risk premium.
// SingleMarket: couples the dominated rate to the dominant rate plus the
// premium in the dominated country's net foreign assets.
double parity_condition(const WorldState& world, const RegimeSpec& regime,
                        double expected_depreciation, const Calibration& calib);

// One period of stock accumulation. Debt accumulates at the real rate,
// net foreign assets earn r_star and absorb the trade balance, and private
// wealth is the identity w = b + f (enforced, not independently accumulated).
// Trade balances are exactly opposite across the two countries.
struct StockFlows {
  double r_home = 0.0;        // real rate on home public debt
  double r_foreign = 0.0;     // real rate on foreign public debt
  double r_star_home = 0.0;   // rate earned on home net foreign assets
  double r_star_foreign = 0.0;
};
WorldState accumulate_stocks(const WorldState& world, const StockFlows& flows,
                             const Calibration& calib);

// Tax feedback rule: tau = beta_tax * (b - b_target).
double tax_rule(double b, double b_target, const Calibration& calib);

}  // namespace macrogame

#pragma once

#include <optional>
#include <string>

#include "macrogame/common.hpp"

namespace macrogame {

// The two-country world. Home is, by convention, the country receiving the
// shock; under the SingleMarket regime one country is marked dominant.
enum class CountryId { Home, Foreign };

inline CountryId other(CountryId c) {
  return c == CountryId::Home ? CountryId::Foreign : CountryId::Home;
}

inline const char* to_string(CountryId c) {
  return c == CountryId::Home ? "home" : "foreign";
}

// Structural coefficients and baseline stocks for one country. All stocks are
// shares of reference GDP; rates are per period.
struct Calibration {
  double c = 0.6;            // marginal propensity to spend out of income
  double sigma = 1.0;        // demand semi-elasticity to the real rate
  double a = 5.0;            // slope of desired wealth in the real rate
  double w0 = 1.5;           // autonomous desired wealth
  double kappa = 0.2;        // spending adjustment speed to the wealth gap
  double alpha_open = 0.25;  // openness share (carried; the demand
                             // reconstruction works through nu and m)
  double nu = 0.5;           // trade-balance elasticity to the real exchange rate
  double m = 0.25;           // marginal import propensity
  double lambda_p = 0.3;     // Phillips slope of inflation in the output gap
  double theta_idx = 1.0;    // wage/price indexation degree in [0,1]
  double phi_risk = 0.1;     // portfolio risk-premium slope in net foreign assets
  double beta_tax = 0.1;     // tax feedback on the debt gap
  double b_bar = 0.30;       // baseline public debt
  double f_bar = 1.20;       // baseline net foreign assets
  double discount = 0.96;    // per-period loss discount factor

  // Baseline real rate implied by long-run wealth balance w0 + a*r = b + f.
  double baseline_real_rate() const { return (b_bar + f_bar - w0) / a; }

  // Throws ValidationError naming the offending field.
  void validate() const;
};

enum class ConsumerBehavior { Keynesian, Ricardian };
enum class Expectations { Rational, Backward };
enum class Indexation { Full, Partial };

// Behavioral toggles; all three independently selectable.
struct BehaviorSpec {
  ConsumerBehavior consumer = ConsumerBehavior::Keynesian;
  Expectations expectations = Expectations::Rational;
  Indexation indexation = Indexation::Full;
  // Used when indexation == Partial; ignored (forced to 1) under Full.
  double partial_theta = 1.0;

  double effective_theta() const {
    return indexation == Indexation::Full ? 1.0 : partial_theta;
  }
  void validate() const;
};

enum class RegimeKind { Flexible, EMU, SingleMarket };

// Exchange-rate regime. EMU forces a single nominal rate and a permanently
// fixed nominal exchange rate with zero currency risk premium. SingleMarket
// fixes the nominal exchange rate and gives the rate instrument to the
// dominant country only; the dominated country's rate is endogenous.
struct RegimeSpec {
  RegimeKind kind = RegimeKind::Flexible;
  CountryId dominant = CountryId::Foreign;  // SingleMarket only

  CountryId dominated() const { return other(dominant); }
  bool fixed_exchange_rate() const { return kind != RegimeKind::Flexible; }
};

inline const char* to_string(RegimeKind k) {
  switch (k) {
    case RegimeKind::Flexible:     return "flexible";
    case RegimeKind::EMU:          return "emu";
    case RegimeKind::SingleMarket: return "single_market";
  }
  return "?";
}

}  // namespace macrogame

#pragma once

#include "macrogame/calibration.hpp"

namespace macrogame {

// One country's endogenous variables at a date. Depending on context these
// hold levels (behavioral-equation inputs) or deviations from the reference
// path (trajectories); the accounting identity w = b + f holds either way.
struct CountryState {
  double y = 0.0;       // output gap (share of reference GDP)
  double p = 0.0;       // log price level
  double pi = 0.0;      // inflation rate
  double b = 0.0;       // public debt (share of GDP)
  double f = 0.0;       // net foreign assets (share of GDP)
  double w = 0.0;       // private wealth (share of GDP)
  double g = 0.0;       // public spending deviation
  double tau = 0.0;     // tax deviation
  double i_nom = 0.0;   // nominal interest rate
  double r_real = 0.0;  // real interest rate
};

struct WorldState {
  CountryState home;
  CountryState foreign;
  double e = 0.0;  // log nominal exchange rate (Home currency per Foreign)
  double z = 0.0;  // log real exchange rate, z = e + p_foreign - p_home

  const CountryState& country(CountryId id) const {
    return id == CountryId::Home ? home : foreign;
  }
  CountryState& country(CountryId id) {
    return id == CountryId::Home ? home : foreign;
  }
};

}  // namespace macrogame

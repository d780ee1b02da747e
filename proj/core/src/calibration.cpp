#include "macrogame/calibration.hpp"

#include <cmath>
#include <sstream>

namespace macrogame {

namespace {

void fail(const std::string& field, double value, const std::string& bound) {
  std::ostringstream os;
  os << "calibration: " << field << " = " << value << " violates " << bound;
  throw ValidationError(os.str());
}

}  // namespace

void Calibration::validate() const {
  for (double v : {c, sigma, a, w0, kappa, alpha_open, nu, m, lambda_p,
                   theta_idx, phi_risk, beta_tax, b_bar, f_bar, discount}) {
    if (!std::isfinite(v)) throw ValidationError("calibration: non-finite value");
  }
  if (!(c > 0.0 && c < 1.0)) fail("c", c, "0 < c < 1");
  if (!(sigma > 0.0)) fail("sigma", sigma, "sigma > 0");
  if (!(a > 0.0)) fail("a", a, "a > 0");
  if (!(kappa > 0.0)) fail("kappa", kappa, "kappa > 0");
  if (!(lambda_p > 0.0)) fail("lambda_p", lambda_p, "lambda_p > 0");
  if (!(theta_idx >= 0.0 && theta_idx <= 1.0))
    fail("theta_idx", theta_idx, "0 <= theta_idx <= 1");
  if (!(phi_risk >= 0.0)) fail("phi_risk", phi_risk, "phi_risk >= 0");
  if (!(discount > 0.0 && discount < 1.0))
    fail("discount", discount, "0 < discount < 1");
  if (!(alpha_open >= 0.0 && alpha_open < 1.0))
    fail("alpha_open", alpha_open, "0 <= alpha_open < 1");
  if (!(nu > 0.0)) fail("nu", nu, "nu > 0");
  if (!(m >= 0.0 && m < 1.0)) fail("m", m, "0 <= m < 1");
  // Debt-rule solvency: the feedback must outrun baseline debt service.
  if (!(beta_tax > baseline_real_rate()))
    fail("beta_tax", beta_tax, "beta_tax > baseline real rate");
}

void BehaviorSpec::validate() const {
  if (indexation == Indexation::Partial &&
      !(partial_theta >= 0.0 && partial_theta <= 1.0)) {
    throw ValidationError("behavior: partial_theta must lie in [0, 1]");
  }
}

}  // namespace macrogame

#include "macrogame/state_space.hpp"

namespace macrogame {

const char* to_string(PlayerId id) {
  switch (id) {
    case PlayerId::GovHome:   return "gov_home";
    case PlayerId::GovForeign:return "gov_foreign";
    case PlayerId::CBHome:    return "cb_home";
    case PlayerId::CBForeign: return "cb_foreign";
    case PlayerId::CBUnion:   return "cb_union";
  }
  return "?";
}

namespace {

constexpr CountryId kBoth[2] = {CountryId::Home, CountryId::Foreign};

double sgn(CountryId c) { return c == CountryId::Home ? 1.0 : -1.0; }

}  // namespace

StateSpaceModel assemble_linear_system(const Calibration& home,
                                       const Calibration& foreign,
                                       const RegimeSpec& regime,
                                       const BehaviorSpec& behavior) {
  home.validate();
  foreign.validate();
  behavior.validate();

  StateSpaceModel m;
  m.calib_home = home;
  m.calib_foreign = foreign;
  m.regime = regime;
  m.behavior = behavior;

  const bool rational = behavior.expectations == Expectations::Rational;
  const bool flexible = regime.kind == RegimeKind::Flexible;
  const bool emu = regime.kind == RegimeKind::EMU;
  m.n_jump = (flexible && rational) ? 1 : 0;
  const bool has_elag = flexible && !rational;

  // --- instruments -----------------------------------------------------------
  m.instruments.push_back({"g_home", PlayerId::GovHome, false});
  m.instruments.push_back({"g_foreign", PlayerId::GovForeign, false});
  PairLayoutBuilder ub;
  ub.add_pair();  // g pair
  switch (regime.kind) {
    case RegimeKind::Flexible:
      m.instruments.push_back({"i_home", PlayerId::CBHome, true});
      m.instruments.push_back({"i_foreign", PlayerId::CBForeign, true});
      ub.add_pair();
      break;
    case RegimeKind::EMU:
      m.instruments.push_back({"i_union", PlayerId::CBUnion, true});
      ub.add_singleton(+1);
      break;
    case RegimeKind::SingleMarket:
      m.instruments.push_back(
          {regime.dominant == CountryId::Home ? "i_home" : "i_foreign",
           regime.dominant == CountryId::Home ? PlayerId::CBHome
                                              : PlayerId::CBForeign,
           true});
      ub.add_singleton(+1);
      break;
  }
  m.nu = static_cast<int>(m.instruments.size());
  m.inst = ub.build();

  // --- layouts ---------------------------------------------------------------
  m.nv = 2 * kNumCv + 2;
  PairLayoutBuilder vb;
  for (int k = 0; k < kNumCv; ++k) vb.add_pair();
  vb.add_singleton(-1);  // e
  vb.add_singleton(-1);  // z
  m.vars = vb.build();
  m.rows = m.vars;  // equation rows pair the same way

  PairLayoutBuilder xb;
  for (int k = 0; k < kNumCx; ++k) xb.add_pair();
  // Lagged instruments mirror the instrument layout.
  xb.add_pair();
  if (flexible) {
    xb.add_pair();
  } else {
    xb.add_singleton(+1);
  }
  if (has_elag) m.x_elag_ = xb.add_singleton(-1);
  m.states = xb.build();
  m.nx = m.states.size();

  PairLayoutBuilder db;
  for (int k = 0; k < kNumCd; ++k) db.add_pair();
  m.shocks = db.build();
  m.nd = m.shocks.size();

  m.G = Matrix::Zero(m.nv, m.nv);
  m.H = Matrix::Zero(m.nv, m.nx);
  m.J = Matrix::Zero(m.nv, m.nu);
  m.K = Matrix::Zero(m.nv, m.nd);
  m.L = Matrix::Zero(m.nv, m.n_jump);

  // Shared cross-country coefficients use averaged calibration so that the
  // two-country closure is exact under asymmetric calibrations.
  const double nu_bar = 0.5 * (home.nu + foreign.nu);
  const double m_bar = 0.5 * (home.m + foreign.m);
  const double phi_bar = 0.5 * (home.phi_risk + foreign.phi_risk);

  // Rows share the v index space: the row for equation block B of country k
  // sits at v_of(B, k).
  const auto row_of = [&](Cv block, CountryId k) { return m.v_of(block, k); };

  // Columns of the rate earned on net foreign assets: the partner's real
  // rate under Flexible/SingleMarket, the union average under EMU.
  const auto add_rstar_cols = [&](int row, CountryId k, double coeff) {
    if (emu) {
      m.G(row, m.v_of(Cv::r, CountryId::Home)) += 0.5 * coeff;
      m.G(row, m.v_of(Cv::r, CountryId::Foreign)) += 0.5 * coeff;
    } else {
      m.G(row, m.v_of(Cv::r, other(k))) += coeff;
    }
  };

  for (CountryId k : kBoth) {
    const Calibration& cal = m.calib(k);
    const CountryId j = other(k);
    const double r_bar = cal.baseline_real_rate();
    const double rstar_bar = emu ? 0.5 * (home.baseline_real_rate() +
                                          foreign.baseline_real_rate())
                                 : m.calib(j).baseline_real_rate();
    const double theta = behavior.effective_theta();
    const int u_g = k == CountryId::Home ? 0 : 1;

    // Aggregate demand: y = c q + g - sigma r + kappa (w_lag - a r)
    //                       + nu z_signed + m y_partner + eps_y.
    {
      const int r0 = row_of(Cv::y, k);
      m.G(r0, m.v_of(Cv::y, k)) = 1.0;
      m.G(r0, m.v_of(Cv::q, k)) = -cal.c;
      m.G(r0, m.v_of(Cv::r, k)) = cal.sigma + cal.kappa * cal.a;
      m.G(r0, m.v_z()) = -cal.nu * sgn(k);
      m.G(r0, m.v_of(Cv::y, j)) = -cal.m;
      m.H(r0, m.x_of(Cx::w, k)) = cal.kappa;
      m.J(r0, u_g) = 1.0;
      m.K(r0, m.d_of(Cd::eps_y, k)) = 1.0;
    }

    // Disposable income, Keynesian (Hicks) or Ricardian (Barro).
    {
      const int r0 = row_of(Cv::q, k);
      m.G(r0, m.v_of(Cv::q, k)) = 1.0;
      m.G(r0, m.v_of(Cv::y, k)) = -1.0;
      add_rstar_cols(r0, k, -cal.f_bar);
      m.H(r0, m.x_of(Cx::f, k)) = rstar_bar;
      if (behavior.consumer == ConsumerBehavior::Keynesian) {
        m.G(r0, m.v_of(Cv::r, k)) = -cal.b_bar;
        m.G(r0, m.v_of(Cv::tau, k)) = 1.0;
        m.H(r0, m.x_of(Cx::b, k)) = r_bar;
      } else {
        m.J(r0, u_g) = -1.0;
      }
    }

    // Phillips curve: pi = theta pi_lag + lambda_p y + eps_pi. The partial
    // indexation anchor is the zero-deviation reference rate.
    {
      const int r0 = row_of(Cv::pi, k);
      m.G(r0, m.v_of(Cv::pi, k)) = 1.0;
      m.G(r0, m.v_of(Cv::y, k)) = -cal.lambda_p;
      m.H(r0, m.x_of(Cx::pilag, k)) = theta;
      m.K(r0, m.d_of(Cd::eps_pi, k)) = 1.0;
    }

    // Real rate: r = i - E[pi']. Under rational expectations the forecast is
    // the Phillips-curve one step ahead evaluated at current outcomes,
    // theta pi + lambda_p y (exact once output settles); under backward
    // expectations it is lagged inflation.
    {
      const int r0 = row_of(Cv::r, k);
      m.G(r0, m.v_of(Cv::r, k)) = 1.0;
      m.G(r0, m.v_of(Cv::i, k)) = -1.0;
      if (rational) {
        m.G(r0, m.v_of(Cv::pi, k)) = theta;
        m.G(r0, m.v_of(Cv::y, k)) = cal.lambda_p;
      } else {
        m.H(r0, m.x_of(Cx::pilag, k)) = -1.0;
      }
    }

    // Price level: p = p_lag + pi.
    {
      const int r0 = row_of(Cv::p, k);
      m.G(r0, m.v_of(Cv::p, k)) = 1.0;
      m.G(r0, m.v_of(Cv::pi, k)) = -1.0;
      m.H(r0, m.x_of(Cx::p, k)) = 1.0;
    }

    // Tax rule on inherited debt: tau = beta (b_lag - b_target).
    {
      const int r0 = row_of(Cv::tau, k);
      m.G(r0, m.v_of(Cv::tau, k)) = 1.0;
      m.H(r0, m.x_of(Cx::b, k)) = cal.beta_tax;
      m.K(r0, m.d_of(Cd::b_target, k)) = -cal.beta_tax;
    }

    // Trade balance: tb_k = sgn_k nu_bar z - m_bar y_k + m_bar y_j. Averaged
    // coefficients make the two rows exactly opposite.
    {
      const int r0 = row_of(Cv::tb, k);
      m.G(r0, m.v_of(Cv::tb, k)) = 1.0;
      m.G(r0, m.v_z()) = -nu_bar * sgn(k);
      m.G(r0, m.v_of(Cv::y, k)) = m_bar;
      m.G(r0, m.v_of(Cv::y, j)) = -m_bar;
    }

    // Debt accumulation: b = (1 + r_bar) b_lag + b_bar r + g - tau.
    {
      const int r0 = row_of(Cv::b, k);
      m.G(r0, m.v_of(Cv::b, k)) = 1.0;
      m.G(r0, m.v_of(Cv::r, k)) = -cal.b_bar;
      m.G(r0, m.v_of(Cv::tau, k)) = 1.0;
      m.H(r0, m.x_of(Cx::b, k)) = 1.0 + r_bar;
      m.J(r0, u_g) = 1.0;
    }

    // Net foreign assets: f = (1 + rstar_bar) f_lag + f_bar r_star + tb.
    {
      const int r0 = row_of(Cv::f, k);
      m.G(r0, m.v_of(Cv::f, k)) = 1.0;
      m.G(r0, m.v_of(Cv::tb, k)) = -1.0;
      add_rstar_cols(r0, k, -cal.f_bar);
      m.H(r0, m.x_of(Cx::f, k)) = 1.0 + rstar_bar;
    }

    // Wealth identity: w = b + f.
    {
      const int r0 = row_of(Cv::w, k);
      m.G(r0, m.v_of(Cv::w, k)) = 1.0;
      m.G(r0, m.v_of(Cv::b, k)) = -1.0;
      m.G(r0, m.v_of(Cv::f, k)) = -1.0;
    }
  }

  // Real exchange rate definition: z = e + p_f - p_h.
  {
    const int r0 = m.v_z();
    m.G(r0, m.v_z()) = 1.0;
    m.G(r0, m.v_e()) = -1.0;
    m.G(r0, m.v_of(Cv::p, CountryId::Foreign)) = -1.0;
    m.G(r0, m.v_of(Cv::p, CountryId::Home)) = 1.0;
  }

  // Exchange-rate block. The premium is written in relative net-foreign-asset
  // deviations, (f_h - f_f)/2, which coincides with the home-country form on
  // current-account paths and vanishes on symmetric ones.
  {
    const int r0 = m.v_e();
    if (flexible) {
      m.G(r0, m.v_of(Cv::i, CountryId::Home)) = 1.0;
      m.G(r0, m.v_of(Cv::i, CountryId::Foreign)) = -1.0;
      m.G(r0, m.v_e()) = 1.0;
      m.G(r0, m.v_of(Cv::f, CountryId::Home)) = -0.5 * phi_bar;
      m.G(r0, m.v_of(Cv::f, CountryId::Foreign)) = 0.5 * phi_bar;
      if (rational) {
        m.L(r0, 0) = 1.0;  // E[e']
      } else {
        m.H(r0, m.x_elag()) = 1.0;  // lag-based expectation
      }
    } else {
      m.G(r0, m.v_e()) = 1.0;  // e frozen at the reference parity
    }
  }

  // Nominal-rate block.
  {
    const int rh = m.v_of(Cv::i, CountryId::Home);
    const int rf = m.v_of(Cv::i, CountryId::Foreign);
    switch (regime.kind) {
      case RegimeKind::Flexible:
        m.G(rh, m.v_of(Cv::i, CountryId::Home)) = 1.0;
        m.J(rh, 2) = 1.0;
        m.G(rf, m.v_of(Cv::i, CountryId::Foreign)) = 1.0;
        m.J(rf, 3) = 1.0;
        break;
      case RegimeKind::EMU:
        m.G(rh, m.v_of(Cv::i, CountryId::Home)) = 1.0;
        m.J(rh, 2) = 1.0;
        m.G(rf, m.v_of(Cv::i, CountryId::Foreign)) = 1.0;
        m.J(rf, 2) = 1.0;
        break;
      case RegimeKind::SingleMarket: {
        const CountryId dom = regime.dominant;
        const CountryId sub = regime.dominated();
        const int rdom = m.v_of(Cv::i, dom);
        m.G(rdom, m.v_of(Cv::i, dom)) = 1.0;
        m.J(rdom, 2) = 1.0;
        // The dominated rate carries the country premium: it falls as the
        // dominated country accumulates net foreign assets.
        const int rsub = m.v_of(Cv::i, sub);
        m.G(rsub, m.v_of(Cv::i, sub)) = 1.0;
        m.G(rsub, m.v_of(Cv::i, dom)) = -1.0;
        m.G(rsub, m.v_of(Cv::f, sub)) = 0.5 * phi_bar;
        m.G(rsub, m.v_of(Cv::f, dom)) = -0.5 * phi_bar;
        break;
      }
    }
  }

  // --- state update ----------------------------------------------------------
  m.Sx_v = Matrix::Zero(m.nx, m.nv);
  m.Sx_u = Matrix::Zero(m.nx, m.nu);
  for (CountryId k : kBoth) {
    m.Sx_v(m.x_of(Cx::b, k), m.v_of(Cv::b, k)) = 1.0;
    m.Sx_v(m.x_of(Cx::f, k), m.v_of(Cv::f, k)) = 1.0;
    m.Sx_v(m.x_of(Cx::w, k), m.v_of(Cv::w, k)) = 1.0;
    m.Sx_v(m.x_of(Cx::p, k), m.v_of(Cv::p, k)) = 1.0;
    m.Sx_v(m.x_of(Cx::pilag, k), m.v_of(Cv::pi, k)) = 1.0;
  }
  for (int u = 0; u < m.nu; ++u) m.Sx_u(m.x_lag_of(u), u) = 1.0;
  if (has_elag) m.Sx_v(m.x_elag(), m.v_e()) = 1.0;

  return m;
}

}  // namespace macrogame

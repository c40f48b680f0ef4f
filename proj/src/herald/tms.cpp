#include "spinomech/herald/tms.hpp"

#include <cmath>
#include <stdexcept>

namespace spinomech::herald {

TmsCoefficients tms_coefficients(double g, double gamma_e, double t) {
  if (!(t >= 0)) throw std::invalid_argument("tms_coefficients: t must be >= 0");
  if (!(gamma_e >= 0))
    throw std::invalid_argument("tms_coefficients: gamma_e must be >= 0");
  TmsCoefficients c;
  c.g = g;
  c.gamma_e = gamma_e;
  c.t = t;
  const double ag = std::abs(g);
  c.g_prime = std::sqrt(ag * ag + gamma_e * gamma_e / 16.0);
  const double gp = c.g_prime;
  double sh, ch;
  if (gp == 0) {
    sh = 0;  // g' t -> 0 limit: sinh term vanishes, cosh -> 1
    ch = 1;
  } else {
    sh = std::sinh(gp * t);
    ch = std::cosh(gp * t);
  }
  const double damp = gp > 0 ? gamma_e / (4.0 * gp) : 0.0;
  c.c_a = damp * sh - ch;
  c.c_b = damp * sh + ch;
  c.d_a = gp > 0 ? Complex(0, g / gp * sh) : Complex(0, 0);
  c.d_b = -c.d_a;
  return c;
}

double tms_leakage_expectation(double g, double gamma_e, double t) {
  if (!(t >= 0))
    throw std::invalid_argument("tms_leakage_expectation: t must be >= 0");
  if (gamma_e == 0 || g == 0) return 0.0;
  const double ag = std::abs(g);
  const double gp = std::sqrt(ag * ag + gamma_e * gamma_e / 16.0);
  const double sh = std::sinh(gp * t);
  return gamma_e * std::exp(-gamma_e * t / 2.0) * (ag * ag) / (gp * gp) * sh *
         sh;
}

Complex tms_fock_amplitude(double g, double gamma_e, double t, int n,
                           FockFormulaVariant variant) {
  if (n < 0) throw std::invalid_argument("tms_fock_amplitude: n must be >= 0");
  const TmsCoefficients c = tms_coefficients(std::abs(g), gamma_e, t);

  // g imaginary in the quadrature form: D_a -> -(|g|/g') sinh, D_b -> +.
  const double da = -std::abs(c.d_a);
  const double db = -da;
  const double a_form = c.c_a * c.c_a + da * da;
  const double b_form = c.c_b * c.c_b + db * db;
  const double cross = c.c_a * db + da * c.c_b;

  const double denom = (1.0 + a_form) * (1.0 + b_form) - cross * cross;
  if (denom <= 0)
    throw std::runtime_error("tms_fock_amplitude: degenerate denominator");

  const double cross_coeff =
      variant == FockFormulaVariant::double_cross_term ? 2.0 * cross : cross;
  const double bracket =
      (-2.0 + (2.0 + a_form + b_form - cross_coeff) / denom) *
          std::exp(-gamma_e * t / 2.0) +
      1.0;
  const double prefactor = 2.0 * std::sqrt(1.0 / denom);
  return prefactor * std::pow(bracket, double(n));
}

}  // namespace spinomech::herald

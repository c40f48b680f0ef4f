#pragma once

#include <complex>

namespace spinomech::herald {

using Complex = std::complex<double>;

// Quadrature-evolution coefficients of two-mode squeezing with loss gamma_e
// on the leaking mode:
//   C_a = (gamma_e/4g') sinh(g't) - cosh(g't)
//   C_b = (gamma_e/4g') sinh(g't) + cosh(g't)
//   D_a = (i g / g') sinh(g't),  D_b = -D_a
// with g' = sqrt(|g|^2 + gamma_e^2/16) >= max(|g|, gamma_e/4).
struct TmsCoefficients {
  double g_prime = 0;
  double c_a = 0;
  double c_b = 0;
  Complex d_a{0, 0};
  Complex d_b{0, 0};
  double gamma_e = 0;
  double g = 0;
  double t = 0;
};

TmsCoefficients tms_coefficients(double g, double gamma_e, double t);

// Rate-weighted leaked photon number
//   <gamma_e a^a>(t) = gamma_e e^{-gamma_e t/2} (|g|^2/g'^2) sinh^2(g't),
// which equals the Lindblad expectation gamma_e Tr(a^a rho(t)) exactly.
double tms_leakage_expectation(double g, double gamma_e, double t);

// Joint Fock amplitude <nn|sq> of the squeezed two-mode state. Writing
// A = C_a^2+D_a^2, B = C_b^2+D_b^2 and K for the X_a X_b cross coefficient
// of the evolved Gaussian, the amplitude is
//   2 sqrt(1/((1+A)(1+B)-K^2)) [(-2 + (2+A+B-2K)/((1+A)(1+B)-K^2)) e^{-gamma t/2} + 1]^n
// evaluated with g taken imaginary in the quadrature form so all of A, B, K
// are real. The single_cross_term variant replaces 2K by K in the bracket
// numerator; it is kept for comparison because only the double_cross_term
// form reproduces the truncated-Fock evolution (exactly so at gamma_e = 0),
// and the validation suite reports the difference between the two.
enum class FockFormulaVariant { double_cross_term, single_cross_term };

Complex tms_fock_amplitude(
    double g, double gamma_e, double t, int n,
    FockFormulaVariant variant = FockFormulaVariant::double_cross_term);

}  // namespace spinomech::herald

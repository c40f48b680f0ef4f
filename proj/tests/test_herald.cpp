#include "doctest.h"

#include <cmath>
#include <complex>

#include "spinomech/constants.hpp"
#include "spinomech/herald/closed_forms.hpp"
#include "spinomech/herald/dark_counts.hpp"
#include "spinomech/herald/tms.hpp"
#include "spinomech/qdyn/evolve.hpp"
#include "spinomech/qdyn/hilbert.hpp"

using namespace spinomech;
using namespace spinomech::herald;

namespace {
constexpr double g_om_ref = two_pi * 2e5;
constexpr double t_a_ref = 2.9010521272446745e-11;  // omega_a/2pi = 197.5 THz, Q = 3.6e4
}  // namespace

TEST_CASE("herald probability closed form") {
  CHECK(herald_probability(0, g_om_ref, t_a_ref, t_a_ref).value == 0.0);
  CHECK(herald_probability(1000, g_om_ref, t_a_ref, 0).value == 0.0);

  auto p = herald_probability(1000, g_om_ref, t_a_ref, t_a_ref);
  CHECK(p.value == doctest::Approx(5.3161e-6).epsilon(1e-4));
  CHECK(p.perturbative_valid);

  // validity flag trips once alpha g_om T_a reaches the perturbative limit
  auto loud = herald_probability(1e13, g_om_ref, t_a_ref, t_a_ref);
  CHECK(!loud.perturbative_valid);

  CHECK_THROWS_AS(herald_probability(-1, g_om_ref, t_a_ref, t_a_ref),
                  std::invalid_argument);
}

TEST_CASE("herald infidelity closed form") {
  SUBCASE("vanishes with no pump and no mechanical loss") {
    auto f = herald_infidelity(0, g_om_ref, t_a_ref, t_a_ref, 0, 0);
    CHECK(f.total == 0.0);
  }
  SUBCASE("reference point, cold bath") {
    const double gamma_m = 6.710441908067798e6;  // Q_mech = 1e4 at 5.34 GHz
    auto f = herald_infidelity(1000, g_om_ref, t_a_ref, t_a_ref, gamma_m, 0);
    CHECK(f.multi_excitation == doctest::Approx(1.06321e-5).epsilon(1e-4));
    CHECK(f.thermal == doctest::Approx(4.2357e-15).epsilon(1e-4));
    CHECK(f.total == f.multi_excitation + f.thermal);
  }
  SUBCASE("thermal term scales as 3 n_th + 1") {
    const double gamma_m = 6.710441908067798e6;
    auto cold = herald_infidelity(1000, g_om_ref, t_a_ref, t_a_ref, gamma_m, 0);
    auto warm =
        herald_infidelity(1000, g_om_ref, t_a_ref, t_a_ref, gamma_m, 156.0795);
    CHECK(warm.thermal / cold.thermal ==
          doctest::Approx(3 * 156.0795 + 1).epsilon(1e-12));
  }
  SUBCASE("multi-excitation term is exactly twice the herald probability") {
    for (double a2 : {1.0, 137.0, 1e4}) {
      auto p = herald_probability(a2, g_om_ref, t_a_ref, 7 * t_a_ref);
      auto f = herald_infidelity(a2, g_om_ref, t_a_ref, 7 * t_a_ref, 1e3, 2.5);
      CHECK(f.multi_excitation == 2.0 * p.value);
    }
  }
}

TEST_CASE("closed forms are smooth: analytic partials match central "
          "differences") {
  const double a2 = 1000, T = 20 * t_a_ref;
  auto p = [&](double t) {
    return herald_probability(a2, g_om_ref, t_a_ref, t).value;
  };
  const double h = T * 1e-5;
  const double fd = (p(T + h) - p(T - h)) / (2 * h);
  const double analytic = 4 * a2 * g_om_ref * g_om_ref * t_a_ref;
  CHECK(fd == doctest::Approx(analytic).epsilon(1e-6));

  const double gamma_m = 1e5, n_th = 3.0;
  auto inf = [&](double gm) {
    return herald_infidelity(a2, g_om_ref, t_a_ref, T, gm, n_th).total;
  };
  const double hg = gamma_m * 1e-5;
  const double fd_g = (inf(gamma_m + hg) - inf(gamma_m - hg)) / (2 * hg);
  CHECK(fd_g == doctest::Approx(0.75 * t_a_ref * T * (3 * n_th + 1)).epsilon(1e-6));
}

TEST_CASE("entangling extension") {
  CHECK(entangling_extension(0, Detector::one).p_e == 0.0);
  auto e = entangling_extension(5.3161e-6, Detector::one);
  CHECK(e.p_e == doctest::Approx(1.06322e-5).epsilon(1e-4));
  CHECK(e.state_label == "|01>+|10>");
  CHECK(entangling_extension(0.1, Detector::two).state_label == "|01>-|10>");
  CHECK_THROWS_AS(entangling_extension(0.6, Detector::one), std::domain_error);
}

TEST_CASE("swap infidelity estimate") {
  CHECK(swap_infidelity(0, 1e5, two_pi * 41e6) == 0.0);
  // n_th at 40 K and Q_mech = 1e4: the estimate exceeds unity, which is why
  // meaningful operation needs a much higher mechanical quality factor.
  CHECK(swap_infidelity(156.0795, 6.710442e6, two_pi * 41e6) ==
        doctest::Approx(4.0657).epsilon(1e-4));
  CHECK(swap_infidelity(156.0795, 671.0442, two_pi * 41e6) ==
        doctest::Approx(4.0657e-4).epsilon(1e-4));
  CHECK(swap_infidelity(5, 1e4, 2 * 7e7) ==
        doctest::Approx(0.5 * swap_infidelity(5, 1e4, 7e7)));
  CHECK_THROWS_AS(swap_infidelity(1, 1, 0), std::invalid_argument);
}

TEST_CASE("tms coefficients") {
  SUBCASE("t = 0 gives (-1, +1, 0, 0)") {
    auto c = tms_coefficients(two_pi * 1e6, two_pi * 5e6, 0);
    CHECK(c.c_a == -1.0);
    CHECK(c.c_b == 1.0);
    CHECK(std::abs(c.d_a) == 0.0);
    CHECK(std::abs(c.d_b) == 0.0);
  }
  SUBCASE("lossless limit reduces to hyperbolics") {
    const double g = two_pi * 1e6, t = 0.7 / g;
    auto c = tms_coefficients(g, 0, t);
    CHECK(c.g_prime == doctest::Approx(g).epsilon(1e-14));
    CHECK(c.c_a == doctest::Approx(-std::cosh(g * t)).epsilon(1e-14));
    CHECK(c.c_b == doctest::Approx(std::cosh(g * t)).epsilon(1e-14));
    CHECK(std::abs(c.d_a) == doctest::Approx(std::sinh(g * t)).epsilon(1e-14));
    // quadratic-form identity cosh^2 - sinh^2 = 1
    CHECK(c.c_b * c.c_b - std::norm(c.d_a) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("pure decay limit") {
    auto c = tms_coefficients(0, 4e6, 1e-6);
    CHECK(c.g_prime == doctest::Approx(1e6).epsilon(1e-14));
    CHECK(std::abs(c.d_a) == 0.0);
  }
  SUBCASE("g_prime dominates both scales") {
    auto c = tms_coefficients(3e6, 8e6, 1e-7);
    CHECK(c.g_prime >= 3e6);
    CHECK(c.g_prime >= 8e6 / 4);
  }
}

TEST_CASE("tms leakage expectation") {
  CHECK(tms_leakage_expectation(two_pi * 1e6, 0, 1e-6) == 0.0);
  CHECK(tms_leakage_expectation(0, two_pi * 5e6, 1e-6) == 0.0);
  // frozen spot value at g/2pi = 1 MHz, gamma_e/2pi = 5 MHz, t = 0.15 us
  CHECK(tms_leakage_expectation(two_pi * 1e6, two_pi * 5e6, 0.15e-6) ==
        doctest::Approx(5.37045e6).epsilon(1e-5));
}

TEST_CASE("leakage integral: quadrature self-consistency and the 4g^2/gamma "
          "plateau") {
  // For gamma_e >> g the leak rate plateaus at 4 g^2 / gamma_e; integrating
  // the closed form must agree with its exact antiderivative and with the
  // plateau estimate over the plateau window.
  const double g = two_pi * 1e4, gamma = 200 * g;
  const double gp = std::sqrt(g * g + gamma * gamma / 16.0);
  const double T = 40.0 / gamma;

  const int n = 20000;
  std::vector<double> ts(n + 1), vals(n + 1);
  for (int k = 0; k <= n; ++k) {
    ts[size_t(k)] = T * k / n;
    vals[size_t(k)] = tms_leakage_expectation(g, gamma, ts[size_t(k)]);
  }
  const double quad = qdyn::trapezoid(ts, vals);

  // exact integral of gamma (g/g')^2 e^{-gamma t/2} sinh^2(g't)
  const double sp = 2 * gp - gamma / 2, sm = -2 * gp - gamma / 2;
  const double pref = gamma * g * g / (4 * gp * gp);
  const double exact = pref * ((std::exp(sp * T) - 1) / sp +
                               (std::exp(sm * T) - 1) / sm -
                               2 * (1 - std::exp(-gamma * T / 2)) / (gamma / 2));
  CHECK(quad == doctest::Approx(exact).epsilon(1e-5));
  CHECK(quad == doctest::Approx(4 * g * g / gamma * (T - 3 / gamma)).epsilon(0.01));
}

TEST_CASE("fock amplitudes: vacuum at t = 0") {
  CHECK(tms_fock_amplitude(two_pi * 1e6, two_pi * 5e6, 0, 0).real() == 1.0);
  for (int n = 1; n <= 5; ++n) {
    CHECK(std::abs(tms_fock_amplitude(two_pi * 1e6, two_pi * 5e6, 0, n)) ==
          0.0);
  }
}

TEST_CASE("fock amplitudes: lossless ratio grows linearly at small squeezing") {
  const double g = two_pi * 1e6;
  for (double r : {0.01, 0.02, 0.04}) {
    const double t = r / g;
    const auto a0 = tms_fock_amplitude(g, 0, t, 0);
    const auto a1 = tms_fock_amplitude(g, 0, t, 1);
    CHECK(std::abs(a1 / a0) == doctest::Approx(r).epsilon(1e-3));
  }
}

TEST_CASE("fock amplitudes: lossless distribution matches the truncated-Fock "
          "evolution") {
  const double g = two_pi * 1e6, r = 0.3, t = r / g;
  qdyn::HilbertSpace space({16, 16, false});
  const qdyn::Matrix& a = space.photon_lower();
  const qdyn::Matrix& b = space.phonon_lower();
  qdyn::Matrix m = g * (a * b);
  qdyn::Matrix h = m + m.adjoint();
  qdyn::Trajectory traj = qdyn::evolve(space.vacuum(), h, t);
  qdyn::Vector psi = traj.states.col(traj.steps());

  for (int n = 0; n <= 4; ++n) {
    const double p_evolved = std::norm(psi(space.index(n, n)));
    const double p_formula = std::norm(tms_fock_amplitude(g, 0, t, n));
    CHECK(p_formula == doctest::Approx(p_evolved).epsilon(1e-3));
  }
  // the single-cross-term variant underestimates |<11|sq>| by a factor ~2
  const double p1_single = std::norm(tms_fock_amplitude(
      g, 0, t, 1, FockFormulaVariant::single_cross_term));
  const double p1 = std::norm(tms_fock_amplitude(g, 0, t, 1));
  CHECK(p1 / p1_single == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("dark count posterior") {
  CHECK(dark_count_posterior(1e3, 0).p_true == 1.0);
  CHECK(dark_count_posterior(0, 50).q_dark == 1.0);
  auto p = dark_count_posterior(123.0, 123.0);
  CHECK(p.p_true == doctest::Approx(0.5));
  CHECK(p.p_true + p.q_dark == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(dark_count_posterior(0, 0), std::invalid_argument);
}

TEST_CASE("post-detection state") {
  qdyn::HilbertSpace space({3, 3, false});
  const qdyn::Matrix& a = space.photon_lower();
  // |psi> = (|00> + |11>)/sqrt(2)
  qdyn::Vector psi = (space.fock(0, 0) + space.fock(1, 1)) / std::sqrt(2.0);

  SUBCASE("no dark counts collapses the state") {
    auto rho = post_detection_state(a, psi, dark_count_posterior(0.5, 0));
    CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    // pure a|psi>/|a psi| = |01>
    const int i01 = space.index(0, 1);
    CHECK(rho(i01, i01).real() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("pure dark count leaves the state unchanged") {
    auto rho = post_detection_state(a, psi, dark_count_posterior(0, 7.0));
    CHECK((rho - psi * psi.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("balanced case mixes half and half with unit trace") {
    auto rho = post_detection_state(a, psi, dark_count_posterior(3.0, 3.0));
    CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    const int i01 = space.index(0, 1);
    CHECK(rho(i01, i01).real() == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("collapse of a photonless state is an error") {
    qdyn::Vector vac = space.vacuum();
    CHECK_THROWS_AS(
        post_detection_state(a, vac, dark_count_posterior(1.0, 1.0)),
        std::runtime_error);
  }
}

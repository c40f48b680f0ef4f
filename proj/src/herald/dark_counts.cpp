#include "spinomech/herald/dark_counts.hpp"

namespace spinomech::herald {

DarkCountPosterior dark_count_posterior(double r_t, double d) {
  if (!(r_t >= 0) || !(d >= 0))
    throw std::invalid_argument("dark_count_posterior: rates must be >= 0");
  if (r_t + d <= 0)
    throw std::invalid_argument("dark_count_posterior: rates are both zero");
  return {r_t / (r_t + d), d / (r_t + d)};
}

qdyn::Matrix post_detection_state(const qdyn::Matrix& a,
                                  const qdyn::Vector& psi,
                                  const DarkCountPosterior& posterior) {
  qdyn::Vector normalized = psi;
  const double n = normalized.norm();
  if (n <= 0)
    throw std::invalid_argument("post_detection_state: zero-norm state");
  normalized /= n;

  qdyn::Matrix rho =
      posterior.q_dark * (normalized * normalized.adjoint());
  if (posterior.p_true > 0) {
    qdyn::Vector collapsed = a * normalized;
    const double r_t = collapsed.squaredNorm();
    if (r_t <= 0)
      throw std::runtime_error(
          "post_detection_state: r_t is zero, collapsed state undefined");
    rho += (posterior.p_true / r_t) * (collapsed * collapsed.adjoint());
  }
  return rho;
}

}  // namespace spinomech::herald

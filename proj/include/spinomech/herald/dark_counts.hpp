#pragma once

#include "spinomech/qdyn/hilbert.hpp"

namespace spinomech::herald {

struct DarkCountPosterior {
  double p_true = 0;  // click came from a leaked photon
  double q_dark = 0;  // click was a dark count; p_true + q_dark = 1
};

// r_t is the true-detection rate <psi|a^a|psi> at the click time, d the dark
// count rate.
DarkCountPosterior dark_count_posterior(double r_t, double d);

// Post-click mixture p_true |psi~><psi~| + q_dark |psi><psi| with
// |psi~> = a|psi>/sqrt(r_t), r_t = <psi|a^a|psi>. |psi> is normalized first.
qdyn::Matrix post_detection_state(const qdyn::Matrix& a,
                                  const qdyn::Vector& psi,
                                  const DarkCountPosterior& posterior);

}  // namespace spinomech::herald

#include "spinomech/modefields/tensor.hpp"

#include <stdexcept>

namespace spinomech::modefields {

Matrix3 rotation_matrix(double theta, double phi) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  Matrix3 r;
  r << cp, sp, 0,
      -ct * sp, ct * cp, -st,
      -st * sp, st * cp, ct;
  return r;
}

Rank4 cubic_photoelastic_tensor(const PhotoelasticConstants& p) {
  Rank4 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        t(i, i, j, j) = p.p11;
      } else {
        t(i, i, j, j) = p.p12;
        t(i, j, i, j) = p.p44;
        t(i, j, j, i) = p.p44;
      }
    }
  for (int i = 0; i < 3; ++i) t(i, i, i, i) = p.p11;
  return t;
}

Rank4 rotate_photoelastic(const PhotoelasticConstants& p, double alpha) {
  const Rank4 base = cubic_photoelastic_tensor(p);
  const Matrix3 r = rotation_matrix(0.0, alpha);
  Rank4 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double acc = 0;
          for (int q = 0; q < 3; ++q)
            for (int s = 0; s < 3; ++s)
              for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 3; ++v)
                  acc += r(i, q) * r(j, s) * r(k, u) * r(l, v) *
                         base(q, s, u, v);
          out(i, j, k, l) = acc;
        }
  return out;
}

Matrix3 rotate_strain_to_siv(const Matrix3& epsilon0,
                             const CrystalOrientation& orient) {
  if ((epsilon0 - epsilon0.transpose()).cwiseAbs().maxCoeff() >
      1e-9 * std::max(1.0, epsilon0.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("rotate_strain_to_siv: strain not symmetric");
  const Matrix3 rz = rotation_matrix(0.0, orient.alpha);
  const Matrix3 rs = rotation_matrix(orient.theta, orient.phi);
  const Matrix3 crystal = rz * epsilon0 * rz.transpose();
  return rs * crystal * rs.transpose();
}

double siv_strain_combination(const Matrix3& e,
                              StrainCombinationVariant variant) {
  const double e13_term = variant == StrainCombinationVariant::printed
                              ? e(0, 2) - e(2, 0)
                              : e(0, 2) + e(2, 0);
  return (-e(0, 0) - e(1, 1) + 2.0 * e(2, 2) + 2.0 * (e(0, 1) + e(1, 0)) -
          e13_term - (e(1, 2) + e(2, 1))) /
         3.0;
}

}  // namespace spinomech::modefields

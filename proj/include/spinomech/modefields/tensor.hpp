#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

namespace spinomech::modefields {

using Matrix3 = Eigen::Matrix3d;

// Cubic photoelastic constants in the crystal frame.
struct PhotoelasticConstants {
  double p11 = 0;
  double p12 = 0;
  double p44 = 0;
};

inline PhotoelasticConstants diamond_photoelastic() {
  return {-0.25, 0.043, -0.172};
}

// Crystal orientation relative to the device: alpha is the in-plane crystal
// angle; theta/phi default to the color-center axes arcsin(sqrt(2/3)), pi/4.
struct CrystalOrientation {
  double alpha = 0;
  double theta = std::asin(std::sqrt(2.0 / 3.0));
  double phi = std::atan(1.0);  // pi/4
};

// Passive rotation by polar angle theta and azimuth phi:
//   [  cos p        sin p       0     ]
//   [ -cos t sin p  cos t cos p -sin t ]
//   [ -sin t sin p  sin t cos p  cos t ]
// Orthogonal with det +1; theta = 0 reduces to a plain z-rotation.
Matrix3 rotation_matrix(double theta, double phi);

// Rank-4 tensor with the minor symmetries of a photoelastic tensor.
class Rank4 {
 public:
  double& operator()(int i, int j, int k, int l) {
    return data_[size_t(((i * 3 + j) * 3 + k) * 3 + l)];
  }
  double operator()(int i, int j, int k, int l) const {
    return data_[size_t(((i * 3 + j) * 3 + k) * 3 + l)];
  }
  double squared_norm() const {
    double s = 0;
    for (double x : data_) s += x * x;
    return s;
  }

 private:
  std::array<double, 81> data_{};
};

// Cubic-symmetry tensor assembled from (p11, p12, p44).
Rank4 cubic_photoelastic_tensor(const PhotoelasticConstants& p);

// p_ijkl(alpha) = R(0,a)_iq R(0,a)_jr R(0,a)_ks R(0,a)_lt p_qrst.
Rank4 rotate_photoelastic(const PhotoelasticConstants& p, double alpha);

// Strain rotated into the color-center frame:
//   eps = R(theta,phi) (Rz(alpha) eps0 Rz(alpha)^T) R(theta,phi)^T.
Matrix3 rotate_strain_to_siv(const Matrix3& epsilon0,
                             const CrystalOrientation& orient);

// Transverse strain combination eps_xx - eps_yy experienced by the center,
// written in crystal-frame components. The printed form carries the
// antisymmetric eps13 - eps31 term (identically zero for symmetric strain);
// the symmetrized variant replaces it with eps13 + eps31.
enum class StrainCombinationVariant { printed, symmetrized };

double siv_strain_combination(
    const Matrix3& epsilon,
    StrainCombinationVariant variant = StrainCombinationVariant::printed);

}  // namespace spinomech::modefields

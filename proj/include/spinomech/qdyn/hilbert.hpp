#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace spinomech::qdyn {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Truncated Fock (x) Fock [(x) spin] tensor-product space.  Basis ordering is
// (photon, phonon[, spin]) with the photon index slowest, i.e.
//   global index = (ia * n_b + ib) * n_spin + is,
// spin index 0 = ground |down>, 1 = excited |up>.
struct HilbertConfig {
  int n_a = 6;               // photon Fock levels 0..n_a-1
  int n_b = 6;               // phonon Fock levels 0..n_b-1
  bool include_spin = false;

  int spin_dim() const { return include_spin ? 2 : 1; }
  int dim() const { return n_a * n_b * spin_dim(); }

  void validate() const {
    if (n_a < 2 || n_b < 2)
      throw std::invalid_argument("HilbertConfig: mode cutoffs must be >= 2");
  }
};

class HilbertSpace {
 public:
  explicit HilbertSpace(HilbertConfig cfg);

  const HilbertConfig& config() const { return cfg_; }
  int dim() const { return cfg_.dim(); }

  int index(int ia, int ib, int is = 0) const {
    return (ia * cfg_.n_b + ib) * cfg_.spin_dim() + is;
  }

  // Truncated mode operators on the full product space.
  const Matrix& photon_lower() const { return a_; }
  const Matrix& phonon_lower() const { return b_; }
  const Matrix& spin_lower() const;  // sigma_- = |down><up|; throws without spin

  Vector vacuum() const;
  Vector fock(int ia, int ib, int is = 0) const;

  // Diagonal of c^dagger c for the truncated operator c (used for fast
  // expectation values; all jump operators here have diagonal c^dagger c).
  static Eigen::VectorXd dagger_product_diagonal(const Matrix& c);

 private:
  HilbertConfig cfg_;
  Matrix a_, b_, sm_;
};

}  // namespace spinomech::qdyn

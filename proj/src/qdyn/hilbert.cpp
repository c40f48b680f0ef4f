#include "spinomech/qdyn/hilbert.hpp"

#include <cmath>

namespace spinomech::qdyn {

namespace {

// Lowering operator on a single truncated mode, L|k> = sqrt(k)|k-1>.
Matrix mode_lower(int n) {
  Matrix l = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) l(k - 1, k) = std::sqrt(double(k));
  return l;
}

}  // namespace

HilbertSpace::HilbertSpace(HilbertConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  const int na = cfg_.n_a, nb = cfg_.n_b, ns = cfg_.spin_dim();
  const int d = dim();
  const Matrix la = mode_lower(na);
  const Matrix lb = mode_lower(nb);

  a_ = Matrix::Zero(d, d);
  b_ = Matrix::Zero(d, d);
  for (int ia = 0; ia < na; ++ia)
    for (int ib = 0; ib < nb; ++ib)
      for (int is = 0; is < ns; ++is) {
        const int col = index(ia, ib, is);
        if (ia > 0) a_(index(ia - 1, ib, is), col) = la(ia - 1, ia);
        if (ib > 0) b_(index(ia, ib - 1, is), col) = lb(ib - 1, ib);
      }

  if (cfg_.include_spin) {
    sm_ = Matrix::Zero(d, d);
    for (int ia = 0; ia < na; ++ia)
      for (int ib = 0; ib < nb; ++ib)
        sm_(index(ia, ib, 0), index(ia, ib, 1)) = 1.0;  // |down><up|
  }
}

const Matrix& HilbertSpace::spin_lower() const {
  if (!cfg_.include_spin)
    throw std::logic_error("HilbertSpace: spin operator requested without spin");
  return sm_;
}

Vector HilbertSpace::vacuum() const { return fock(0, 0, 0); }

Vector HilbertSpace::fock(int ia, int ib, int is) const {
  if (ia < 0 || ia >= cfg_.n_a || ib < 0 || ib >= cfg_.n_b || is < 0 ||
      is >= cfg_.spin_dim())
    throw std::out_of_range("HilbertSpace::fock: index out of range");
  Vector v = Vector::Zero(dim());
  v(index(ia, ib, is)) = 1.0;
  return v;
}

Eigen::VectorXd HilbertSpace::dagger_product_diagonal(const Matrix& c) {
  return (c.adjoint() * c).diagonal().real();
}

}  // namespace spinomech::qdyn

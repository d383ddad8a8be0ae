#include "gdec/rank4.hpp"

#include <cmath>
#include <stdexcept>

namespace gdec {

Rank4Tensor& Rank4Tensor::operator+=(const Rank4Tensor& o) {
  for (int i = 0; i < 81; ++i) components_[i] += o.components_[i];
  return *this;
}

Rank4Tensor& Rank4Tensor::operator*=(double s) {
  for (double& c : components_) c *= s;
  return *this;
}

Rank4Tensor operator-(const Rank4Tensor& a, const Rank4Tensor& b) {
  Rank4Tensor r;
  for (int i = 0; i < 81; ++i) r.components_[i] = a.components_[i] - b.components_[i];
  return r;
}

double Rank4Tensor::max_abs() const {
  double m = 0.0;
  for (double c : components_) m = std::max(m, std::abs(c));
  return m;
}

double Rank4Tensor::max_abs_diff(const Rank4Tensor& o) const {
  return (*this - o).max_abs();
}

double Rank4Tensor::quadratic_form(const SpatialVector& Xi,
                                   const SpatialVector& v) const {
  require_finite(Xi, "quadratic_form Xi");
  require_finite(v, "quadratic_form v");
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          s += at(i, j, k, l) * Xi[i] * v[j] * Xi[k] * v[l];
  return s;
}

SymMat3 Rank4Tensor::apply(const SymMat3& m) const {
  SymMat3 r;
  for (int p = 0; p < 6; ++p) {
    const int i = kSymPairs[p][0], j = kSymPairs[p][1];
    double s = 0.0;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) s += at(i, j, k, l) * m(k, l);
    r.component(p) = s;
  }
  return r;
}

std::array<double, 36> Rank4Tensor::symmetric_map() const {
  // Orthonormal basis: E_0..E_2 diagonal units, E_3..E_5 off-diagonal
  // symmetrized with 1/sqrt(2). M_ab = E_a : T(E_b).
  const double r2 = std::sqrt(0.5);
  std::array<double, 36> m{};
  for (int b = 0; b < 6; ++b) {
    SymMat3 Eb;
    Eb.component(b) = (b < 3) ? 1.0 : r2;
    const SymMat3 TEb = apply(Eb);
    for (int a = 0; a < 6; ++a) {
      const double wa = (a < 3) ? 1.0 : r2;
      SymMat3 Ea;
      Ea.component(a) = wa;
      m[a * 6 + b] = Ea.ddot(TEb);
    }
  }
  return m;
}

std::array<double, 36> Rank4Tensor::packed_matrix() const {
  std::array<double, 36> m{};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      m[a * 6 + b] = at(kSymPairs[a][0], kSymPairs[a][1],
                        kSymPairs[b][0], kSymPairs[b][1]);
  return m;
}

int projector_component(int i, int j, int k, int l) {
  const auto check = [](int n) {
    if (n < 1 || n > 3)
      throw std::domain_error("projector_component: index outside {1,2,3}");
  };
  check(i); check(j); check(k); check(l);
  const int dik = (i == k), djl = (j == l);
  const int dil = (i == l), djk = (j == k);
  const int dij = (i == j), dkl = (k == l);
  return 3 * (dik * djl + dil * djk) - 2 * dij * dkl;
}

const Rank4Tensor& isotropic_projector() {
  static const Rank4Tensor p = [] {
    Rank4Tensor t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            t.at(i, j, k, l) =
                projector_component(i + 1, j + 1, k + 1, l + 1);
    return t;
  }();
  return p;
}

double geometric_factor(const SpatialVector& Xi, const SpatialVector& v) {
  require_finite(Xi, "geometric_factor Xi");
  require_finite(v, "geometric_factor v");
  // Closed form of the index sum; the dense contraction is kept as a
  // test oracle.
  const double xv = Xi.dot(v);
  return 3.0 * Xi.norm2() * v.norm2() + xv * xv;
}

}  // namespace gdec

// Copyright 2026 The cvrepeater Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvrep/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "cvrep/error.hpp"

namespace cvrep {
namespace {

// Below this, ab - c^2 is treated as a rounding artefact of a zero determinant.
constexpr double kDegeneracyTolerance = 1e-12;

double clamp_to_vacuum(double nu) {
  return (nu < 1.0 && nu >= 1.0 - kPhysicalityTolerance) ? 1.0 : nu;
}

std::string triplet_str(double a, double b, double c) {
  std::ostringstream os;
  os.precision(17);
  os << "(a=" << a << ", b=" << b << ", c=" << c << ")";
  return os.str();
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

void check_symmetric(const Eigen::MatrixXd& m) {
  const double scale = std::max(1.0, max_abs(m));
  if (!m.allFinite()) throw DomainError("covariance matrix has non-finite entries");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("covariance matrix is not symmetric");
  }
}

}  // namespace

TwoModeCM::TwoModeCM(double a, double b, double c)
    : TwoModeCM(a, b, c, std::fma(a, b, -c * c), true) {}

TwoModeCM::TwoModeCM(double a, double b, double c, double det_root, bool)
    : a_(a), b_(b), c_(c), det_root_(det_root) {
  validate();
}

TwoModeCM TwoModeCM::with_det_root(double a, double b, double c, double det_root) {
  return TwoModeCM(a, b, c, det_root, true);
}

void TwoModeCM::validate() const {
  if (!std::isfinite(a_) || !std::isfinite(b_) || !std::isfinite(c_) ||
      !std::isfinite(det_root_)) {
    throw DomainError("non-finite covariance entry " + triplet_str(a_, b_, c_));
  }
  if (a_ < 1.0 - kPhysicalityTolerance || b_ < 1.0 - kPhysicalityTolerance) {
    throw UnphysicalStateError("sub-vacuum variance " + triplet_str(a_, b_, c_));
  }
  if (det_root_ < -kDegeneracyTolerance) {
    throw UnphysicalStateError("c^2 > ab: matrix not positive " + triplet_str(a_, b_, c_));
  }
  if (symplectic_eigenvalues(*this).nu_minus < 1.0 - kPhysicalityTolerance) {
    throw UnphysicalStateError("symplectic eigenvalue below vacuum " +
                               triplet_str(a_, b_, c_));
  }
}

Eigen::Matrix4d TwoModeCM::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = m(1, 1) = a_;
  m(2, 2) = m(3, 3) = b_;
  m(0, 2) = m(2, 0) = c_;
  m(1, 3) = m(3, 1) = -c_;
  return m;
}

TwoModeCM TwoModeCM::swapped_modes() const { return with_det_root(b_, a_, c_, det_root_); }

GeneralCM::GeneralCM(const Eigen::Matrix4d& mat) : m(mat) {
  check_symmetric(m);
  if (!is_physical(m)) throw UnphysicalStateError("two-mode CM violates the vacuum bound");
}

FourModeCM::FourModeCM(const Matrix& mat) : m(mat) {
  check_symmetric(m);
  if (!is_physical(m)) throw UnphysicalStateError("four-mode CM violates the vacuum bound");
}

TwoModeCM tmsv(double mu) {
  if (!(mu >= 1.0)) throw DomainError("sub-vacuum variance: tmsv requires mu >= 1");
  return TwoModeCM::with_det_root(mu, mu, std::sqrt((mu - 1.0) * (mu + 1.0)), 1.0);
}

SymplecticPair symplectic_eigenvalues(const TwoModeCM& v) {
  // D^2 - 4 det V = (a - b)^2 ((a - b)^2 + 4 (ab - c^2)), so the discriminant
  // goes negative only with the determinant.
  double det_root = v.det_root();
  if (det_root < -kDegeneracyTolerance) {
    throw DegeneracyError("negative symplectic discriminant " +
                          triplet_str(v.a(), v.b(), v.c()));
  }
  det_root = std::max(det_root, 0.0);
  const double gap = std::abs(v.a() - v.b());
  const double nu_plus = 0.5 * (gap + std::sqrt(gap * gap + 4.0 * det_root));
  const double nu_minus = nu_plus > 0.0 ? det_root / nu_plus : 0.0;
  return {clamp_to_vacuum(nu_minus), clamp_to_vacuum(nu_plus)};
}

Eigen::VectorXd symplectic_spectrum(const Eigen::MatrixXd& v) {
  const Eigen::Index dim = v.rows();
  if (dim != v.cols() || dim % 2 != 0) {
    throw DomainError("covariance matrix must be square with even dimension");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sym(v);
  if (sym.info() != Eigen::Success || sym.eigenvalues().minCoeff() <= 0.0) {
    throw DegeneracyError("covariance matrix is not positive definite");
  }
  const Eigen::MatrixXd root = sym.operatorSqrt();

  using Complex = std::complex<double>;
  Eigen::MatrixXcd i_omega = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; k += 2) {
    i_omega(k, k + 1) = Complex(0.0, 1.0);
    i_omega(k + 1, k) = Complex(0.0, -1.0);
  }
  const Eigen::MatrixXcd herm = root.cast<Complex>() * i_omega * root.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DegeneracyError("symplectic spectrum did not converge");
  // Eigenvalues come in +-nu pairs, sorted ascending; keep the positive half.
  return es.eigenvalues().tail(dim / 2);
}

bool is_physical(const Eigen::MatrixXd& v) {
  const double scale = std::max(1.0, max_abs(v));
  if (!v.allFinite() || (v - v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    return false;
  }
  try {
    return symplectic_spectrum(v).minCoeff() >= 1.0 - kPhysicalityTolerance;
  } catch (const DegeneracyError&) {
    return false;
  }
}

double entropy_h(double x) {
  if (!(x >= 1.0 - kPhysicalityTolerance)) {
    throw DomainError("entropy_h: argument below the vacuum value 1");
  }
  if (x <= 1.0) return 0.0;
  // p log2 p - m log2 m with p = m + 1, rearranged to avoid the cancellation
  // between two ~x log x terms at large x.
  const double m = 0.5 * (x - 1.0);
  const double p = m + 1.0;
  const double tail = m > 1e-300 ? m * std::log1p(1.0 / m) : 0.0;
  return std::log2(p) + tail / std::numbers::ln2;
}

double coherent_information(const TwoModeCM& v) {
  const auto [nu_minus, nu_plus] = symplectic_eigenvalues(v);
  return entropy_h(v.b()) - entropy_h(nu_minus) - entropy_h(nu_plus);
}

double reverse_coherent_information(const TwoModeCM& v) {
  const auto [nu_minus, nu_plus] = symplectic_eigenvalues(v);
  return entropy_h(v.a()) - entropy_h(nu_minus) - entropy_h(nu_plus);
}

TwoModeCM to_standard_form(const GeneralCM& v, double tol) {
  const Eigen::Matrix4d& m = v.m;
  const double a = 0.5 * (m(0, 0) + m(1, 1));
  const double b = 0.5 * (m(2, 2) + m(3, 3));
  const double c = 0.5 * (m(0, 2) - m(1, 3));
  Eigen::Matrix4d ref = Eigen::Matrix4d::Zero();
  ref(0, 0) = ref(1, 1) = a;
  ref(2, 2) = ref(3, 3) = b;
  ref(0, 2) = ref(2, 0) = c;
  ref(1, 3) = ref(3, 1) = -c;
  const double scale = std::max(1.0, max_abs(m));
  if ((m - ref).cwiseAbs().maxCoeff() > tol * scale) {
    throw DomainError("covariance matrix is not in standard form");
  }
  return TwoModeCM(a, b, c);
}

}  // namespace cvrep

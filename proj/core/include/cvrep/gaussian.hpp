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

// Two-mode Gaussian covariance matrices in shot-noise units (vacuum = 1),
// their symplectic spectra, and the entropic rate functionals built on them.
#pragma once

#include <Eigen/Core>

namespace cvrep {

// Symplectic eigenvalues in [1 - kPhysicalityTolerance, 1) are clamped to 1.
inline constexpr double kPhysicalityTolerance = 1e-9;

// Standard-form two-mode covariance matrix
//
//   V = [[a I, c Z], [c Z, b I]],   I = diag(1, 1), Z = diag(1, -1),
//
// with mode A the locally kept mode and mode B the transmitted one. Alongside
// the triplet the value carries ab - c^2 (= sqrt(det V)). Every operation in
// the library that produces a TwoModeCM knows this quantity in closed form, and
// using it instead of recomputing ab - c^2 keeps the symplectic spectrum exact
// for strongly squeezed states where the subtraction cancels catastrophically.
//
// Construction rejects sub-vacuum diagonals, non-positive matrices and states
// whose smaller symplectic eigenvalue falls below 1 - kPhysicalityTolerance.
class TwoModeCM {
 public:
  TwoModeCM(double a, double b, double c);

  // For producers that know ab - c^2 analytically.
  static TwoModeCM with_det_root(double a, double b, double c, double det_root);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  // ab - c^2, the square root of det V.
  double det_root() const noexcept { return det_root_; }

  // The 4x4 matrix in (x_A, p_A, x_B, p_B) ordering.
  Eigen::Matrix4d matrix() const;

  // (b, a, c): the same state with the roles of the two modes exchanged.
  TwoModeCM swapped_modes() const;

  friend bool operator==(const TwoModeCM&, const TwoModeCM&) = default;

 private:
  TwoModeCM(double a, double b, double c, double det_root, bool);
  void validate() const;

  double a_;
  double b_;
  double c_;
  double det_root_;
};

struct SymplecticPair {
  double nu_minus;
  double nu_plus;
};

// General (not necessarily standard-form) two-mode CM, (x_A, p_A, x_B, p_B).
struct GeneralCM {
  explicit GeneralCM(const Eigen::Matrix4d& m);
  Eigen::Matrix4d m;
};

// Four-mode CM, used as the input of a Bell-measurement relay.
struct FourModeCM {
  using Matrix = Eigen::Matrix<double, 8, 8>;
  explicit FourModeCM(const Matrix& m);
  Matrix m;
};

// Two-mode squeezed vacuum with quadrature variance mu: (mu, mu, sqrt(mu^2 - 1)).
TwoModeCM tmsv(double mu);

// Closed form for standard-form CMs:
//   nu+^2, nu-^2 = (D +- sqrt(D^2 - 4 det V)) / 2,  D = a^2 + b^2 - 2c^2,
// evaluated through nu+ - nu- = |a - b| and nu+ nu- = ab - c^2.
SymplecticPair symplectic_eigenvalues(const TwoModeCM& v);

// Symplectic spectrum of an arbitrary n-mode CM (ascending, one entry per
// mode), from the Hermitian form V^{1/2} (i Omega) V^{1/2}. Throws
// DegeneracyError if V is not positive definite.
Eigen::VectorXd symplectic_spectrum(const Eigen::MatrixXd& v);

// True when V is symmetric, positive definite, and every symplectic
// eigenvalue is >= 1 - kPhysicalityTolerance.
bool is_physical(const Eigen::MatrixXd& v);

// h(x) = (x+1)/2 log2((x+1)/2) - (x-1)/2 log2((x-1)/2), with h(1) = 0.
double entropy_h(double x);

// h(b) - h(nu-) - h(nu+): entropy of the received mode minus the joint entropy.
double coherent_information(const TwoModeCM& v);

// h(a) - h(nu-) - h(nu+): entropy of the kept mode minus the joint entropy.
double reverse_coherent_information(const TwoModeCM& v);

// Reads (a, b, c) off a standard-form GeneralCM. Throws DomainError when the
// matrix departs from [[aI, cZ], [cZ, bI]] by more than `tol` (relative to the
// largest entry).
TwoModeCM to_standard_form(const GeneralCM& v, double tol = 1e-9);

}  // namespace cvrep

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

#include "cvrep/chain.hpp"

#include <cmath>

#include <Eigen/LU>

#include "cvrep/error.hpp"

namespace cvrep {

void ChainSpec::validate() const {
  if (depth < 0 || depth > 62) throw DomainError("chain: depth must lie in [0, 62]");
  if (!(t_store >= 0.0)) throw DomainError("chain: storage time must be >= 0");
  mem.validate();
}

TwoModeCM bell_relay(const TwoModeCM& left, const TwoModeCM& right) {
  const double s = left.b() + right.a();
  if (!(s > 1e-12)) throw DegeneracyError("bell_relay: b1 + a2 must be positive");
  const double a = left.a() - left.c() * left.c() / s;
  const double b = right.b() - right.c() * right.c() / s;
  const double c = left.c() * right.c() / s;
  // a'b' - c'^2 = (a1 d2 + b2 d1) / s for d = ab - c^2 of each input.
  const double det_root = (left.a() * right.det_root() + right.b() * left.det_root()) / s;
  return TwoModeCM::with_det_root(a, b, c, det_root);
}

TwoModeCM swap_once(const TwoModeCM& v) {
  if (!(v.a() + v.b() > 1e-12)) throw DegeneracyError("swap_once: a + b must be positive");
  return bell_relay(v, v);
}

TwoModeCM chain_cm(const ChainSpec& spec) {
  spec.validate();
  TwoModeCM v = decohere(spec.link_cm, spec.t_store, spec.mem);
  for (int level = 0; level < spec.depth; ++level) v = swap_once(v);
  return v;
}

FourModeCM assemble_relay_input(const TwoModeCM& left, const TwoModeCM& right) {
  const Eigen::Matrix4d l = left.matrix();
  const Eigen::Matrix4d r = right.matrix();
  // Mode slots in the output: a1 -> 0, b2 -> 1, b1 -> 2, a2 -> 3.
  const int left_slot[2] = {0, 2};
  const int right_slot[2] = {3, 1};
  FourModeCM::Matrix m = FourModeCM::Matrix::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.block<2, 2>(2 * left_slot[i], 2 * left_slot[j]) = l.block<2, 2>(2 * i, 2 * j);
      m.block<2, 2>(2 * right_slot[i], 2 * right_slot[j]) = r.block<2, 2>(2 * i, 2 * j);
    }
  }
  return FourModeCM(m);
}

GeneralCM bell_relay_general(const FourModeCM& v) {
  using Mat2 = Eigen::Matrix2d;
  const auto& m = v.m;
  const Eigen::Matrix4d v_out = m.block<4, 4>(0, 0);
  const Eigen::Matrix<double, 4, 2> c1 = m.block<4, 2>(0, 4);
  const Eigen::Matrix<double, 4, 2> c2 = m.block<4, 2>(0, 6);
  const Mat2 b = m.block<2, 2>(4, 4);
  const Mat2 d = m.block<2, 2>(4, 6);
  const Mat2 a = m.block<2, 2>(6, 6);

  const Mat2 z = Eigen::Vector2d(1.0, -1.0).asDiagonal();
  const Mat2 upsilon = 0.5 * (z * b * z + a - z * d - d.transpose() * z);
  const double det = upsilon.determinant();
  if (std::abs(det) <= 1e-12) {
    throw DegeneracyError("bell_relay_general: singular measurement matrix");
  }

  Mat2 w[2];
  w[0] << 0.0, 1.0, 1.0, 0.0;
  w[1] << 0.0, 1.0, -1.0, 0.0;
  const Eigen::Matrix<double, 4, 2> c[2] = {c1, c2};
  Eigen::Matrix4d correction = Eigen::Matrix4d::Zero();
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      correction += c[j] * (w[j].transpose() * upsilon * w[k]) * c[k].transpose();
    }
  }
  Eigen::Matrix4d out = v_out - correction / (2.0 * det);
  // Symmetrise away rounding so the GeneralCM symmetry check sees an exact matrix.
  out = 0.5 * (out + out.transpose()).eval();
  return GeneralCM(out);
}

}  // namespace cvrep

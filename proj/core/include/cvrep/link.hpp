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

// Basic-link construction: a TMSV source, one mode sent through a thermal-loss
// channel and an ideal noiseless linear amplifier (NLA), described through the
// equivalent no-NLA parameters.
#pragma once

#include <optional>

#include "cvrep/gaussian.hpp"

namespace cvrep {

struct LinkSpec {
  double mu = 1.0;   // TMSV variance (snu), >= 1
  double eta = 1.0;  // channel transmittance, (0, 1]
  double xi = 0.0;   // channel excess noise (snu), >= 0
  double g = 1.0;    // NLA gain, >= 1
  std::optional<double> length_km;

  // Throws DomainError on the first violated field constraint.
  void validate() const;
};

struct EquivalentParams {
  double lambda_g = 0.0;
  double mu_g = 1.0;  // NaN when !valid
  double eta_g = 1.0;
  double xi_g = 0.0;
  bool valid = false;  // lambda_g < 1
};

// Effective (mu_g, eta_g, xi_g) such that the NLA-assisted link behaves as a
// bare thermal-loss link with those parameters:
//
//   lambda_g^2 = (mu-1)/(mu+1) * (2 - eta(g^2-1)(xi-2)) / (2 - eta(g^2-1) xi)
//   mu_g       = (1 + lambda_g^2) / (1 - lambda_g^2)
//   eta_g      = eta g^2 / (1 + eta g^2 [eta(g^2-1)(xi-2)xi/4 - xi + 1])
//   xi_g       = xi - eta(g^2-1)(xi-2) xi / 2
//
// g == 1 returns the bare link (mu, eta, xi) unchanged; the eta_g expression
// above does not reduce to eta there. lambda_g >= 1 is reported through
// `valid` rather than thrown. Throws SingularityError when a denominator is
// within 1e-12 of zero and InvalidParameterError when lambda_g^2 < 0.
EquivalentParams nla_equivalent(const LinkSpec& spec);

// (mu_g, eta_g mu_g + 1 - eta_g + xi_g, sqrt(eta_g (mu_g^2 - 1))).
// Throws PreconditionError if !eq.valid.
TwoModeCM basic_link_cm(const EquivalentParams& eq);

// 10^(-alpha L / 10) for fibre loss alpha in dB/km.
double transmittance_from_length(double length_km, double alpha_db_per_km);

// Largest gain in [g_lo, g_hi] for which nla_equivalent is valid (bisection;
// lambda_g is increasing in g). nullopt when g_lo itself is invalid.
std::optional<double> max_valid_gain(double mu, double eta, double xi, double g_lo,
                                     double g_hi);

}  // namespace cvrep

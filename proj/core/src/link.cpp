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

#include "cvrep/link.hpp"

#include <cmath>
#include <limits>

#include "cvrep/error.hpp"

namespace cvrep {
namespace {

constexpr double kSingularTolerance = 1e-12;

bool is_valid_gain(double mu, double eta, double xi, double g) {
  try {
    return nla_equivalent(LinkSpec{mu, eta, xi, g, std::nullopt}).valid;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

void LinkSpec::validate() const {
  if (!(mu >= 1.0)) throw DomainError("link: mu must be >= 1 (sub-vacuum variance)");
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("link: eta must lie in (0, 1]");
  if (!(xi >= 0.0)) throw DomainError("link: xi must be >= 0");
  if (!(g >= 1.0)) throw DomainError("link: NLA gain g must be >= 1");
  if (length_km && !(*length_km >= 0.0)) throw DomainError("link: length must be >= 0");
}

EquivalentParams nla_equivalent(const LinkSpec& spec) {
  spec.validate();
  const double mu = spec.mu, eta = spec.eta, xi = spec.xi, g = spec.g;
  const double squeeze_sq = (mu - 1.0) / (mu + 1.0);
  if (g == 1.0) {
    return {std::sqrt(squeeze_sq), mu, eta, xi, true};
  }

  const double k = eta * (g * g - 1.0);
  const double lambda_den = 2.0 - k * xi;
  if (std::abs(lambda_den) <= kSingularTolerance) {
    throw SingularityError("nla_equivalent: 2 - eta(g^2-1)xi vanishes");
  }
  const double eta_den = 1.0 + eta * g * g * (k * (xi - 2.0) * xi / 4.0 - xi + 1.0);
  if (std::abs(eta_den) <= kSingularTolerance) {
    throw SingularityError("nla_equivalent: 1 + eta g^2[eta(g^2-1)(xi-2)xi/4 - xi + 1] vanishes");
  }
  const double lambda_sq = squeeze_sq * (2.0 - k * (xi - 2.0)) / lambda_den;
  if (lambda_sq < 0.0) {
    throw InvalidParameterError("nla_equivalent: lambda_g^2 < 0 for these (eta, xi, g)");
  }

  EquivalentParams eq;
  eq.lambda_g = std::sqrt(lambda_sq);
  eq.valid = eq.lambda_g < 1.0;
  eq.mu_g = eq.valid ? (1.0 + lambda_sq) / (1.0 - lambda_sq)
                     : std::numeric_limits<double>::quiet_NaN();
  eq.eta_g = eta * g * g / eta_den;
  eq.xi_g = xi - k * (xi - 2.0) * xi / 2.0;
  return eq;
}

TwoModeCM basic_link_cm(const EquivalentParams& eq) {
  if (!eq.valid) {
    throw PreconditionError("lambda_g >= 1: equivalent description unreliable");
  }
  const double mu = eq.mu_g, eta = eq.eta_g, xi = eq.xi_g;
  if (!(eta >= 0.0)) throw DomainError("basic_link_cm: negative effective transmittance");
  const double a = mu;
  const double b = eta * mu + (1.0 - eta) + xi;
  const double c = std::sqrt(eta) * std::sqrt((mu - 1.0) * (mu + 1.0));
  return TwoModeCM::with_det_root(a, b, c, mu * (1.0 - eta + xi) + eta);
}

double transmittance_from_length(double length_km, double alpha_db_per_km) {
  if (!(length_km >= 0.0)) throw DomainError("link length must be >= 0");
  if (!(alpha_db_per_km > 0.0)) throw DomainError("fibre loss alpha must be > 0");
  return std::pow(10.0, -alpha_db_per_km * length_km / 10.0);
}

std::optional<double> max_valid_gain(double mu, double eta, double xi, double g_lo,
                                     double g_hi) {
  if (!(g_lo >= 1.0 && g_hi >= g_lo)) throw DomainError("max_valid_gain: need 1 <= g_lo <= g_hi");
  if (!is_valid_gain(mu, eta, xi, g_lo)) return std::nullopt;
  if (is_valid_gain(mu, eta, xi, g_hi)) return g_hi;
  double lo = g_lo, hi = g_hi;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (is_valid_gain(mu, eta, xi, mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace cvrep

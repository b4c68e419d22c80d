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

#include "cvrep/sweep.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "cvrep/chain.hpp"
#include "cvrep/error.hpp"
#include "cvrep/link.hpp"
#include "parallel.hpp"

namespace cvrep {
namespace {

// Capacities diverge at zero distance.
double benchmark_or_inf(double eta_total, long long links, bool plob) {
  if (eta_total == 1.0) return std::numeric_limits<double>::infinity();
  return plob ? plob_lossy(eta_total) : repeater_capacity(eta_total, links);
}

bool competes(const RateRecord& r) { return r.status == RateRecord::Status::kOk && r.valid; }

// Strictly better rate; exact ties go to the smaller g, then the smaller mu.
bool better(const RateRecord& r, const RateRecord& incumbent) {
  if (r.rate_weighted != incumbent.rate_weighted) return r.rate_weighted > incumbent.rate_weighted;
  if (r.g != incumbent.g) return r.g < incumbent.g;
  return r.mu < incumbent.mu;
}

template <typename T>
void require_nonempty(const std::vector<T>& v, const char* field) {
  if (v.empty()) throw DomainError(std::string("sweep grid: '") + field + "' must not be empty");
}

ScenarioPoint point_for(const SweepGrid& grid, double length, int depth, double mu, double g) {
  return ScenarioPoint{length, depth, mu, g, grid.xi, grid.alpha_db_per_km, grid.mem,
                       grid.c_speed_km_s};
}

}  // namespace

RateRecord evaluate_point(const ScenarioPoint& p) {
  RateRecord r;
  r.length_km = p.length_km;
  r.depth = p.depth;
  r.mu = p.mu;
  r.g = p.g;
  r.xi = p.xi;
  r.tau_c = p.mem.tau_c;
  r.xi_qm = p.mem.xi_qm;
  try {
    if (p.depth < 0 || p.depth > 62) throw DomainError("depth must lie in [0, 62]");
    r.links = 1LL << p.depth;
    const double link_km = p.length_km / static_cast<double>(r.links);
    const double eta_link = transmittance_from_length(link_km, p.alpha_db_per_km);
    r.eta_total = transmittance_from_length(p.length_km, p.alpha_db_per_km);

    const EquivalentParams eq = nla_equivalent(LinkSpec{p.mu, eta_link, p.xi, p.g, link_km});
    r.lambda_g = eq.lambda_g;
    r.valid = eq.valid;
    r.p_succ = nla_success_probability(p.g);
    r.t_store = heralding_time(TimingParams{link_km, p.c_speed_km_s, r.p_succ});
    r.plob = benchmark_or_inf(r.eta_total, r.links, true);
    r.repeater_cap = benchmark_or_inf(r.eta_total, r.links, false);
    if (!eq.valid) {
      r.status = RateRecord::Status::kInvalid;
      return r;
    }

    const TwoModeCM cm = chain_cm(ChainSpec{p.depth, basic_link_cm(eq), p.mem, r.t_store});
    r.a = cm.a();
    r.b = cm.b();
    r.c = cm.c();
    const SymplecticPair eig = symplectic_eigenvalues(cm);
    r.nu_minus = eig.nu_minus;
    r.nu_plus = eig.nu_plus;

    const RateFragment rate = achievable_rate(cm, p.g);
    r.ci = rate.ci;
    r.rci = rate.rci;
    r.lower_bound = rate.lower_bound;
    r.rate_weighted = rate.rate_weighted;
    r.rate_clamped = rate.rate_clamped;
  } catch (const Error& e) {
    r.status = RateRecord::Status::kError;
    r.error = e.what();
  }
  return r;
}

void SweepGrid::validate() const {
  require_nonempty(distances_km, "distances");
  require_nonempty(depths, "depths");
  require_nonempty(gains, "gains");
  require_nonempty(mus, "mus");
  for (double d : distances_km) {
    if (!(d >= 0.0) || std::isinf(d)) throw DomainError("sweep grid: distances must be finite and >= 0");
  }
  for (int n : depths) {
    if (n < 0 || n > 62) throw DomainError("sweep grid: depths must lie in [0, 62]");
  }
  for (double g : gains) {
    if (!(g >= 1.0) || std::isinf(g)) throw DomainError("sweep grid: gains must be finite and >= 1");
  }
  for (double mu : mus) {
    if (!(mu >= 1.0) || std::isinf(mu)) throw DomainError("sweep grid: mus must be finite and >= 1");
  }
  if (!(xi >= 0.0) || std::isinf(xi)) throw DomainError("sweep grid: xi must be >= 0");
  if (!(alpha_db_per_km > 0.0)) throw DomainError("sweep grid: alpha must be > 0");
  if (!(c_speed_km_s > 0.0)) throw DomainError("sweep grid: c_speed must be > 0");
  mem.validate();
}

std::vector<RateRecord> run_sweep(const SweepGrid& grid, int threads) {
  grid.validate();
  std::vector<ScenarioPoint> points;
  points.reserve(grid.size());
  for (double length : grid.distances_km)
    for (int depth : grid.depths)
      for (double mu : grid.mus)
        for (double g : grid.gains) points.push_back(point_for(grid, length, depth, mu, g));

  std::vector<RateRecord> out(points.size());
  detail::parallel_for(points.size(), threads, [&](std::size_t i) { out[i] = evaluate_point(points[i]); });
  return out;
}

std::vector<RateRecord> run_memory_sweep(const SweepGrid& grid, std::span<const double> taus_s,
                                         int threads) {
  grid.validate();
  if (taus_s.empty()) throw DomainError("memory sweep: coherence-time list must not be empty");
  for (double tau : taus_s) {
    if (!(tau > 0.0)) throw DomainError("memory sweep: coherence times must be > 0");
  }
  std::vector<ScenarioPoint> points;
  points.reserve(grid.size() * taus_s.size());
  for (double length : grid.distances_km)
    for (int depth : grid.depths)
      for (double mu : grid.mus)
        for (double g : grid.gains)
          for (double tau : taus_s) {
            ScenarioPoint p = point_for(grid, length, depth, mu, g);
            p.mem.tau_c = tau;
            points.push_back(p);
          }

  std::vector<RateRecord> out(points.size());
  detail::parallel_for(points.size(), threads, [&](std::size_t i) { out[i] = evaluate_point(points[i]); });
  return out;
}

std::vector<RateRecord> best_per_coherence_time(std::span<const RateRecord> records) {
  std::map<std::tuple<double, int, double>, std::size_t> slot;
  std::vector<RateRecord> best;
  for (const RateRecord& r : records) {
    if (!competes(r)) continue;
    const auto key = std::make_tuple(r.length_km, r.depth, r.tau_c);
    const auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(key, best.size());
      best.push_back(r);
    } else if (better(r, best[it->second])) {
      best[it->second] = r;
    }
  }
  return best;
}

std::vector<double> linear_space(double lo, double hi, std::size_t count) {
  if (count == 0) throw DomainError("linear_space: count must be >= 1");
  std::vector<double> v(count, lo);
  if (count == 1) return v;
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 1; i + 1 < count; ++i) v[i] = lo + step * static_cast<double>(i);
  v.back() = hi;
  return v;
}

std::vector<double> log_space(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi > 0.0)) throw DomainError("log_space: bounds must be > 0");
  std::vector<double> v = linear_space(std::log(lo), std::log(hi), count);
  for (double& x : v) x = std::exp(x);
  v.front() = lo;
  if (count > 1) v.back() = hi;
  return v;
}

void OptimizerBounds::validate() const {
  if (!(mu_min >= 1.0 && mu_max >= mu_min)) throw DomainError("optimizer: need 1 <= mu_min <= mu_max");
  if (!(mu_step > 0.0)) throw DomainError("optimizer: mu_step must be > 0");
  if (!(g_min >= 1.0 && g_max >= g_min) || std::isinf(g_max)) {
    throw DomainError("optimizer: need 1 <= g_min <= g_max < inf");
  }
  if (g_points < 1) throw DomainError("optimizer: g_points must be >= 1");
  if (refine_rounds < 0) throw DomainError("optimizer: refine_rounds must be >= 0");
  if (!(shrink > 1.0)) throw DomainError("optimizer: shrink must be > 1");
}

std::vector<double> OptimizerBounds::coarse_mus() const {
  std::vector<double> mus;
  for (int k = 0;; ++k) {
    const double mu = mu_min + mu_step * k;
    if (mu > mu_max + 1e-9 * mu_step) break;
    mus.push_back(std::min(mu, mu_max));
  }
  return mus;
}

std::vector<double> OptimizerBounds::coarse_gains() const {
  return log_space(g_min, g_max, static_cast<std::size_t>(g_points));
}

OptimumPoint optimize_point(const OptimizeRequest& req, int threads) {
  const OptimizerBounds& bnd = req.bounds;
  bnd.validate();
  req.mem.validate();
  if (req.depth < 0 || req.depth > 62) throw DomainError("optimizer: depth must lie in [0, 62]");

  OptimumPoint out;
  const double link_km = req.length_km / static_cast<double>(1LL << req.depth);
  const double eta_link = transmittance_from_length(link_km, req.alpha_db_per_km);

  auto evaluate_all = [&](const std::vector<std::pair<double, double>>& mu_g) {
    std::vector<RateRecord> recs(mu_g.size());
    detail::parallel_for(mu_g.size(), threads, [&](std::size_t i) {
      recs[i] = evaluate_point(ScenarioPoint{req.length_km, req.depth, mu_g[i].first,
                                             mu_g[i].second, req.xi, req.alpha_db_per_km, req.mem,
                                             req.c_speed_km_s});
    });
    for (const RateRecord& r : recs) {
      out.evaluated.push_back(r);
      if (competes(r) && (!out.found || better(r, out.best))) {
        out.best = r;
        out.found = true;
      }
    }
  };

  const std::vector<double> mus = bnd.coarse_mus();
  const std::vector<double> gains = bnd.coarse_gains();
  std::vector<std::pair<double, double>> coarse;
  for (double mu : mus) {
    for (double g : gains) coarse.emplace_back(mu, g);
    out.boundary.push_back({mu, max_valid_gain(mu, eta_link, req.xi, bnd.g_min, bnd.g_max)});
    // The optimum usually sits on the lambda_g = 1 edge, between grid gains.
    if (out.boundary.back().g_max) coarse.emplace_back(mu, *out.boundary.back().g_max);
  }
  evaluate_all(coarse);
  if (!out.found) return out;
  out.coarse_rate = out.best.rate_weighted;

  double mu_spacing = bnd.mu_step;
  double log_g_spacing =
      bnd.g_points > 1 ? std::log(bnd.g_max / bnd.g_min) / (bnd.g_points - 1) : 0.0;
  const int reach = static_cast<int>(std::lround(bnd.shrink));
  for (int round = 0; round < bnd.refine_rounds; ++round) {
    mu_spacing /= bnd.shrink;
    log_g_spacing /= bnd.shrink;
    const double mu_c = out.best.mu;
    const double log_g_c = std::log(out.best.g);
    std::vector<std::pair<double, double>> local;
    for (int i = -reach; i <= reach; ++i) {
      const double mu = mu_c + i * mu_spacing;
      if (mu < bnd.mu_min || mu > bnd.mu_max) continue;
      if (const auto edge = max_valid_gain(mu, eta_link, req.xi, bnd.g_min, bnd.g_max)) {
        local.emplace_back(mu, *edge);
      }
      for (int j = -reach; j <= reach; ++j) {
        if (i == 0 && j == 0) continue;
        const double g = std::exp(log_g_c + j * log_g_spacing);
        if (g < bnd.g_min || g > bnd.g_max) continue;
        local.emplace_back(mu, g);
      }
    }
    evaluate_all(local);
  }

  out.g_opt = out.best.g;
  out.mu_opt = out.best.mu;
  out.rate_opt = out.best.rate_weighted;
  return out;
}

}  // namespace cvrep

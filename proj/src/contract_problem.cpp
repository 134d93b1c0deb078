#include "owm/contract_problem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace owm {

Bounds DecisionBounds::to_bounds() const {
  return {{threshold_us_min, threshold_ld_min, cap_fraction_min, technicians_min},
          {threshold_us_max, threshold_ld_max, cap_fraction_max, technicians_max}};
}

int DecisionVector::technicians_rounded() const { return static_cast<int>(std::floor(technicians + 0.5)); }

DecisionVector DecisionVector::from_genes(const Genes& g) {
  if (g.size() != 4) throw std::invalid_argument("a contract decision has exactly 4 genes");
  return {g[0], g[1], g[2], g[3]};
}

bool DecisionVector::within(const DecisionBounds& b) const {
  return threshold_us >= b.threshold_us_min && threshold_us <= b.threshold_us_max &&
         threshold_ld >= b.threshold_ld_min && threshold_ld <= b.threshold_ld_max &&
         cap_fraction >= b.cap_fraction_min && cap_fraction <= b.cap_fraction_max &&
         technicians >= b.technicians_min && technicians <= b.technicians_max;
}

ContractTerms apply_decision(const ContractTerms& base, const DecisionVector& d) {
  ContractTerms c = base;
  c.technicians = d.technicians_rounded();
  c.threshold_us = d.threshold_us;
  c.threshold_ld = d.threshold_ld;
  c.cap_fraction = d.cap_fraction;
  return c;
}

ObjectivePoint objectives_of(const ScenarioStats& stats, const ScaleContext& context) {
  const double owner = std::clamp(context.scale_owner(stats.owner_profit.mean), 0.0, 1.0);
  const double contractor = std::clamp(context.scale_contractor(stats.contractor_profit.mean), 0.0, 1.0);
  return {std::abs(contractor - owner), -(stats.contractor_profit.mean + stats.owner_profit.mean)};
}

namespace {
std::vector<double> linspace(double lo, double hi, int points) {
  if (points <= 1 || hi <= lo) return {lo};
  std::vector<double> v;
  for (int i = 0; i < points; ++i) v.push_back(lo + (hi - lo) * i / (points - 1));
  return v;
}
}  // namespace

ScaleContext pre_sweep_context(const Bundle& bundle, const DecisionBounds& b, const ScenarioCache& cache, int points,
                               unsigned threads) {
  // technicians drive profits far more than the contract terms; sample them finer
  const int q_points = std::max(points, static_cast<int>(std::lround((b.technicians_max - b.technicians_min) / 5.0)) + 1);
  std::vector<SweepAxis> axes{
      {AxisKind::technicians, linspace(b.technicians_min, b.technicians_max, q_points)},
      {AxisKind::threshold_ld, linspace(b.threshold_ld_min, b.threshold_ld_max, points)},
      {AxisKind::cap_fraction, linspace(b.cap_fraction_min, b.cap_fraction_max, points)},
      {AxisKind::threshold_us, linspace(b.threshold_us_min, b.threshold_us_max, points)},
  };
  return sweep(bundle, axes, cache, threads).context;
}

OptimizeResult optimize_contract(const Bundle& bundle, const OptimizeOptions& options, std::vector<Genes> initial) {
  OptimizeResult result;
  const ScenarioCache cache(bundle, options.eval_samples, options.threads);
  result.context = pre_sweep_context(bundle, options.bounds, cache, options.context_points, options.threads);

  const BatchEvaluator evaluate = [&](std::span<const Genes> batch) {
    std::vector<ObjectivePoint> out;
    out.reserve(batch.size());
    for (const Genes& g : batch) {
      const ContractTerms contract = apply_decision(bundle.contract, DecisionVector::from_genes(g));
      out.push_back(objectives_of(run_scenario(bundle, contract, cache, options.threads), result.context));
    }
    return out;
  };
  result.ga = run_moga(options.bounds.to_bounds(), evaluate, options.ga, bundle.sim.master_seed, std::move(initial));

  std::vector<std::uint64_t> fresh(options.final_samples);
  std::iota(fresh.begin(), fresh.end(), kFinalEvaluationOffset);
  const ScenarioCache final_cache(bundle, std::move(fresh), options.threads);

  std::vector<ParetoSolution> candidates;
  for (const Individual& ind : result.ga.front) {
    ParetoSolution s;
    s.decision = DecisionVector::from_genes(ind.genes);
    s.stats = run_scenario(bundle, apply_decision(bundle.contract, s.decision), final_cache, options.threads);
    s.objectives = objectives_of(s.stats, result.context);
    candidates.push_back(std::move(s));
  }
  // Total profit depends on Q alone (payments between the parties cancel), so
  // candidates sharing a rounded Q tie on obj2 up to summation noise. Compare
  // with a relative tolerance so that noise cannot keep a worse contract, and
  // drop repeated effective contracts.
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); };
  auto dominates_tol = [&](const ObjectivePoint& p, const ObjectivePoint& q) {
    const bool le1 = p.obj1 <= q.obj1 || close(p.obj1, q.obj1);
    const bool le2 = p.obj2 <= q.obj2 || close(p.obj2, q.obj2);
    const bool lt = (p.obj1 < q.obj1 && !close(p.obj1, q.obj1)) || (p.obj2 < q.obj2 && !close(p.obj2, q.obj2));
    return le1 && le2 && lt;
  };
  std::vector<ContractTerms> contracts;
  for (const ParetoSolution& s : candidates) contracts.push_back(apply_decision(bundle.contract, s.decision));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < candidates.size() && keep; ++j) {
      if (j == i) continue;
      if (dominates_tol(candidates[j].objectives, candidates[i].objectives)) keep = false;
      if (j < i && contracts[j] == contracts[i]) keep = false;
    }
    if (keep) result.pareto.push_back(candidates[i]);
  }
  std::vector<ObjectivePoint> kept;
  for (const ParetoSolution& s : result.pareto) kept.push_back(s.objectives);
  result.compromise = kept.empty() ? 0 : compromise_index(kept);
  return result;
}

}  // namespace owm

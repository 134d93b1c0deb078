#include "owm/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "owm/rng.hpp"

namespace owm {

bool dominates(const ObjectivePoint& p, const ObjectivePoint& q) {
  return p.obj1 <= q.obj1 && p.obj2 <= q.obj2 && (p.obj1 < q.obj1 || p.obj2 < q.obj2);
}

std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const ObjectivePoint> points) {
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> domination_count(n, 0);
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(points[i], points[j])) {
        dominated_by[i].push_back(j);
        ++domination_count[j];
      } else if (dominates(points[j], points[i])) {
        dominated_by[j].push_back(i);
        ++domination_count[i];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (domination_count[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated_by[i]) {
        if (--domination_count[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectivePoint> points, std::span<const std::size_t> front) {
  const std::size_t m = front.size();
  std::vector<double> distance(m, 0.0);
  if (m <= 2) {
    std::fill(distance.begin(), distance.end(), std::numeric_limits<double>::infinity());
    return distance;
  }
  for (double ObjectivePoint::*field : {&ObjectivePoint::obj1, &ObjectivePoint::obj2}) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[front[a]].*field < points[front[b]].*field; });
    const double lo = points[front[order.front()]].*field;
    const double hi = points[front[order.back()]].*field;
    distance[order.front()] = std::numeric_limits<double>::infinity();
    distance[order.back()] = std::numeric_limits<double>::infinity();
    if (hi <= lo) continue;
    for (std::size_t k = 1; k + 1 < m; ++k) {
      distance[order[k]] += (points[front[order[k + 1]]].*field - points[front[order[k - 1]]].*field) / (hi - lo);
    }
  }
  return distance;
}

double hypervolume(std::span<const ObjectivePoint> points, const ObjectivePoint& reference) {
  std::vector<ObjectivePoint> inside;
  for (const ObjectivePoint& p : points) {
    if (p.obj1 < reference.obj1 && p.obj2 < reference.obj2) inside.push_back(p);
  }
  std::sort(inside.begin(), inside.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
    return a.obj1 < b.obj1 || (a.obj1 == b.obj1 && a.obj2 < b.obj2);
  });
  double volume = 0.0;
  double ceiling = reference.obj2;
  for (const ObjectivePoint& p : inside) {
    if (p.obj2 >= ceiling) continue;
    volume += (reference.obj1 - p.obj1) * (ceiling - p.obj2);
    ceiling = p.obj2;
  }
  return volume;
}

std::size_t compromise_index(std::span<const ObjectivePoint> points) {
  if (points.empty()) throw std::invalid_argument("compromise of an empty Pareto set");
  double lo1 = points[0].obj1, hi1 = lo1, lo2 = points[0].obj2, hi2 = lo2;
  for (const ObjectivePoint& p : points) {
    lo1 = std::min(lo1, p.obj1);
    hi1 = std::max(hi1, p.obj1);
    lo2 = std::min(lo2, p.obj2);
    hi2 = std::max(hi2, p.obj2);
  }
  auto norm = [](double v, double lo, double hi) { return hi > lo ? (v - lo) / (hi - lo) : 0.0; };
  std::size_t best = 0;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = std::hypot(norm(points[i].obj1, lo1, hi1), norm(points[i].obj2, lo2, hi2));
    if (d < best_distance || (d == best_distance && points[i].obj1 < points[best].obj1)) {
      best = i;
      best_distance = d;
    }
  }
  return best;
}

void validate(const GAParams& p) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("GA parameters: " + what); };
  if (p.population < 4 || p.population % 2 != 0) fail("population must be even and >= 4");
  if (!(p.crossover_fraction > 0 && p.crossover_fraction < 1)) fail("crossover_fraction must be in (0, 1)");
  if (!(p.elite_fraction >= 0 && p.elite_fraction < 1)) fail("elite_fraction must be in [0, 1)");
  if (p.max_generations < 1) fail("max_generations must be >= 1");
  if (p.stall_generations < 1) fail("stall_generations must be >= 1");
  if (!(p.tolerance >= 0)) fail("tolerance must be >= 0");
}

namespace {

void assign_rank_and_crowding(std::vector<Individual>& pop) {
  std::vector<ObjectivePoint> objs;
  objs.reserve(pop.size());
  for (const Individual& ind : pop) objs.push_back(ind.objectives);
  const auto fronts = non_dominated_sort(objs);
  for (std::size_t r = 0; r < fronts.size(); ++r) {
    const auto crowd = crowding_distance(objs, fronts[r]);
    for (std::size_t k = 0; k < fronts[r].size(); ++k) {
      pop[fronts[r][k]].rank = r;
      pop[fronts[r][k]].crowding = crowd[k];
    }
  }
}

bool better(const Individual& a, const Individual& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.crowding > b.crowding;
}

std::vector<ObjectivePoint> front_objectives(const std::vector<Individual>& pop) {
  std::vector<ObjectivePoint> out;
  for (const Individual& ind : pop) {
    if (ind.rank == 0) out.push_back(ind.objectives);
  }
  return out;
}

/// Survivors of a merged pool: whole fronts first, then the least crowded
/// members of the front that overflows.
std::vector<Individual> environmental_selection(std::vector<Individual> pool, std::size_t size) {
  std::vector<ObjectivePoint> objs;
  for (const Individual& ind : pool) objs.push_back(ind.objectives);
  const auto fronts = non_dominated_sort(objs);
  std::vector<Individual> next;
  next.reserve(size);
  for (const auto& front : fronts) {
    if (next.size() >= size) break;
    std::vector<std::size_t> members(front.begin(), front.end());
    if (next.size() + members.size() > size) {
      const auto crowd = crowding_distance(objs, front);
      std::vector<std::size_t> order(members.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return crowd[a] > crowd[b]; });
      std::vector<std::size_t> kept;
      for (std::size_t k = 0; k < size - next.size(); ++k) kept.push_back(members[order[k]]);
      std::sort(kept.begin(), kept.end());
      members = std::move(kept);
    }
    for (std::size_t i : members) next.push_back(pool[i]);
  }
  assign_rank_and_crowding(next);
  return next;
}

std::size_t tournament(const std::vector<Individual>& pop, RandomStream& rng) {
  const std::size_t a = rng.index(pop.size());
  const std::size_t b = rng.index(pop.size());
  if (better(pop[a], pop[b])) return a;
  if (better(pop[b], pop[a])) return b;
  return std::min(a, b);
}

/// Simulated binary crossover, bounded form; returns the first child.
Genes sbx(const Genes& p1, const Genes& p2, const Bounds& bounds, double eta, RandomStream& rng) {
  Genes child = p1;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (rng.uniform() > 0.5) continue;
    const double lo = bounds.lower[i], hi = bounds.upper[i];
    double x1 = std::min(p1[i], p2[i]);
    double x2 = std::max(p1[i], p2[i]);
    if (x2 - x1 < 1e-14 || hi <= lo) continue;
    const double u = rng.uniform();
    auto betaq = [&](double beta) {
      const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
      if (u <= 1.0 / alpha) return std::pow(u * alpha, 1.0 / (eta + 1.0));
      return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
    };
    const double c1 = 0.5 * ((x1 + x2) - betaq(1.0 + 2.0 * (x1 - lo) / (x2 - x1)) * (x2 - x1));
    const double c2 = 0.5 * ((x1 + x2) + betaq(1.0 + 2.0 * (hi - x2) / (x2 - x1)) * (x2 - x1));
    const double pick = rng.uniform() < 0.5 ? c1 : c2;
    child[i] = std::clamp(pick, lo, hi);
  }
  return child;
}

/// Bounded polynomial mutation of at least one gene.
void polynomial_mutation(Genes& genes, const Bounds& bounds, double eta, RandomStream& rng) {
  const std::size_t n = genes.size();
  const double rate = 1.0 / static_cast<double>(n);
  std::vector<bool> hit(n);
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    hit[i] = rng.uniform() < rate;
    any = any || hit[i];
  }
  if (!any) hit[rng.index(n)] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!hit[i]) continue;
    const double lo = bounds.lower[i], hi = bounds.upper[i];
    if (hi <= lo) continue;
    const double x = genes[i];
    const double d1 = (x - lo) / (hi - lo);
    const double d2 = (hi - x) / (hi - lo);
    const double u = rng.uniform();
    const double power = 1.0 / (eta + 1.0);
    double dq;
    if (u < 0.5) {
      const double v = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
      dq = std::pow(v, power) - 1.0;
    } else {
      const double v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
      dq = 1.0 - std::pow(v, power);
    }
    genes[i] = std::clamp(x + dq * (hi - lo), lo, hi);
  }
}

ObjectivePoint reference_from(const std::vector<Individual>& pop) {
  ObjectivePoint lo = pop.front().objectives, hi = lo;
  for (const Individual& ind : pop) {
    lo.obj1 = std::min(lo.obj1, ind.objectives.obj1);
    lo.obj2 = std::min(lo.obj2, ind.objectives.obj2);
    hi.obj1 = std::max(hi.obj1, ind.objectives.obj1);
    hi.obj2 = std::max(hi.obj2, ind.objectives.obj2);
  }
  auto pad = [](double l, double h) {
    const double span = h - l;
    return h + (span > 0 ? 0.1 * span : std::max(1e-9, 1e-6 * std::abs(h)));
  };
  return {pad(lo.obj1, hi.obj1), pad(lo.obj2, hi.obj2)};
}

void evaluate_into(std::vector<Individual>& inds, const BatchEvaluator& evaluate) {
  std::vector<Genes> batch;
  batch.reserve(inds.size());
  for (const Individual& ind : inds) batch.push_back(ind.genes);
  const auto objs = evaluate(batch);
  if (objs.size() != inds.size()) throw std::runtime_error("evaluator returned the wrong number of points");
  for (std::size_t i = 0; i < inds.size(); ++i) inds[i].objectives = objs[i];
}

}  // namespace

GAResult run_moga(const Bounds& bounds, const BatchEvaluator& evaluate, const GAParams& params, std::uint64_t seed,
                  std::vector<Genes> initial) {
  validate(params);
  const std::size_t n = bounds.size();
  if (n == 0 || bounds.upper.size() != n) throw std::invalid_argument("bounds must be non-empty and consistent");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(bounds.lower[i] <= bounds.upper[i])) throw std::invalid_argument(fmt::format("gene {} has lower > upper", i));
  }

  RandomStream rng(seed, 0, StreamPurpose::optimizer);
  const std::size_t size = params.population;

  std::vector<Individual> pop(size);
  for (std::size_t k = 0; k < size; ++k) {
    if (k < initial.size()) {
      if (initial[k].size() != n) throw std::invalid_argument("initial individual has the wrong gene count");
      pop[k].genes = initial[k];
      for (std::size_t i = 0; i < n; ++i) pop[k].genes[i] = std::clamp(pop[k].genes[i], bounds.lower[i], bounds.upper[i]);
    } else {
      pop[k].genes.resize(n);
      for (std::size_t i = 0; i < n; ++i) pop[k].genes[i] = rng.uniform(bounds.lower[i], bounds.upper[i]);
    }
  }
  evaluate_into(pop, evaluate);
  assign_rank_and_crowding(pop);

  GAResult result;
  result.reference = reference_from(pop);
  std::size_t evaluations = size;
  auto log_generation = [&](int g) {
    const auto front = front_objectives(pop);
    result.log.push_back({g, hypervolume(front, result.reference), front.size(), evaluations});
  };
  log_generation(1);
  result.stop_reason = "max_generations";

  const std::size_t elites = static_cast<std::size_t>(std::lround(params.elite_fraction * static_cast<double>(size)));
  const std::size_t children = size - elites;
  const std::size_t crossover_children =
      static_cast<std::size_t>(std::lround(params.crossover_fraction * static_cast<double>(children)));

  int generation = 1;
  while (generation < params.max_generations) {
    ++generation;
    const double progress = static_cast<double>(generation) / params.max_generations;
    const double eta_m = params.mutation_eta_start + (params.mutation_eta_end - params.mutation_eta_start) * progress;

    std::vector<Individual> offspring(children);
    for (std::size_t k = 0; k < children; ++k) {
      if (k < crossover_children) {
        const Individual& a = pop[tournament(pop, rng)];
        const Individual& b = pop[tournament(pop, rng)];
        offspring[k].genes = sbx(a.genes, b.genes, bounds, params.crossover_eta, rng);
      } else {
        offspring[k].genes = pop[tournament(pop, rng)].genes;
        if (params.mutation) polynomial_mutation(offspring[k].genes, bounds, eta_m, rng);
      }
    }
    evaluate_into(offspring, evaluate);
    evaluations += offspring.size();

    std::vector<Individual> pool = std::move(pop);
    pool.insert(pool.end(), offspring.begin(), offspring.end());
    pop = environmental_selection(std::move(pool), size);
    log_generation(generation);

    const int window = params.stall_generations;
    if (static_cast<int>(result.log.size()) > window) {
      const double now = result.log.back().hypervolume;
      const double then = result.log[result.log.size() - 1 - static_cast<std::size_t>(window)].hypervolume;
      const double scale = std::max(std::abs(then), 1e-300);
      const double average_change = std::abs(now - then) / scale / window;
      if (average_change < params.tolerance) {
        result.stop_reason = "stall";
        break;
      }
    }
  }
  result.generations = generation;

  for (const Individual& ind : pop) {
    if (ind.rank != 0) continue;
    const bool duplicate = std::any_of(result.front.begin(), result.front.end(),
                                       [&](const Individual& other) { return other.genes == ind.genes; });
    if (!duplicate) result.front.push_back(ind);
  }
  result.population = std::move(pop);
  return result;
}

}  // namespace owm

#ifndef YIOPT_BASELINES_HPP
#define YIOPT_BASELINES_HPP

// Classic comparison baselines: DE/rand/1/bin and global-best PSO with
// constant inertia. Both repair offspring by per-coordinate resampling.

#include <algorithm>

#include "yiopt/core.hpp"

namespace yiopt {

struct DeParams {
  int pop_size = 50;
  double f_weight = 0.5;
  double crossover_rate = 0.001;

  void validate() const {
    if (pop_size < 4) throw ParameterError("DeParams: pop_size must be >= 4");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
      throw ParameterError("DeParams: crossover_rate must lie in [0, 1]");
  }
};

struct PsoParams {
  int pop_size = 50;
  double w = 0.9;
  double c1 = 2.0;
  double c2 = 2.0;

  void validate() const {
    if (pop_size < 2) throw ParameterError("PsoParams: pop_size must be >= 2");
  }
};

struct Population {
  std::vector<Vector> members;
  Vector fitness;
};

/// v = x_r1 + F * (x_r2 - x_r3)
inline Vector de_mutant(ConstVectorView x_r1, ConstVectorView x_r2, ConstVectorView x_r3, double f_weight) {
  Vector v(x_r1.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = x_r1[j] + f_weight * (x_r2[j] - x_r3[j]);
  return v;
}

/// Binomial crossover; coordinate `forced` always comes from the mutant.
inline Vector de_crossover(ConstVectorView target, ConstVectorView mutant, double crossover_rate,
                           std::size_t forced, RngStream& rng) {
  Vector trial(target.begin(), target.end());
  for (std::size_t j = 0; j < trial.size(); ++j) {
    const bool take = rng.uniform() < crossover_rate;
    if (take || j == forced) trial[j] = mutant[j];
  }
  return trial;
}

inline Population init_population(int size, const SearchSpace& space, RunContext& ctx, RngStream& rng) {
  Population pop;
  for (int i = 0; i < size && !ctx.exhausted(); ++i) {
    pop.members.push_back(uniform_point(space, rng));
    pop.fitness.push_back(ctx.evaluate(pop.members.back()));
  }
  return pop;
}

/// One synchronous DE/rand/1/bin generation. A trial replaces its parent only
/// when strictly fitter. Stops early (keeping the partial generation) when the
/// budget runs out.
inline void de_generation(Population& pop, const DeParams& params, const SearchSpace& space, RunContext& ctx,
                          RngStream& rng) {
  params.validate();
  const auto n = static_cast<std::int64_t>(pop.members.size());
  if (n < 4) throw ParameterError("de_generation: population must hold >= 4 members");
  const auto dim = static_cast<std::int64_t>(space.dim());

  Population next = pop;
  for (std::int64_t i = 0; i < n && !ctx.exhausted(); ++i) {
    std::int64_t r1, r2, r3;
    do r1 = rng.uniform_int(0, n - 1);
    while (r1 == i);
    do r2 = rng.uniform_int(0, n - 1);
    while (r2 == i || r2 == r1);
    do r3 = rng.uniform_int(0, n - 1);
    while (r3 == i || r3 == r1 || r3 == r2);

    const Vector mutant = de_mutant(pop.members[r1], pop.members[r2], pop.members[r3], params.f_weight);
    const auto forced = static_cast<std::size_t>(rng.uniform_int(0, dim - 1));
    Vector trial = de_crossover(pop.members[i], mutant, params.crossover_rate, forced, rng);
    resample_out_of_bounds_inplace(trial, space, rng);
    const double f = ctx.evaluate(trial);
    if (f < pop.fitness[i]) {
      next.members[i] = std::move(trial);
      next.fitness[i] = f;
    }
  }
  pop = std::move(next);
}

inline RunRecord run_de(const Objective& objective, const SearchSpace& space, const DeParams& params,
                        std::int64_t t_max, std::uint64_t seed, std::string problem_id = {}) {
  params.validate();
  RngStream rng(seed);
  RunContext ctx(objective, t_max);
  Population pop = init_population(params.pop_size, space, ctx, rng);
  while (!ctx.exhausted()) de_generation(pop, params, space, ctx, rng);
  return ctx.finish(seed, "de", std::move(problem_id));
}

struct Swarm {
  std::vector<Vector> position;
  std::vector<Vector> velocity;
  std::vector<Vector> pbest;
  Vector pbest_fitness;
  Vector gbest;
  double gbest_fitness = 0.0;
};

inline Swarm init_swarm(int size, const SearchSpace& space, RunContext& ctx, RngStream& rng) {
  Swarm s;
  const Population pop = init_population(size, space, ctx, rng);
  s.position = pop.members;
  s.velocity.assign(pop.members.size(), Vector(space.dim(), 0.0));
  s.pbest = pop.members;
  s.pbest_fitness = pop.fitness;
  const auto best = std::min_element(pop.fitness.begin(), pop.fitness.end()) - pop.fitness.begin();
  s.gbest = pop.members[best];
  s.gbest_fitness = pop.fitness[best];
  return s;
}

/// v <- w v + c1 u1 (pbest - x) + c2 u2 (gbest - x);  x <- x + v.
inline void pso_velocity_update(Vector& v, ConstVectorView x, ConstVectorView pbest, ConstVectorView gbest,
                                const PsoParams& params, RngStream& rng) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    v[j] = params.w * v[j] + params.c1 * u1 * (pbest[j] - x[j]) + params.c2 * u2 * (gbest[j] - x[j]);
  }
}

/// One synchronous generation: every particle moves against the gbest of the
/// previous generation; gbest is refreshed afterwards.
inline void pso_generation(Swarm& s, const PsoParams& params, const SearchSpace& space, RunContext& ctx,
                           RngStream& rng) {
  std::size_t best_i = s.position.size();
  double best_f = s.gbest_fitness;
  for (std::size_t i = 0; i < s.position.size() && !ctx.exhausted(); ++i) {
    Vector& x = s.position[i];
    Vector& v = s.velocity[i];
    pso_velocity_update(v, x, s.pbest[i], s.gbest, params, rng);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += v[j];
    resample_out_of_bounds_inplace(x, space, rng);
    const double f = ctx.evaluate(x);
    if (f < s.pbest_fitness[i]) {
      s.pbest[i] = x;
      s.pbest_fitness[i] = f;
    }
    if (f < best_f) {
      best_f = f;
      best_i = i;
    }
  }
  if (best_i < s.position.size()) {
    s.gbest = s.pbest[best_i];
    s.gbest_fitness = best_f;
  }
}

inline RunRecord run_pso(const Objective& objective, const SearchSpace& space, const PsoParams& params,
                         std::int64_t t_max, std::uint64_t seed, std::string problem_id = {}) {
  params.validate();
  RngStream rng(seed);
  RunContext ctx(objective, t_max);
  Swarm swarm = init_swarm(params.pop_size, space, ctx, rng);
  while (!ctx.exhausted()) pso_generation(swarm, params, space, ctx, rng);
  return ctx.finish(seed, "pso", std::move(problem_id));
}

}  // namespace yiopt

#endif  // YIOPT_BASELINES_HPP

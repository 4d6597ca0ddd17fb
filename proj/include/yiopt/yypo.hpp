#ifndef YIOPT_YYPO_HPP
#define YIOPT_YYPO_HPP

// Yin-Yang pair optimization (YYPO) and its dynamic-archive variant (dYYPO).
//
// Both points live in the unit cube; the objective is evaluated on the
// denormalized point. P1 exploits with a shrinking radius, P2 explores with a
// growing one, and the pair is swapped whenever P2 becomes fitter.

#include <algorithm>
#include <cmath>

#include "yiopt/core.hpp"

namespace yiopt {

enum class YypoVariant { static_random_I, dynamic_ascending_I };

struct YypoParams {
  int i_min = 6;
  int i_max = 15;
  double alpha_ec = 5.0;
  YypoVariant variant = YypoVariant::static_random_I;

  void validate() const {
    if (i_min < 1) throw ParameterError("YypoParams: i_min must be >= 1");
    if (i_max < i_min) throw ParameterError("YypoParams: i_max must be >= i_min");
    if (!(alpha_ec > 1.0)) throw ParameterError("YypoParams: alpha_ec must be > 1");
  }

  [[nodiscard]] int interval_count() const { return i_max - i_min + 1; }
};

struct Candidate {
  Vector point;
  double fitness = 0.0;
};

struct YypoState {
  Vector p1;
  Vector p2;
  double f1 = 0.0;
  double f2 = 0.0;
  double delta1 = 0.5;
  double delta2 = 0.5;
  std::vector<Candidate> archive;
  int i_current = 0;
  int split_counter = 0;
};

/// Probability of choosing D-way over one-way splitting: (d / (d + 5))^2.
inline double p_dway(std::size_t d) {
  if (d < 1) throw ParameterError("p_dway: d must be >= 1");
  const double q = static_cast<double>(d) / (static_cast<double>(d) + 5.0);
  return q * q;
}

/// Unrepaired one-way candidates: for each j, p +/- r*delta along axis j with
/// one shared r per axis (D uniforms). Order: the D "+" points, then the D "-".
inline std::vector<Vector> one_way_candidates(ConstVectorView p, double delta, RngStream& rng) {
  const std::size_t dim = p.size();
  std::vector<Vector> out(2 * dim, Vector(p.begin(), p.end()));
  for (std::size_t j = 0; j < dim; ++j) {
    const double step = rng.uniform() * delta;
    out[j][j] += step;
    out[dim + j][j] -= step;
  }
  return out;
}

/// Unrepaired D-way candidates: 2D points p + r*delta/sqrt(2), r uniform in
/// (-1, 1)^D, fresh per candidate (2D*D uniforms).
inline std::vector<Vector> d_way_candidates(ConstVectorView p, double delta, RngStream& rng) {
  const std::size_t dim = p.size();
  const double radius = delta / std::sqrt(2.0);
  std::vector<Vector> out(2 * dim, Vector(p.begin(), p.end()));
  for (auto& c : out) {
    for (std::size_t j = 0; j < dim; ++j) c[j] += (2.0 * rng.uniform() - 1.0) * radius;
  }
  return out;
}

namespace detail {

inline std::vector<Candidate> repair_and_evaluate(std::vector<Vector> raw, const SearchSpace& space,
                                                  RunContext& ctx, RngStream& rng) {
  std::vector<Candidate> out;
  out.reserve(raw.size());
  for (auto& x : raw) {
    if (ctx.exhausted()) break;
    resample_out_of_bounds_inplace(x, space, rng);
    const double f = ctx.evaluate(x);
    out.push_back({std::move(x), f});
  }
  return out;
}

inline const Candidate* fittest(const std::vector<Candidate>& cs) {
  const Candidate* best = nullptr;
  for (const auto& c : cs) {
    if (best == nullptr || c.fitness < best->fitness) best = &c;
  }
  return best;
}

}  // namespace detail

/// Generates, repairs and evaluates one-way candidates. Stops early on budget
/// exhaustion and returns what was evaluated.
inline std::vector<Candidate> one_way_split(ConstVectorView p, double delta, const SearchSpace& space,
                                            RunContext& ctx, RngStream& rng) {
  if (ctx.exhausted()) throw BudgetExhausted();
  return detail::repair_and_evaluate(one_way_candidates(p, delta, rng), space, ctx, rng);
}

inline std::vector<Candidate> d_way_split(ConstVectorView p, double delta, const SearchSpace& space,
                                          RunContext& ctx, RngStream& rng) {
  if (ctx.exhausted()) throw BudgetExhausted();
  return detail::repair_and_evaluate(d_way_candidates(p, delta, rng), space, ctx, rng);
}

/// Swaps the pair (with radii) when P2 is strictly fitter.
inline void order_pair(YypoState& s) {
  if (s.f2 < s.f1) {
    std::swap(s.p1, s.p2);
    std::swap(s.f1, s.f2);
    std::swap(s.delta1, s.delta2);
  }
}

/// One update: archive both points, split each with its own radius and move
/// it to the best of its candidates, then restore the f1 <= f2 ordering.
inline void split_stage(YypoState& s, const YypoParams& params, const SearchSpace& space, RunContext& ctx,
                        RngStream& rng) {
  (void)params;
  s.archive.push_back({s.p1, s.f1});
  s.archive.push_back({s.p2, s.f2});

  const double pd = p_dway(space.dim());
  auto split_point = [&](Vector& p, double& f, double delta) {
    if (ctx.exhausted()) return;
    const bool dway = rng.uniform() < pd;
    const auto cands = dway ? d_way_split(p, delta, space, ctx, rng) : one_way_split(p, delta, space, ctx, rng);
    if (const Candidate* best = detail::fittest(cands)) {
      p = best->point;
      f = best->fitness;
    }
  };
  split_point(s.p1, s.f1, s.delta1);
  split_point(s.p2, s.f2, s.delta2);

  order_pair(s);
  ++s.split_counter;
}

inline void radius_update(YypoState& s, const YypoParams& params) {
  s.delta1 = s.delta1 - s.delta1 / params.alpha_ec;
  s.delta2 = s.delta2 + s.delta2 / params.alpha_ec;
}

/// Archive stage. `interval_index` is the number of schedule boundaries
/// already crossed; only the ascending variant reads it.
inline void archive_stage(YypoState& s, const YypoParams& params, RngStream& rng, int interval_index = 0) {
  if (s.split_counter != s.i_current)
    throw ContractViolation("archive_stage: split_counter " + std::to_string(s.split_counter) +
                            " != archive length " + std::to_string(s.i_current));
  if (const Candidate* best = detail::fittest(s.archive); best != nullptr && best->fitness < s.f1) {
    s.p1 = best->point;
    s.f1 = best->fitness;
  }
  radius_update(s, params);
  s.archive.clear();
  if (params.variant == YypoVariant::static_random_I) {
    s.i_current = static_cast<int>(rng.uniform_int(params.i_min, params.i_max));
  } else {
    s.i_current = std::min(params.i_min + std::max(interval_index, 0), params.i_max);
  }
  s.split_counter = 0;
}

/// Equal eval-count intervals used by the ascending schedule; same
/// construction as the Yi schedule.
inline std::vector<std::int64_t> yypo_interval_boundaries(std::int64_t t_max, const YypoParams& params) {
  const std::int64_t k_total = params.interval_count();
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k < k_total; ++k) {
    const std::int64_t b = (2 * t_max * k + k_total) / (2 * k_total);
    if (out.empty() || b > out.back()) out.push_back(b);
  }
  return out;
}

struct YypoObserver {
  std::function<void(const YypoState&, std::int64_t evals)> on_split_stage;
  std::function<void(const YypoState&, std::int64_t evals)> on_archive_stage;
};

inline RunRecord run_yypo(const Objective& objective, const SearchSpace& space, const YypoParams& params,
                          std::int64_t t_max, std::uint64_t seed, const YypoObserver& observer = {},
                          std::string problem_id = {}) {
  params.validate();
  const std::size_t dim = space.dim();
  const SearchSpace unit = SearchSpace::cube(dim, 0.0, 1.0);

  auto denormalize = [&space](ConstVectorView u) {
    Vector x(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) x[j] = space.lower(j) + u[j] * space.width(j);
    return x;
  };
  const Objective unit_objective = [&](ConstVectorView u) { return objective(denormalize(u)); };

  RngStream rng(seed);
  RunContext ctx(unit_objective, t_max);

  YypoState s;
  s.p1 = uniform_point(unit, rng);
  s.p2 = uniform_point(unit, rng);
  s.f1 = ctx.evaluate(s.p1);
  s.f2 = ctx.exhausted() ? s.f1 : ctx.evaluate(s.p2);
  order_pair(s);
  s.i_current = params.variant == YypoVariant::static_random_I
                    ? static_cast<int>(rng.uniform_int(params.i_min, params.i_max))
                    : params.i_min;

  const auto boundaries = params.variant == YypoVariant::dynamic_ascending_I
                              ? yypo_interval_boundaries(t_max, params)
                              : std::vector<std::int64_t>{};
  int crossed = 0;

  while (!ctx.exhausted()) {
    split_stage(s, params, unit, ctx, rng);
    if (observer.on_split_stage) observer.on_split_stage(s, ctx.used());
    while (crossed < static_cast<int>(boundaries.size()) && ctx.used() >= boundaries[crossed]) {
      ++crossed;
      ctx.mark();
    }
    if (s.split_counter == s.i_current) {
      archive_stage(s, params, rng, crossed);
      if (observer.on_archive_stage) observer.on_archive_stage(s, ctx.used());
    }
  }

  const std::string algo = params.variant == YypoVariant::static_random_I ? "yypo" : "dyypo";
  RunRecord record = ctx.finish(seed, algo, std::move(problem_id));
  record.final_best_point = denormalize(record.final_best_point);
  return record;
}

}  // namespace yiopt

#endif  // YIOPT_YYPO_HPP

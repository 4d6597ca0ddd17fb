#ifndef YIOPT_YI_HPP
#define YIOPT_YI_HPP

// The Yi optimizer: one search point moved by stable-law flights, reset to
// the global best every `i_current` flights, with a flight scope that shrinks
// and an archive length that descends over equal slices of the budget.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "yiopt/core.hpp"
#include "yiopt/stable.hpp"

namespace yiopt {

enum class ScopePolicy {
  dimension,             ///< eps0 = D
  dimension_half_width,  ///< eps0 = D * mean half-width of the box
};

struct YiParams {
  int i_min = 6;
  int i_max = 15;
  double sigma = 3.0;
  double alpha_stability = 1.5;
  std::optional<int> n_offspring;  ///< unset means 2 * D
  ScopePolicy eps0_policy = ScopePolicy::dimension;
  std::optional<int> intervals;  ///< unset: one per I value plus a final one at i_min

  void validate() const {
    if (i_min < 1) throw ParameterError("YiParams: i_min must be >= 1");
    if (i_max < i_min) throw ParameterError("YiParams: i_max must be >= i_min");
    if (!(sigma > 1.0)) throw ParameterError("YiParams: sigma must be > 1");
    if (!(alpha_stability > 0.0 && alpha_stability <= 2.0))
      throw ParameterError("YiParams: alpha_stability must lie in (0, 2]");
    if (n_offspring && *n_offspring < 1) throw ParameterError("YiParams: n_offspring must be >= 1");
    if (intervals && *intervals < 1) throw ParameterError("YiParams: intervals must be >= 1");
  }

  /// Number of equal eval-count intervals K. With i_min = 6, i_max = 15 this
  /// is 11: ten intervals walking I down to i_min, then one more scope decay.
  /// A fixed archive length (i_min == i_max) gives a single interval.
  [[nodiscard]] int interval_count() const {
    if (intervals) return *intervals;
    return i_max == i_min ? 1 : i_max - i_min + 2;
  }

  [[nodiscard]] int offspring_for(std::size_t dim) const {
    return n_offspring ? *n_offspring : static_cast<int>(2 * dim);
  }

  [[nodiscard]] double initial_scope(const SearchSpace& space) const {
    const auto d = static_cast<double>(space.dim());
    if (eps0_policy == ScopePolicy::dimension) return d;
    double half_sum = 0.0;
    for (std::size_t j = 0; j < space.dim(); ++j) half_sum += 0.5 * space.width(j);
    return d * (half_sum / d);
  }
};

struct YiState {
  Vector p0;
  double f0 = 0.0;
  Vector gbest;
  double f_gbest = 0.0;
  double eps = 0.0;
  int i_current = 0;
  int split_counter = 0;
  int interval_index = 0;
};

/// Interior eval-count thresholds splitting `t_max` into K equal intervals:
/// round(t_max * k / K), k = 1..K-1.
inline std::vector<std::int64_t> interval_boundaries(std::int64_t t_max, const YiParams& params) {
  if (t_max < 1) throw ParameterError("interval_boundaries: t_max must be >= 1");
  const std::int64_t k_total = params.interval_count();
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(k_total - 1, 0)));
  for (std::int64_t k = 1; k < k_total; ++k) {
    // round-half-up in exact integer arithmetic
    const std::int64_t b = (2 * t_max * k + k_total) / (2 * k_total);
    if (out.empty() || b > out.back()) out.push_back(b);
  }
  return out;
}

struct SplitResult {
  Vector point;
  double fitness = 0.0;
  int evaluated = 0;
  std::size_t repairs = 0;  ///< coordinates resampled into the box
};

/// Draws up to `n_offspring` flights around `state.p0`, each repaired into
/// the box and evaluated; returns the fittest. Candidates are streamed so
/// only the incumbent is kept. The split also stops once the cumulative
/// evaluation count reaches `stop_at`.
inline SplitResult cauchy_split(const YiState& state, const YiParams& params, const SearchSpace& space,
                                RunContext& ctx, RngStream& rng,
                                std::int64_t stop_at = std::numeric_limits<std::int64_t>::max()) {
  if (ctx.exhausted() || ctx.used() >= stop_at) throw BudgetExhausted();
  const std::size_t dim = space.dim();
  const StableParams flight{params.alpha_stability, 1.0};
  const int n = params.offspring_for(dim);

  SplitResult best;
  Vector candidate(dim);
  for (int c = 0; c < n && !ctx.exhausted() && ctx.used() < stop_at; ++c) {
    sample_stable_into(candidate, flight, rng);
    for (std::size_t j = 0; j < dim; ++j) candidate[j] = state.p0[j] + state.eps * candidate[j];
    best.repairs += resample_out_of_bounds_inplace(candidate, space, rng);
    const double f = ctx.evaluate(candidate);
    if (best.evaluated == 0 || f < best.fitness) {
      best.point = candidate;
      best.fitness = f;
    }
    ++best.evaluated;
  }
  return best;
}

/// Moves the Yi-point to lbest unconditionally; gbest only on strict improvement.
inline void yi_step_apply(YiState& state, SplitResult lbest) {
  if (lbest.fitness < state.f_gbest) {
    state.gbest = lbest.point;
    state.f_gbest = lbest.fitness;
  }
  state.p0 = std::move(lbest.point);
  state.f0 = lbest.fitness;
  ++state.split_counter;
}

inline void yi_step(YiState& state, const YiParams& params, const SearchSpace& space, RunContext& ctx,
                    RngStream& rng, std::int64_t stop_at = std::numeric_limits<std::int64_t>::max()) {
  yi_step_apply(state, cauchy_split(state, params, space, ctx, rng, stop_at));
}

/// Elitist reset: the Yi-point jumps back to gbest and the split counter
/// restarts. Requires split_counter >= i_current.
inline void archive_reset(YiState& state) {
  if (state.split_counter < state.i_current)
    throw ContractViolation("archive_reset: split_counter " + std::to_string(state.split_counter) +
                            " has not reached archive length " + std::to_string(state.i_current));
  state.p0 = state.gbest;
  state.f0 = state.f_gbest;
  state.split_counter = 0;
}

/// Shrinks the flight scope and shortens the archive (floored at i_min).
inline void interval_advance(YiState& state, const YiParams& params) {
  state.eps /= params.sigma;
  state.i_current = std::max(state.i_current - 1, params.i_min);
  ++state.interval_index;
}

/// Optional hooks for instrumented runs.
struct YiObserver {
  std::function<void(const YiState&, std::int64_t evals)> on_interval_advance;
  std::function<void(const YiState&, std::int64_t evals)> on_archive_reset;
  std::function<void(const YiState&, std::int64_t evals)> on_step;
};

inline RunRecord run_yi(const Objective& objective, const SearchSpace& space, const YiParams& params,
                        std::int64_t t_max, std::uint64_t seed, const YiObserver& observer = {},
                        std::string problem_id = {}) {
  params.validate();
  RngStream rng(seed);
  RunContext ctx(objective, t_max);

  YiState state;
  state.p0 = uniform_point(space, rng);
  state.f0 = ctx.evaluate(state.p0);
  state.gbest = state.p0;
  state.f_gbest = state.f0;
  state.eps = params.initial_scope(space);
  state.i_current = params.i_max;

  const auto boundaries = interval_boundaries(t_max, params);
  std::size_t next_boundary = 0;
  auto advance_crossed = [&] {
    while (next_boundary < boundaries.size() && ctx.used() >= boundaries[next_boundary]) {
      interval_advance(state, params);
      ++next_boundary;
      ctx.mark();
      if (observer.on_interval_advance) observer.on_interval_advance(state, ctx.used());
    }
  };
  advance_crossed();  // tiny budgets can place boundaries at or before the first evaluation

  while (!ctx.exhausted()) {
    // a split never straddles a boundary, so the scope decays exactly on it
    const std::int64_t stop_at = next_boundary < boundaries.size() ? boundaries[next_boundary]
                                                                  : std::numeric_limits<std::int64_t>::max();
    yi_step(state, params, space, ctx, rng, stop_at);
    if (observer.on_step) observer.on_step(state, ctx.used());
    advance_crossed();
    if (state.split_counter >= state.i_current) {
      archive_reset(state);
      if (observer.on_archive_reset) observer.on_archive_reset(state, ctx.used());
    }
  }

  RunRecord record = ctx.finish(seed, "yi", std::move(problem_id));
  record.final_best_point = state.gbest;
  record.final_best_fitness = state.f_gbest;
  return record;
}

}  // namespace yiopt

#endif  // YIOPT_YI_HPP

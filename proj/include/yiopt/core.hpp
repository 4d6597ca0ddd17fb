#ifndef YIOPT_CORE_HPP
#define YIOPT_CORE_HPP

// Shared vocabulary for every optimizer: search spaces, the counted
// evaluation path, the seeded random stream and run records.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yiopt {

using Vector = std::vector<double>;
using ConstVectorView = std::span<const double>;

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for out-of-range algorithm or problem parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Signals that the evaluation budget is spent; the run must stop.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

/// Box-bounded domain of dimension `dim()`.
class SearchSpace {
 public:
  SearchSpace(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) throw ParameterError("SearchSpace: dimension must be >= 1");
    if (lower_.size() != upper_.size())
      throw ParameterError("SearchSpace: lower/upper length mismatch");
    for (std::size_t j = 0; j < lower_.size(); ++j) {
      if (!(lower_[j] < upper_[j]))
        throw ParameterError("SearchSpace: lower[" + std::to_string(j) + "] must be < upper");
    }
  }

  static SearchSpace cube(std::size_t dim, double lo, double hi) {
    return SearchSpace(Vector(dim, lo), Vector(dim, hi));
  }

  [[nodiscard]] std::size_t dim() const noexcept { return lower_.size(); }
  [[nodiscard]] const Vector& lower() const noexcept { return lower_; }
  [[nodiscard]] const Vector& upper() const noexcept { return upper_; }
  [[nodiscard]] double lower(std::size_t j) const { return lower_[j]; }
  [[nodiscard]] double upper(std::size_t j) const { return upper_[j]; }
  [[nodiscard]] double width(std::size_t j) const { return upper_[j] - lower_[j]; }

  [[nodiscard]] bool contains(ConstVectorView x) const {
    if (x.size() != dim()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!(lower_[j] <= x[j] && x[j] <= upper_[j])) return false;
    }
    return true;
  }

 private:
  Vector lower_;
  Vector upper_;
};

/// Deterministic fitness map; lower is better.
using Objective = std::function<double(ConstVectorView)>;

/// Seeded random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Variates are derived here rather than through <random>
/// distributions (those are implementation-defined), so a seed reproduces the
/// same numbers on every conforming toolchain. Every derived variate consumes
/// exactly one engine output per uniform it needs; `draws()` counts them.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t draws() const noexcept { return draws_; }

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in the open interval (0, 1).
  double uniform_open() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer uniform in [lo, hi] (inclusive) by scaling one uniform.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw ContractViolation("uniform_int: empty range");
    const auto span = static_cast<double>(hi - lo + 1);
    auto k = static_cast<std::int64_t>(uniform() * span);
    if (k > hi - lo) k = hi - lo;
    return lo + k;
  }

  /// Standard normal via Box-Muller; consumes two uniforms, nothing cached.
  double normal() {
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

/// Evaluation counter with a hard ceiling.
class EvalBudget {
 public:
  explicit EvalBudget(std::int64_t max_evals) : max_evals_(max_evals) {
    if (max_evals < 1) throw ParameterError("EvalBudget: max_evals must be >= 1");
  }

  [[nodiscard]] std::int64_t max_evals() const noexcept { return max_evals_; }
  [[nodiscard]] std::int64_t used() const noexcept { return used_; }
  [[nodiscard]] std::int64_t remaining() const noexcept { return max_evals_ - used_; }
  [[nodiscard]] bool exhausted() const noexcept { return used_ >= max_evals_; }

  void consume() {
    if (used_ >= max_evals_) throw BudgetExhausted();
    ++used_;
  }

 private:
  std::int64_t max_evals_;
  std::int64_t used_ = 0;
};

/// The only path by which optimizers call an objective.
inline double evaluate_counted(const Objective& obj, ConstVectorView x, EvalBudget& budget) {
  budget.consume();
  return obj(x);
}

/// Replaces each out-of-box coordinate of `x` with a uniform draw inside its
/// bounds. Returns the number of coordinates replaced (one draw each).
inline std::size_t resample_out_of_bounds_inplace(Vector& x, const SearchSpace& space, RngStream& rng) {
  if (x.size() != space.dim())
    throw ContractViolation("resample_out_of_bounds: vector length " + std::to_string(x.size()) +
                            " != dimension " + std::to_string(space.dim()));
  std::size_t replaced = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double v = x[j];
    if (!(space.lower(j) <= v && v <= space.upper(j))) {
      x[j] = rng.uniform(space.lower(j), space.upper(j));
      ++replaced;
    }
  }
  return replaced;
}

inline Vector resample_out_of_bounds(ConstVectorView x, const SearchSpace& space, RngStream& rng) {
  Vector y(x.begin(), x.end());
  resample_out_of_bounds_inplace(y, space, rng);
  return y;
}

inline Vector uniform_point(const SearchSpace& space, RngStream& rng) {
  Vector x(space.dim());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = rng.uniform(space.lower(j), space.upper(j));
  return x;
}

struct TracePoint {
  std::int64_t evals = 0;
  double best = 0.0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct RunRecord {
  std::uint64_t seed = 0;
  std::string algorithm;
  std::string problem;
  std::vector<TracePoint> trace;
  Vector final_best_point;
  double final_best_fitness = std::numeric_limits<double>::infinity();
  std::int64_t total_evals = 0;
  std::int64_t max_evals = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Counted evaluation plus best-so-far bookkeeping for one run.
///
/// Trace points are appended on strict improvement, on `mark()` (schedule
/// boundaries) and once by `finish()`, so the recorded best is non-increasing.
class RunContext {
 public:
  RunContext(const Objective& objective, std::int64_t max_evals)
      : objective_(objective), budget_(max_evals) {}

  double evaluate(ConstVectorView x) {
    const double f = evaluate_counted(objective_, x, budget_);
    if (f < best_fitness_ || best_point_.empty()) {
      best_fitness_ = f;
      best_point_.assign(x.begin(), x.end());
      push_trace();
    }
    return f;
  }

  void mark() {
    if (!best_point_.empty()) push_trace();
  }

  [[nodiscard]] EvalBudget& budget() noexcept { return budget_; }
  [[nodiscard]] const EvalBudget& budget() const noexcept { return budget_; }
  [[nodiscard]] std::int64_t used() const noexcept { return budget_.used(); }
  [[nodiscard]] std::int64_t remaining() const noexcept { return budget_.remaining(); }
  [[nodiscard]] bool exhausted() const noexcept { return budget_.exhausted(); }
  [[nodiscard]] double best_fitness() const noexcept { return best_fitness_; }
  [[nodiscard]] const Vector& best_point() const noexcept { return best_point_; }

  /// Closes the trace. `best_point` overrides the tracked point when the
  /// optimizer reports in a different coordinate frame.
  RunRecord finish(std::uint64_t seed, std::string algorithm, std::string problem) {
    push_trace();
    RunRecord r;
    r.seed = seed;
    r.algorithm = std::move(algorithm);
    r.problem = std::move(problem);
    r.trace = std::move(trace_);
    r.final_best_point = best_point_;
    r.final_best_fitness = best_fitness_;
    r.total_evals = budget_.used();
    r.max_evals = budget_.max_evals();
    return r;
  }

 private:
  void push_trace() {
    const TracePoint p{budget_.used(), best_fitness_};
    if (!trace_.empty() && trace_.back().evals == p.evals) {
      trace_.back().best = p.best;
      return;
    }
    trace_.push_back(p);
  }

  Objective objective_;  // owned copy, so temporaries are safe
  EvalBudget budget_;
  double best_fitness_ = std::numeric_limits<double>::infinity();
  Vector best_point_;
  std::vector<TracePoint> trace_;
};

}  // namespace yiopt

#endif  // YIOPT_CORE_HPP

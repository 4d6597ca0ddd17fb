#ifndef YIOPT_ALGORITHMS_HPP
#define YIOPT_ALGORITHMS_HPP

// Registry mapping algorithm ids and JSON parameter overrides to runners.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "yiopt/baselines.hpp"
#include "yiopt/benchmarks.hpp"
#include "yiopt/yi.hpp"
#include "yiopt/yypo.hpp"

namespace yiopt {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids{"yi", "yypo", "dyypo", "de", "pso"};
  return ids;
}

inline std::string algorithm_description(const std::string& id) {
  if (id == "yi") return "Yi-point with stable-law flights, descending archive schedule";
  if (id == "yypo") return "Yin-Yang pair optimization, random archive length";
  if (id == "dyypo") return "YYPO with ascending archive length";
  if (id == "de") return "differential evolution, rand/1/bin";
  if (id == "pso") return "global-best particle swarm, constant inertia";
  return {};
}

namespace detail {

/// Reads typed keys out of a JSON object and rejects anything left over.
class ParamReader {
 public:
  ParamReader(const nlohmann::json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw ConfigError(where_ + ": params must be an object");
  }

  template <typename T>
  void read(const char* key, T& out) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    const auto& v = j_.at(key);
    if constexpr (std::is_same_v<T, int>) {
      if (!v.is_number_integer()) throw ConfigError(where_ + ": '" + key + "' must be an integer");
      out = v.get<int>();
    } else if constexpr (std::is_same_v<T, double>) {
      if (!v.is_number()) throw ConfigError(where_ + ": '" + key + "' must be a number");
      out = v.get<double>();
    } else {
      if (!v.is_string()) throw ConfigError(where_ + ": '" + key + "' must be a string");
      out = v.get<std::string>();
    }
  }

  [[nodiscard]] bool has(const char* key) const { return j_.contains(key); }
  const nlohmann::json& raw(const char* key) {
    seen_.insert(key);
    return j_.at(key);
  }

  void finish() const {
    for (const auto& [k, v] : j_.items()) {
      if (!seen_.contains(k)) throw ConfigError(where_ + ": unknown parameter '" + k + "'");
    }
  }

 private:
  const nlohmann::json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

}  // namespace detail

inline YiParams parse_yi_params(const nlohmann::json& j, const std::string& where = "yi") {
  YiParams p;
  detail::ParamReader r(j, where);
  r.read("i_min", p.i_min);
  r.read("i_max", p.i_max);
  r.read("sigma", p.sigma);
  r.read("alpha_stability", p.alpha_stability);
  if (r.has("n_offspring")) {
    const auto& v = r.raw("n_offspring");
    if (v.is_string() && v.get<std::string>() == "2D") {
      p.n_offspring.reset();
    } else if (v.is_number_integer()) {
      p.n_offspring = v.get<int>();
    } else {
      throw ConfigError(where + ": 'n_offspring' must be an integer or \"2D\"");
    }
  }
  if (r.has("intervals")) {
    int k = 0;
    r.read("intervals", k);
    p.intervals = k;
  }
  std::string policy = "dimension";
  r.read("eps0_policy", policy);
  if (policy == "dimension") {
    p.eps0_policy = ScopePolicy::dimension;
  } else if (policy == "dimension_half_width") {
    p.eps0_policy = ScopePolicy::dimension_half_width;
  } else {
    throw ConfigError(where + ": unknown eps0_policy '" + policy + "'");
  }
  r.finish();
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return p;
}

inline YypoParams parse_yypo_params(const nlohmann::json& j, YypoVariant variant, const std::string& where) {
  YypoParams p;
  p.variant = variant;
  detail::ParamReader r(j, where);
  r.read("i_min", p.i_min);
  r.read("i_max", p.i_max);
  r.read("alpha_ec", p.alpha_ec);
  r.finish();
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return p;
}

inline DeParams parse_de_params(const nlohmann::json& j, const std::string& where) {
  DeParams p;
  detail::ParamReader r(j, where);
  r.read("pop_size", p.pop_size);
  r.read("f_weight", p.f_weight);
  r.read("crossover_rate", p.crossover_rate);
  r.finish();
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return p;
}

inline PsoParams parse_pso_params(const nlohmann::json& j, const std::string& where) {
  PsoParams p;
  detail::ParamReader r(j, where);
  r.read("pop_size", p.pop_size);
  r.read("w", p.w);
  r.read("c1", p.c1);
  r.read("c2", p.c2);
  r.finish();
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return p;
}

/// One configured algorithm: display name, registry id and overrides.
struct AlgorithmConfig {
  std::string name;
  std::string algorithm;
  nlohmann::json params = nlohmann::json::object();
  std::string seed_key;  ///< defaults to name; runs sharing a key share seeds
};

using Runner = std::function<RunRecord(const SuiteProblem&, std::int64_t t_max, std::uint64_t seed)>;

/// Validates the configuration eagerly and returns a runner.
inline Runner make_runner(const AlgorithmConfig& cfg) {
  const std::string where = "algorithm '" + cfg.name + "'";
  const std::string name = cfg.name;
  if (cfg.algorithm == "yi") {
    const YiParams p = parse_yi_params(cfg.params, where);
    return [p, name](const SuiteProblem& sp, std::int64_t t_max, std::uint64_t seed) {
      auto r = run_yi(sp.objective, sp.bounds, p, t_max, seed, {}, sp.id);
      r.algorithm = name;
      return r;
    };
  }
  if (cfg.algorithm == "yypo" || cfg.algorithm == "dyypo") {
    const auto variant =
        cfg.algorithm == "yypo" ? YypoVariant::static_random_I : YypoVariant::dynamic_ascending_I;
    const YypoParams p = parse_yypo_params(cfg.params, variant, where);
    return [p, name](const SuiteProblem& sp, std::int64_t t_max, std::uint64_t seed) {
      auto r = run_yypo(sp.objective, sp.bounds, p, t_max, seed, {}, sp.id);
      r.algorithm = name;
      return r;
    };
  }
  if (cfg.algorithm == "de") {
    const DeParams p = parse_de_params(cfg.params, where);
    return [p, name](const SuiteProblem& sp, std::int64_t t_max, std::uint64_t seed) {
      auto r = run_de(sp.objective, sp.bounds, p, t_max, seed, sp.id);
      r.algorithm = name;
      return r;
    };
  }
  if (cfg.algorithm == "pso") {
    const PsoParams p = parse_pso_params(cfg.params, where);
    return [p, name](const SuiteProblem& sp, std::int64_t t_max, std::uint64_t seed) {
      auto r = run_pso(sp.objective, sp.bounds, p, t_max, seed, sp.id);
      r.algorithm = name;
      return r;
    };
  }
  throw ConfigError("unknown algorithm id '" + cfg.algorithm + "'");
}

}  // namespace yiopt

#endif  // YIOPT_ALGORITHMS_HPP

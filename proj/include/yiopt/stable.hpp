#ifndef YIOPT_STABLE_HPP
#define YIOPT_STABLE_HPP

// Symmetric alpha-stable variates (Chambers-Mallows-Stuck construction).

#include <cmath>
#include <numbers>

#include "yiopt/core.hpp"

namespace yiopt {

struct StableParams {
  double alpha = 1.5;  ///< stability exponent in (0, 2]; 1 is Cauchy, 2 is Gaussian
  double scale = 1.0;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 2.0))
      throw ParameterError("StableParams: alpha must lie in (0, 2], got " + std::to_string(alpha));
    if (!(scale > 0.0)) throw ParameterError("StableParams: scale must be > 0");
  }
};

/// Maps an angle variate V in (-pi/2, pi/2) and an exponential variate W > 0
/// to a unit-scale symmetric stable variate.
inline double stable_from_angle(double alpha, double v, double w) {
  if (alpha == 1.0) return std::tan(v);
  const double av = alpha * v;
  return std::sin(av) / std::pow(std::cos(v), 1.0 / alpha) *
         std::pow(std::cos(v - av) / w, (1.0 - alpha) / alpha);
}

/// Same, from the two uniforms in (0, 1) the sampler draws.
inline double stable_from_uniforms(double alpha, double u_angle, double u_exp) {
  const double v = std::numbers::pi * (u_angle - 0.5);
  const double w = -std::log(u_exp);
  return stable_from_angle(alpha, v, w);
}

/// One variate; always consumes exactly two uniforms from `rng`.
inline double sample_stable(const StableParams& params, RngStream& rng) {
  params.validate();
  const double u_angle = rng.uniform_open();
  const double u_exp = rng.uniform_open();
  return params.scale * stable_from_uniforms(params.alpha, u_angle, u_exp);
}

/// `dim` independent variates written into `out` (2 * dim uniforms).
inline void sample_stable_into(std::span<double> out, const StableParams& params, RngStream& rng) {
  params.validate();
  for (double& x : out) {
    const double u_angle = rng.uniform_open();
    const double u_exp = rng.uniform_open();
    x = params.scale * stable_from_uniforms(params.alpha, u_angle, u_exp);
  }
}

inline Vector sample_stable_vector(std::size_t dim, const StableParams& params, RngStream& rng) {
  if (dim == 0) throw ParameterError("sample_stable_vector: dim must be >= 1");
  Vector out(dim);
  sample_stable_into(out, params, rng);
  return out;
}

}  // namespace yiopt

#endif  // YIOPT_STABLE_HPP

#ifndef YIOPT_BENCHMARKS_HPP
#define YIOPT_BENCHMARKS_HPP

// Desk benchmark suite: standard base functions composed with a seeded
// shift, rotation and bias,
//
//   f(x) = base(s * M (x - o) + c) + bias,
//
// where c puts the base function's minimizer at x = o and s is a per-function
// input scale. Instances are reproducible from (suite seed, problem id, dim).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <charconv>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "yiopt/core.hpp"

namespace yiopt {

enum class BaseFunction {
  sphere,
  bent_cigar,
  zakharov,
  rosenbrock,
  rastrigin,
  levy,
  schaffer_f7,
  ackley,
  griewank,
  schwefel,
  elliptic,
  discus,
};

struct BaseFunctionInfo {
  BaseFunction id;
  std::string_view name;
  std::size_t min_dim;
  double optimum_coordinate;  ///< minimizer is this value in every coordinate
  double input_scale;         ///< s in z = s * M(x - o) + c
};

/// Schwefel 2.26 minimizer coordinate.
inline constexpr double kSchwefelOptimum = 420.9687462275036;

inline constexpr std::array<BaseFunctionInfo, 12> kBaseFunctions{{
    {BaseFunction::sphere, "sphere", 1, 0.0, 1.0},
    {BaseFunction::bent_cigar, "bent_cigar", 1, 0.0, 1.0},
    {BaseFunction::zakharov, "zakharov", 1, 0.0, 1.0},
    {BaseFunction::rosenbrock, "rosenbrock", 2, 1.0, 1.0},
    {BaseFunction::rastrigin, "rastrigin", 1, 0.0, 1.0},
    {BaseFunction::levy, "levy", 1, 1.0, 1.0},
    {BaseFunction::schaffer_f7, "schaffer_f7", 2, 0.0, 1.0},
    {BaseFunction::ackley, "ackley", 1, 0.0, 1.0},
    {BaseFunction::griewank, "griewank", 1, 0.0, 1.0},
    {BaseFunction::schwefel, "schwefel", 1, kSchwefelOptimum, 10.0},
    {BaseFunction::elliptic, "elliptic", 1, 0.0, 1.0},
    {BaseFunction::discus, "discus", 1, 0.0, 1.0},
}};

inline const BaseFunctionInfo& base_info(BaseFunction id) {
  return kBaseFunctions[static_cast<std::size_t>(id)];
}

inline std::optional<BaseFunction> parse_base_function(std::string_view name) {
  for (const auto& info : kBaseFunctions) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

namespace detail {

inline double schwefel_term(double z, std::size_t dim) {
  // CEC bounded variant: fold coordinates beyond +/-500 back and penalize.
  const double d = static_cast<double>(dim);
  if (z > 500.0) {
    const double m = 500.0 - std::fmod(z, 500.0);
    return m * std::sin(std::sqrt(std::abs(m))) - (z - 500.0) * (z - 500.0) / (10000.0 * d);
  }
  if (z < -500.0) {
    const double m = std::fmod(std::abs(z), 500.0) - 500.0;
    return m * std::sin(std::sqrt(std::abs(m))) - (z + 500.0) * (z + 500.0) / (10000.0 * d);
  }
  return z * std::sin(std::sqrt(std::abs(z)));
}

inline const double kSchwefelPeak = kSchwefelOptimum * std::sin(std::sqrt(kSchwefelOptimum));

}  // namespace detail

/// Literature-standard base functions, all with minimum value 0:
///
///   sphere       sum z_i^2                                      min at 0
///   bent_cigar   z_1^2 + 1e6 sum_{i>=2} z_i^2                   min at 0
///   zakharov     sum z_i^2 + S^2 + S^4, S = sum 0.5 i z_i        min at 0
///   rosenbrock   sum 100 (z_i^2 - z_{i+1})^2 + (z_i - 1)^2       min at 1
///   rastrigin    sum z_i^2 - 10 cos(2 pi z_i) + 10               min at 0
///   levy         w_i = 1 + (z_i - 1)/4, standard Levy form       min at 1
///   schaffer_f7  [mean_i (sqrt s_i + sqrt s_i sin^2(50 s_i^0.2))]^2,
///                s_i = sqrt(z_i^2 + z_{i+1}^2)                    min at 0
///   ackley       -20 exp(-0.2 rms(z)) - exp(mean cos 2 pi z) + 20 + e
///   griewank     sum z_i^2/4000 - prod cos(z_i/sqrt i) + 1       min at 0
///   schwefel     sum (p - g(z_i)), g(z) = z sin sqrt|z| with the
///                bounded fold beyond |z| > 500, p = g(420.9687...) min at 420.9687...
///   elliptic     sum 1e6^((i-1)/(D-1)) z_i^2                    min at 0
///   discus       1e6 z_1^2 + sum_{i>=2} z_i^2                   min at 0
inline double evaluate_base(BaseFunction id, ConstVectorView z) {
  const std::size_t dim = z.size();
  const auto& info = base_info(id);
  if (dim < info.min_dim)
    throw ParameterError(std::string(info.name) + ": dimension must be >= " + std::to_string(info.min_dim));
  constexpr double pi = std::numbers::pi;

  switch (id) {
    case BaseFunction::sphere: {
      double s = 0.0;
      for (double v : z) s += v * v;
      return s;
    }
    case BaseFunction::bent_cigar: {
      double s = 0.0;
      for (std::size_t i = 1; i < dim; ++i) s += z[i] * z[i];
      return z[0] * z[0] + 1e6 * s;
    }
    case BaseFunction::zakharov: {
      double sq = 0.0, lin = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        sq += z[i] * z[i];
        lin += 0.5 * static_cast<double>(i + 1) * z[i];
      }
      const double lin2 = lin * lin;
      return sq + lin2 + lin2 * lin2;
    }
    case BaseFunction::rosenbrock: {
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < dim; ++i) {
        const double a = z[i] * z[i] - z[i + 1];
        const double b = z[i] - 1.0;
        s += 100.0 * a * a + b * b;
      }
      return s;
    }
    case BaseFunction::rastrigin: {
      double s = 0.0;
      for (double v : z) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
      return s;
    }
    case BaseFunction::levy: {
      auto w = [&](std::size_t i) { return 1.0 + (z[i] - 1.0) / 4.0; };
      const double s0 = std::sin(pi * w(0));
      double s = s0 * s0;
      for (std::size_t i = 0; i + 1 < dim; ++i) {
        const double wi = w(i);
        const double si = std::sin(pi * wi + 1.0);
        s += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * si * si);
      }
      const double wd = w(dim - 1);
      const double sd = std::sin(2.0 * pi * wd);
      return s + (wd - 1.0) * (wd - 1.0) * (1.0 + sd * sd);
    }
    case BaseFunction::schaffer_f7: {
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < dim; ++i) {
        const double si = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
        const double root = std::sqrt(si);
        const double t = std::sin(50.0 * std::pow(si, 0.2));
        s += root + root * t * t;
      }
      s /= static_cast<double>(dim - 1);
      return s * s;
    }
    case BaseFunction::ackley: {
      double sq = 0.0, cs = 0.0;
      for (double v : z) {
        sq += v * v;
        cs += std::cos(2.0 * pi * v);
      }
      const double d = static_cast<double>(dim);
      const double val = -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 + std::numbers::e;
      return std::max(val, 0.0);
    }
    case BaseFunction::griewank: {
      double s = 0.0, p = 1.0;
      for (std::size_t i = 0; i < dim; ++i) {
        s += z[i] * z[i] / 4000.0;
        p *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
      }
      return s - p + 1.0;
    }
    case BaseFunction::schwefel: {
      double s = 0.0;
      for (double v : z) s += detail::kSchwefelPeak - detail::schwefel_term(v, dim);
      return s;
    }
    case BaseFunction::elliptic: {
      double s = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        const double e = dim == 1 ? 0.0 : 6.0 * static_cast<double>(i) / static_cast<double>(dim - 1);
        s += std::pow(10.0, e) * z[i] * z[i];
      }
      return s;
    }
    case BaseFunction::discus: {
      double s = 1e6 * z[0] * z[0];
      for (std::size_t i = 1; i < dim; ++i) s += z[i] * z[i];
      return s;
    }
  }
  throw ParameterError("evaluate_base: unknown function id");
}

/// Row-major square matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  [[nodiscard]] Vector apply(ConstVectorView x) const {
    Vector y(n_, 0.0);
    for (std::size_t r = 0; r < n_; ++r) {
      double s = 0.0;
      const double* row = data_.data() + r * n_;
      for (std::size_t c = 0; c < n_; ++c) s += row[c] * x[c];
      y[r] = s;
    }
    return y;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const double aik = a(i, k);
        for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  Vector data_;
};

/// Orthogonal matrix from seeded Gaussian draws, orthonormalized row by row
/// with modified Gram-Schmidt (re-orthogonalized once for stability).
inline Matrix random_orthogonal(std::size_t dim, RngStream& rng) {
  if (dim < 1) throw ParameterError("random_orthogonal: dim must be >= 1");
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rng.normal();
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < r; ++k) {
        double dot = 0.0;
        for (std::size_t c = 0; c < dim; ++c) dot += m(r, c) * m(k, c);
        for (std::size_t c = 0; c < dim; ++c) m(r, c) -= dot * m(k, c);
      }
    }
    double norm = 0.0;
    for (std::size_t c = 0; c < dim; ++c) norm += m(r, c) * m(r, c);
    norm = std::sqrt(norm);
    for (std::size_t c = 0; c < dim; ++c) m(r, c) /= norm;
  }
  return m;
}

enum class Transform { none, shift, rotate, shift_rotate };

inline std::string_view transform_name(Transform t) {
  switch (t) {
    case Transform::none: return "none";
    case Transform::shift: return "shift";
    case Transform::rotate: return "rotate";
    case Transform::shift_rotate: return "shift_rotate";
  }
  return "none";
}

inline std::optional<Transform> parse_transform(std::string_view s) {
  for (Transform t : {Transform::none, Transform::shift, Transform::rotate, Transform::shift_rotate}) {
    if (transform_name(t) == s) return t;
  }
  return std::nullopt;
}

struct BenchmarkProblem {
  BaseFunction base = BaseFunction::sphere;
  Vector shift;
  Matrix rotation;
  double bias = 0.0;
  SearchSpace bounds = SearchSpace::cube(1, -100.0, 100.0);

  [[nodiscard]] std::size_t dim() const { return bounds.dim(); }
};

inline BenchmarkProblem make_problem(BaseFunction base, std::size_t dim, Vector shift, Matrix rotation,
                                     double bias, double bound = 100.0) {
  if (shift.size() != dim || rotation.size() != dim)
    throw ParameterError("make_problem: shift/rotation size must equal dim");
  if (dim < base_info(base).min_dim)
    throw ParameterError(std::string(base_info(base).name) + ": dimension below minimum");
  return BenchmarkProblem{base, std::move(shift), std::move(rotation), bias,
                          SearchSpace::cube(dim, -bound, bound)};
}

inline BenchmarkProblem make_plain_problem(BaseFunction base, std::size_t dim, double bias = 0.0) {
  return make_problem(base, dim, Vector(dim, 0.0), Matrix::identity(dim), bias);
}

inline double evaluate_problem(const BenchmarkProblem& p, ConstVectorView x) {
  const std::size_t dim = p.dim();
  if (x.size() != dim)
    throw ContractViolation("evaluate_problem: length " + std::to_string(x.size()) + " != " + std::to_string(dim));
  const auto& info = base_info(p.base);
  Vector d(dim);
  for (std::size_t j = 0; j < dim; ++j) d[j] = x[j] - p.shift[j];
  Vector z = p.rotation.apply(d);
  for (double& v : z) v = info.input_scale * v + info.optimum_coordinate;
  return evaluate_base(p.base, z) + p.bias;
}

/// Distance above the known global minimum.
inline double error_value(const BenchmarkProblem& p, ConstVectorView x_best) {
  return evaluate_problem(p, x_best) - p.bias;
}

/// Global minimizer in x-space (always the shift vector).
inline Vector problem_optimum(const BenchmarkProblem& p) { return p.shift; }

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// SplitMix64 finalizer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for a suite instance: splitmix64(suite_seed ^ fnv1a64("<id>#<dim>")).
inline std::uint64_t instance_seed(std::uint64_t suite_seed, std::string_view problem_id, std::size_t dim) {
  std::string key(problem_id);
  key += '#';
  key += std::to_string(dim);
  return splitmix64(suite_seed ^ fnv1a64(key));
}

/// Seeded instance. Shift is uniform in [-0.8 b, 0.8 b]^D; the rotation is
/// drawn after the shift from the same stream.
inline BenchmarkProblem make_instance(BaseFunction base, std::size_t dim, std::uint64_t suite_seed,
                                      std::string_view problem_id, double bias, Transform transform,
                                      double bound = 100.0) {
  RngStream rng(instance_seed(suite_seed, problem_id, dim));
  Vector shift(dim, 0.0);
  Matrix rotation = Matrix::identity(dim);
  if (transform == Transform::shift || transform == Transform::shift_rotate) {
    for (double& v : shift) v = rng.uniform(-0.8 * bound, 0.8 * bound);
  }
  if (transform == Transform::rotate || transform == Transform::shift_rotate) {
    rotation = random_orthogonal(dim, rng);
  }
  return make_problem(base, dim, std::move(shift), std::move(rotation), bias, bound);
}

/// Three-component CEC-style composition (non-official): components are
/// weighted by Gaussian proximity to their own optima; the first component's
/// optimum is the global one.
struct CompositionProblem {
  std::array<BenchmarkProblem, 3> components;
  std::array<double, 3> sigma{10.0, 20.0, 30.0};
  std::array<double, 3> lambda{1.0, 1.0, 1.0};
  std::array<double, 3> component_bias{0.0, 100.0, 200.0};
  double bias = 0.0;
  SearchSpace bounds = SearchSpace::cube(1, -100.0, 100.0);

  [[nodiscard]] std::size_t dim() const { return bounds.dim(); }
};

inline double evaluate_composition(const CompositionProblem& p, ConstVectorView x) {
  const std::size_t dim = p.dim();
  if (x.size() != dim) throw ContractViolation("evaluate_composition: length mismatch");
  std::array<double, 3> w{};
  std::array<double, 3> g{};
  double w_sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& c = p.components[k];
    double dist2 = 0.0;
    for (std::size_t j = 0; j < dim; ++j) dist2 += (x[j] - c.shift[j]) * (x[j] - c.shift[j]);
    g[k] = p.lambda[k] * (evaluate_problem(c, x) - c.bias) + p.component_bias[k];
    if (dist2 == 0.0) {
      // exactly at an optimum: that component takes all the weight
      return g[k] + p.bias;
    }
    w[k] = std::exp(-dist2 / (2.0 * static_cast<double>(dim) * p.sigma[k] * p.sigma[k])) / std::sqrt(dist2);
    w_sum += w[k];
  }
  if (w_sum == 0.0) {
    double s = 0.0;
    for (double v : g) s += v;
    return s / 3.0 + p.bias;
  }
  double f = 0.0;
  for (std::size_t k = 0; k < 3; ++k) f += w[k] / w_sum * g[k];
  return f + p.bias;
}

/// Components rastrigin, griewank, schwefel on independent seeded transforms.
inline CompositionProblem make_composition(std::size_t dim, std::uint64_t suite_seed, std::string_view problem_id,
                                           double bias) {
  const std::string id(problem_id);
  CompositionProblem p;
  p.components = {
      make_instance(BaseFunction::rastrigin, dim, suite_seed, id + "/c0", 0.0, Transform::shift_rotate),
      make_instance(BaseFunction::griewank, dim, suite_seed, id + "/c1", 0.0, Transform::shift_rotate),
      make_instance(BaseFunction::schwefel, dim, suite_seed, id + "/c2", 0.0, Transform::shift_rotate),
  };
  p.lambda = {1.0, 10.0, 1.0};
  p.bias = bias;
  p.bounds = SearchSpace::cube(dim, -100.0, 100.0);
  return p;
}

/// One manifest row, fully specifying a problem instance.
struct ManifestEntry {
  std::string id;
  std::string base;  ///< a BaseFunction name or "composition"
  std::size_t dim = 0;
  std::uint64_t suite_seed = 0;
  double bias = 0.0;
  Transform transform = Transform::shift_rotate;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// A ready-to-run problem: id, bounds, objective and known minimum.
struct SuiteProblem {
  std::string id;
  std::size_t dim = 0;
  double bias = 0.0;
  SearchSpace bounds = SearchSpace::cube(1, -100.0, 100.0);
  Objective objective;
  Vector optimum;

  [[nodiscard]] double error(ConstVectorView x) const { return objective(x) - bias; }
};

inline SuiteProblem instantiate(const ManifestEntry& e) {
  SuiteProblem sp;
  sp.id = e.id;
  sp.dim = e.dim;
  sp.bias = e.bias;
  if (e.base == "composition") {
    auto comp = std::make_shared<const CompositionProblem>(make_composition(e.dim, e.suite_seed, e.id, e.bias));
    sp.bounds = comp->bounds;
    sp.optimum = comp->components[0].shift;
    sp.objective = [comp](ConstVectorView x) { return evaluate_composition(*comp, x); };
    return sp;
  }
  const auto base = parse_base_function(e.base);
  if (!base) throw ParameterError("unknown base function '" + e.base + "' for problem '" + e.id + "'");
  auto prob = std::make_shared<const BenchmarkProblem>(
      make_instance(*base, e.dim, e.suite_seed, e.id, e.bias, e.transform));
  sp.bounds = prob->bounds;
  sp.optimum = problem_optimum(*prob);
  sp.objective = [prob](ConstVectorView x) { return evaluate_problem(*prob, x); };
  return sp;
}

/// Manifest text format, one problem per line, '#' starts a comment:
///
///   <id> <base> <dim|*> <suite_seed> <bias> [transform]
///
/// transform is one of none|shift|rotate|shift_rotate (default shift_rotate).
/// A dim of `*` is expanded by the caller (see expand_manifest); it is stored
/// here as 0.
inline std::vector<ManifestEntry> parse_manifest(std::istream& in) {
  std::vector<ManifestEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "manifest line " + std::to_string(lineno);
    if (tok.size() < 5 || tok.size() > 6) throw ParameterError(where + ": expected 5 or 6 fields");
    ManifestEntry e;
    e.id = tok[0];
    e.base = tok[1];
    if (e.base != "composition" && !parse_base_function(e.base))
      throw ParameterError(where + ": unknown base function '" + e.base + "'");
    try {
      e.dim = tok[2] == "*" ? 0 : static_cast<std::size_t>(std::stoul(tok[2]));
      if (tok[2] != "*" && e.dim == 0) throw ParameterError(where + ": dim must be >= 1");
      e.suite_seed = std::stoull(tok[3]);
      e.bias = std::stod(tok[4]);
    } catch (const std::logic_error& ex) {
      throw ParameterError(where + ": " + ex.what());
    }
    if (tok.size() == 6) {
      const auto t = parse_transform(tok[5]);
      if (!t) throw ParameterError(where + ": unknown transform '" + tok[5] + "'");
      e.transform = *t;
    }
    for (const auto& prev : out) {
      if (prev.id == e.id) throw ParameterError(where + ": duplicate problem id '" + e.id + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<ManifestEntry> parse_manifest_text(const std::string& text) {
  std::istringstream in(text);
  return parse_manifest(in);
}

inline std::vector<ManifestEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open manifest '" + path + "'");
  return parse_manifest(in);
}

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline std::string format_manifest(const std::vector<ManifestEntry>& entries) {
  std::ostringstream out;
  out << "# id base dim suite_seed bias transform\n";
  for (const auto& e : entries) {
    out << e.id << ' ' << e.base << ' ' << (e.dim == 0 ? std::string("*") : std::to_string(e.dim)) << ' '
        << e.suite_seed << ' ' << format_double(e.bias) << ' ' << transform_name(e.transform) << '\n';
  }
  return out.str();
}

/// Replaces `*` dims by one entry per requested dimension, suffixing ids with
/// `_d<dim>`.
inline std::vector<ManifestEntry> expand_manifest(const std::vector<ManifestEntry>& entries,
                                                  const std::vector<std::size_t>& dims) {
  std::vector<ManifestEntry> out;
  for (const auto& e : entries) {
    if (e.dim != 0) {
      out.push_back(e);
      continue;
    }
    if (dims.empty()) throw ParameterError("problem '" + e.id + "' has dim '*' but no dims were configured");
    for (std::size_t d : dims) {
      ManifestEntry x = e;
      x.dim = d;
      x.id = e.id + "_d" + std::to_string(d);
      out.push_back(std::move(x));
    }
  }
  return out;
}

/// Built-in manifests: "smoke" (4 problems) and "desk6" (6 problems), both
/// shifted and rotated with suite seed 2017 and dim `*`.
inline std::optional<std::vector<ManifestEntry>> builtin_manifest(std::string_view name) {
  if (name == "smoke") {
    return parse_manifest_text(
        "zakharov zakharov * 2017 0 shift_rotate\n"
        "rastrigin rastrigin * 2017 0 shift_rotate\n"
        "rosenbrock rosenbrock * 2017 0 shift_rotate\n"
        "ackley ackley * 2017 0 shift_rotate\n");
  }
  if (name == "desk6") {
    return parse_manifest_text(
        "zakharov zakharov * 2017 0 shift_rotate\n"
        "rastrigin rastrigin * 2017 0 shift_rotate\n"
        "levy levy * 2017 0 shift_rotate\n"
        "rosenbrock rosenbrock * 2017 0 shift_rotate\n"
        "ackley ackley * 2017 0 shift_rotate\n"
        "griewank griewank * 2017 0 shift_rotate\n");
  }
  if (name == "all") {
    std::string text;
    for (const auto& info : kBaseFunctions) text += std::string(info.name) + ' ' + std::string(info.name) + " * 2017 0\n";
    text += "composition3 composition * 2017 0\n";
    return parse_manifest_text(text);
  }
  return std::nullopt;
}

}  // namespace yiopt

#endif  // YIOPT_BENCHMARKS_HPP

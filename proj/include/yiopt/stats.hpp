#ifndef YIOPT_STATS_HPP
#define YIOPT_STATS_HPP

// Run statistics, one-tailed Welch t-test and win/tie/loss tables.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "yiopt/core.hpp"

namespace yiopt {

struct RunStats {
  std::size_t n = 0;
  double best = 0.0;
  double worst = 0.0;
  double mean = 0.0;
  double std = 0.0;  ///< sample standard deviation (n - 1 divisor)
  double median = 0.0;
};

/// Order statistics and moments of final error values. Two-pass moments.
inline RunStats summarize(std::span<const double> errors) {
  if (errors.empty()) throw ParameterError("summarize: empty sample");
  Vector sorted(errors.begin(), errors.end());
  std::sort(sorted.begin(), sorted.end());
  RunStats s;
  s.n = sorted.size();
  s.best = sorted.front();
  s.worst = sorted.back();
  // summing the sorted copy makes the result independent of input order
  double sum = 0.0;
  for (double v : sorted) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  const std::size_t mid = s.n / 2;
  s.median = s.n % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return s;
}

/// Linear-interpolation quantile (Hyndman-Fan type 7) of a sorted sample.
inline double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw ParameterError("quantile_sorted: empty sample");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

namespace detail {

// Continued fraction for the incomplete beta function, modified Lentz method.
inline double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace detail

/// Regularized incomplete beta I_x(a, b), via the continued fraction on
/// whichever side of the mean (a+1)/(a+b+2) converges fastest.
inline double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) throw ParameterError("incomplete_beta: a, b must be > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * detail::beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * detail::beta_continued_fraction(b, a, 1.0 - x) / b;
}

/// P(T >= |t|) for Student's t with `dof` degrees of freedom.
inline double student_t_upper_tail(double t, double dof) {
  if (std::isinf(t)) return 0.0;
  const double x = dof / (dof + t * t);
  return 0.5 * incomplete_beta(0.5 * dof, 0.5, x);
}

/// Student's t CDF, symmetric by construction: cdf(-t) == 1 - cdf(t) exactly
/// in the sense that both are formed from the same tail value.
inline double student_t_cdf(double t, double dof) {
  const double tail = student_t_upper_tail(std::abs(t), dof);
  return t < 0.0 ? tail : 1.0 - tail;
}

enum class Tail {
  a_smaller,  ///< H1: mean(a) < mean(b)
  a_larger,   ///< H1: mean(a) > mean(b)
};

struct TTestResult {
  double t_statistic = 0.0;
  double dof = 0.0;
  double p_one_tail = 0.5;
};

/// One-tailed Welch test. Degenerate inputs (fewer than two samples, or both
/// variances zero with equal means) fall back to t = 0, p = 0.5.
inline TTestResult welch_one_tail(std::span<const double> a, std::span<const double> b, Tail direction) {
  TTestResult r;
  if (a.size() < 2 || b.size() < 2) return r;
  const RunStats sa = summarize(a);
  const RunStats sb = summarize(b);
  const double na = static_cast<double>(sa.n);
  const double nb = static_cast<double>(sb.n);
  const double va = sa.std * sa.std / na;
  const double vb = sb.std * sb.std / nb;
  const double se2 = va + vb;
  if (se2 == 0.0) {
    if (sa.mean == sb.mean) {
      r.dof = na + nb - 2.0;
      return r;
    }
    const double inf = std::numeric_limits<double>::infinity();
    r.t_statistic = sa.mean < sb.mean ? -inf : inf;
    r.dof = na + nb - 2.0;
  } else {
    r.t_statistic = (sa.mean - sb.mean) / std::sqrt(se2);
    r.dof = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  }
  // both tails from the same |t| tail value so swapping a and b mirrors exactly
  const double t = r.t_statistic;
  const double tail = student_t_upper_tail(std::abs(t), r.dof);
  const bool toward = direction == Tail::a_smaller ? t < 0.0 : t > 0.0;
  r.p_one_tail = t == 0.0 ? 0.5 : (toward ? tail : 1.0 - tail);
  return r;
}

enum class Verdict { win, tie, loss };

inline char verdict_symbol(Verdict v) {
  switch (v) {
    case Verdict::win: return '+';
    case Verdict::tie: return '=';
    case Verdict::loss: return '-';
  }
  return '=';
}

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::win: return "win";
    case Verdict::tie: return "tie";
    case Verdict::loss: return "loss";
  }
  return "tie";
}

/// win: candidate errors significantly smaller than the reference's;
/// loss: significantly larger; tie otherwise.
inline Verdict classify(std::span<const double> candidate, std::span<const double> reference,
                        double significance = 0.05) {
  if (welch_one_tail(candidate, reference, Tail::a_smaller).p_one_tail < significance) return Verdict::win;
  if (welch_one_tail(candidate, reference, Tail::a_larger).p_one_tail < significance) return Verdict::loss;
  return Verdict::tie;
}

struct ComparisonCell {
  std::string algorithm;
  std::string problem;
  RunStats stats;
  Verdict verdict = Verdict::tie;
};

struct WinTieLoss {
  int win = 0;
  int tie = 0;
  int loss = 0;

  friend bool operator==(const WinTieLoss&, const WinTieLoss&) = default;
};

struct ComparisonTable {
  std::vector<std::string> algorithms;
  std::vector<std::string> problems;
  std::vector<ComparisonCell> cells;  ///< problem-major, algorithm-minor
  std::map<std::string, WinTieLoss> totals;

  [[nodiscard]] const ComparisonCell& cell(std::size_t problem, std::size_t algorithm) const {
    return cells[problem * algorithms.size() + algorithm];
  }
};

/// Arranges cells into a grid ordered by first appearance and totals each
/// algorithm's verdicts. Every (algorithm, problem) pair must be present
/// exactly once.
inline ComparisonTable build_table(const std::vector<ComparisonCell>& cells) {
  ComparisonTable t;
  auto note = [](std::vector<std::string>& list, const std::string& v) {
    if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
  };
  for (const auto& c : cells) {
    note(t.problems, c.problem);
    note(t.algorithms, c.algorithm);
  }
  std::map<std::pair<std::string, std::string>, const ComparisonCell*> index;
  for (const auto& c : cells) {
    if (!index.emplace(std::pair{c.problem, c.algorithm}, &c).second)
      throw ParameterError("build_table: duplicate cell (" + c.algorithm + ", " + c.problem + ")");
  }
  std::string missing;
  for (const auto& p : t.problems) {
    for (const auto& a : t.algorithms) {
      const auto it = index.find({p, a});
      if (it == index.end()) {
        missing += " (" + a + ", " + p + ")";
        continue;
      }
      t.cells.push_back(*it->second);
      auto& tot = t.totals[a];
      switch (it->second->verdict) {
        case Verdict::win: ++tot.win; break;
        case Verdict::tie: ++tot.tie; break;
        case Verdict::loss: ++tot.loss; break;
      }
    }
  }
  if (!missing.empty()) throw ParameterError("build_table: missing cells:" + missing);
  return t;
}

inline std::string format_sci(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2E", v);
  return buf;
}

/// Tab-separated long form: one row per cell, then one totals row per
/// algorithm.
inline std::string table_to_tsv(const ComparisonTable& t) {
  std::ostringstream out;
  out << "problem\talgorithm\tn\tbest\tworst\tmean\tstd\tmedian\tverdict\n";
  for (const auto& c : t.cells) {
    out << c.problem << '\t' << c.algorithm << '\t' << c.stats.n << '\t' << format_sci(c.stats.best) << '\t'
        << format_sci(c.stats.worst) << '\t' << format_sci(c.stats.mean) << '\t' << format_sci(c.stats.std) << '\t'
        << format_sci(c.stats.median) << '\t' << verdict_symbol(c.verdict) << '\n';
  }
  for (const auto& a : t.algorithms) {
    const auto& w = t.totals.at(a);
    out << "(w,t,l)\t" << a << "\t\t\t\t\t\t\t(" << w.win << ',' << w.tie << ',' << w.loss << ")\n";
  }
  return out.str();
}

}  // namespace yiopt

#endif  // YIOPT_STATS_HPP

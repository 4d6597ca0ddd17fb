#include <gtest/gtest.h>

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "yiopt/stats.hpp"

namespace yiopt {
namespace {

struct Textbook {
  double t;
  double dof;
  double p_smaller;
};

// Naive Welch computation with Boost's Student-t as the distribution oracle.
Textbook textbook_welch(const Vector& a, const Vector& b) {
  auto moments = [](const Vector& x) {
    double m = 0.0;
    for (double v : x) m += v;
    m /= static_cast<double>(x.size());
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return std::pair{m, s / static_cast<double>(x.size() - 1)};
  };
  const auto [ma, va] = moments(a);
  const auto [mb, vb] = moments(b);
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double t = (ma - mb) / std::sqrt(va / na + vb / nb);
  const double dof = std::pow(va / na + vb / nb, 2) /
                     (std::pow(va / na, 2) / (na - 1.0) + std::pow(vb / nb, 2) / (nb - 1.0));
  const boost::math::students_t dist(dof);
  return {t, dof, boost::math::cdf(dist, t)};
}

Vector sample(RngStream& rng, std::size_t n, double mean, double spread) {
  Vector v(n);
  for (double& x : v) x = mean + spread * rng.normal();
  return v;
}

TEST(Summarize, SmallExamples) {
  const RunStats s = summarize(Vector{1.0, 2.0, 3.0});
  EXPECT_EQ(s.best, 1.0);
  EXPECT_EQ(s.worst, 3.0);
  EXPECT_EQ(s.mean, 2.0);
  EXPECT_EQ(s.std, 1.0);
  EXPECT_EQ(s.median, 2.0);
  const RunStats one = summarize(Vector{5.0});
  EXPECT_EQ(one.best, 5.0);
  EXPECT_EQ(one.worst, 5.0);
  EXPECT_EQ(one.mean, 5.0);
  EXPECT_EQ(one.median, 5.0);
  EXPECT_EQ(one.std, 0.0);
  EXPECT_EQ(summarize(Vector{4.0, 1.0, 3.0, 2.0}).median, 2.5);
  EXPECT_THROW(summarize(Vector{}), ParameterError);
}

TEST(Summarize, MatchesTwoPassOracle) {
  RngStream rng(51);
  const Vector x = sample(rng, 51, 3.0, 2.0);
  double m = 0.0;
  for (double v : x) m += v;
  m /= 51.0;
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  const RunStats s = summarize(x);
  EXPECT_NEAR(s.mean, m, 1e-12);
  EXPECT_NEAR(s.std, std::sqrt(ss / 50.0), 1e-12);
  EXPECT_LE(s.best, s.median);
  EXPECT_LE(s.median, s.worst);
}

TEST(Summarize, PermutationInvariant) {
  RngStream rng(2);
  Vector x = sample(rng, 37, 1e3, 1e2);
  const RunStats a = summarize(x);
  std::reverse(x.begin(), x.end());
  std::rotate(x.begin(), x.begin() + 11, x.end());
  const RunStats b = summarize(x);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std, b.std);
  EXPECT_EQ(a.median, b.median);
}

TEST(Quantile, Type7) {
  const Vector x{1.0, 2.0, 3.0, 4.0};
  EXPECT_EQ(quantile_sorted(x, 0.0), 1.0);
  EXPECT_EQ(quantile_sorted(x, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(quantile_sorted(x, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile_sorted(x, 0.25), 1.75);
}

TEST(IncompleteBeta, MatchesBoost) {
  for (double a : {0.5, 1.0, 2.5, 10.0, 50.0}) {
    for (double b : {0.5, 1.0, 3.0, 25.0}) {
      for (double x : {0.001, 0.1, 0.35, 0.5, 0.77, 0.999}) {
        EXPECT_NEAR(incomplete_beta(a, b, x), boost::math::ibeta(a, b, x), 1e-12) << a << ' ' << b << ' ' << x;
      }
    }
  }
  EXPECT_EQ(incomplete_beta(2.0, 3.0, 0.0), 0.0);
  EXPECT_EQ(incomplete_beta(2.0, 3.0, 1.0), 1.0);
}

TEST(StudentT, TabulatedCriticalValues) {
  // One-sided critical values from standard t tables.
  EXPECT_NEAR(student_t_upper_tail(1.812461, 10.0), 0.05, 1e-6);
  EXPECT_NEAR(student_t_upper_tail(2.570582, 5.0), 0.025, 1e-6);
  EXPECT_NEAR(student_t_upper_tail(2.527977, 20.0), 0.01, 1e-6);
  EXPECT_NEAR(student_t_upper_tail(1.0, 1.0), 0.25, 1e-14);  // Cauchy
  EXPECT_NEAR(student_t_cdf(0.0, 7.0), 0.5, 1e-15);
}

TEST(StudentT, MatchesBoostCdf) {
  for (double dof : {1.0, 2.5, 9.0, 48.3, 100.0, 1e4}) {
    const boost::math::students_t dist(dof);
    for (double t : {-30.0, -4.0, -1.1, -0.2, 0.3, 2.0, 6.5}) {
      EXPECT_NEAR(student_t_cdf(t, dof), boost::math::cdf(dist, t), 1e-12) << dof << ' ' << t;
    }
  }
}

TEST(Welch, IdenticalSamplesTie) {
  const Vector a{1.0, 2.0, 3.5, 0.2};
  const TTestResult r = welch_one_tail(a, a, Tail::a_smaller);
  EXPECT_EQ(r.t_statistic, 0.0);
  EXPECT_EQ(r.p_one_tail, 0.5);
  EXPECT_EQ(classify(a, a), Verdict::tie);
}

TEST(Welch, SeparatedSamples) {
  const Vector a{0.0, 1e-6, -1e-6, 2e-6};
  const Vector b{1.0, 1.0 + 1e-6, 1.0 - 1e-6, 1.0 + 2e-6};
  EXPECT_LT(welch_one_tail(a, b, Tail::a_smaller).p_one_tail, 1e-3);
  EXPECT_GT(welch_one_tail(a, b, Tail::a_larger).p_one_tail, 0.999);
}

TEST(Welch, EqualVarianceDofReduction) {
  const Vector a{1.0, 2.0, 3.0, 4.0, 5.0};
  const Vector b{11.0, 12.0, 13.0, 14.0, 15.0};
  EXPECT_NEAR(welch_one_tail(a, b, Tail::a_smaller).dof, 8.0, 1e-9);
}

TEST(Welch, MatchesTextbookFormula) {
  RngStream rng(100);
  for (int k = 0; k < 200; ++k) {
    const auto na = static_cast<std::size_t>(rng.uniform_int(2, 60));
    const auto nb = static_cast<std::size_t>(rng.uniform_int(2, 60));
    const Vector a = sample(rng, na, rng.uniform(-2.0, 2.0), rng.uniform(0.1, 3.0));
    const Vector b = sample(rng, nb, rng.uniform(-2.0, 2.0), rng.uniform(0.1, 3.0));
    const Textbook ref = textbook_welch(a, b);
    const TTestResult smaller = welch_one_tail(a, b, Tail::a_smaller);
    const TTestResult larger = welch_one_tail(a, b, Tail::a_larger);
    EXPECT_NEAR(smaller.t_statistic, ref.t, 1e-9 * std::max(1.0, std::abs(ref.t)));
    EXPECT_NEAR(smaller.dof, ref.dof, 1e-9 * ref.dof);
    EXPECT_NEAR(smaller.p_one_tail, ref.p_smaller, 1e-9);
    EXPECT_NEAR(larger.p_one_tail, 1.0 - ref.p_smaller, 1e-9);
  }
}

TEST(Welch, AntisymmetricStatistic) {
  RngStream rng(5);
  for (int k = 0; k < 50; ++k) {
    const Vector a = sample(rng, 20, 0.0, 1.0);
    const Vector b = sample(rng, 25, 0.3, 2.0);
    const TTestResult ab = welch_one_tail(a, b, Tail::a_smaller);
    const TTestResult ba = welch_one_tail(b, a, Tail::a_larger);
    EXPECT_EQ(ab.t_statistic, -ba.t_statistic);
    EXPECT_EQ(ab.p_one_tail, ba.p_one_tail);
  }
}

TEST(Welch, DegenerateInputs) {
  EXPECT_EQ(welch_one_tail(Vector{1.0}, Vector{1.0, 2.0}, Tail::a_smaller).p_one_tail, 0.5);
  EXPECT_EQ(welch_one_tail(Vector{3.0, 3.0}, Vector{3.0, 3.0}, Tail::a_smaller).p_one_tail, 0.5);
  const TTestResult r = welch_one_tail(Vector{1.0, 1.0}, Vector{2.0, 2.0}, Tail::a_smaller);
  EXPECT_EQ(r.p_one_tail, 0.0);
  EXPECT_EQ(classify(Vector{1.0, 1.0}, Vector{2.0, 2.0}), Verdict::win);
  EXPECT_EQ(classify(Vector{2.0, 2.0}, Vector{1.0, 1.0}), Verdict::loss);
}

TEST(Classify, AntisymmetricAndMonotone) {
  RngStream rng(8);
  int wins = 0, ties = 0;
  for (int k = 0; k < 300; ++k) {
    const Vector a = sample(rng, 15, 0.0, 1.0);
    const Vector b = sample(rng, 15, rng.uniform(-1.5, 1.5), 1.0);
    const Verdict ab = classify(a, b), ba = classify(b, a);
    EXPECT_EQ(ab == Verdict::win, ba == Verdict::loss);
    EXPECT_EQ(ab == Verdict::tie, ba == Verdict::tie);
    if (ab == Verdict::win) {
      EXPECT_NE(classify(a, b, 0.5), Verdict::loss);
      ++wins;
    }
    if (ab == Verdict::tie) ++ties;
  }
  EXPECT_GT(wins, 0);
  EXPECT_GT(ties, 0);
}

TEST(Classify, ClearlySeparated) {
  const Vector small{1.0, 1.001, 0.999, 1.0005};
  const Vector big{100.0, 100.01, 99.99, 100.005};
  EXPECT_EQ(classify(small, big), Verdict::win);
  EXPECT_EQ(classify(big, small), Verdict::loss);
}

TEST(Verdicts, SymbolsAndNames) {
  EXPECT_EQ(verdict_symbol(Verdict::win), '+');
  EXPECT_EQ(verdict_symbol(Verdict::tie), '=');
  EXPECT_EQ(verdict_symbol(Verdict::loss), '-');
  EXPECT_EQ(verdict_name(Verdict::loss), "loss");
}

ComparisonCell cell(std::string a, std::string p, Verdict v) {
  return ComparisonCell{std::move(a), std::move(p), summarize(Vector{1.0, 2.0}), v};
}

TEST(BuildTable, Totals) {
  const ComparisonTable t = build_table({cell("x", "p1", Verdict::win), cell("x", "p2", Verdict::tie),
                                         cell("x", "p3", Verdict::loss)});
  EXPECT_EQ(t.totals.at("x"), (WinTieLoss{1, 1, 1}));
  EXPECT_EQ(t.problems.size(), 3u);
}

TEST(BuildTable, ConservationAndLayout) {
  std::vector<ComparisonCell> cells;
  const std::vector<Verdict> vs{Verdict::win, Verdict::tie, Verdict::loss};
  for (int p = 0; p < 5; ++p)
    for (int a = 0; a < 3; ++a) cells.push_back(cell("a" + std::to_string(a), "p" + std::to_string(p), vs[(p + a) % 3]));
  const ComparisonTable t = build_table(cells);
  for (const auto& [name, w] : t.totals) EXPECT_EQ(w.win + w.tie + w.loss, 5) << name;
  EXPECT_EQ(t.cell(2, 1).problem, "p2");
  EXPECT_EQ(t.cell(2, 1).algorithm, "a1");
  const std::string tsv = table_to_tsv(t);
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 1 + 15 + 3);
  EXPECT_EQ(tsv, table_to_tsv(build_table(cells)));
}

TEST(BuildTable, MissingAndDuplicateCells) {
  try {
    build_table({cell("x", "p1", Verdict::win), cell("y", "p2", Verdict::tie)});
    FAIL() << "expected ParameterError";
  } catch (const ParameterError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("(y, p1)"), std::string::npos);
    EXPECT_NE(msg.find("(x, p2)"), std::string::npos);
  }
  EXPECT_THROW(build_table({cell("x", "p1", Verdict::win), cell("x", "p1", Verdict::tie)}), ParameterError);
}

TEST(Format, Scientific) {
  EXPECT_EQ(format_sci(0.0), "0.00E+00");
  EXPECT_EQ(format_sci(12345.0), "1.23E+04");
  EXPECT_EQ(format_sci(std::nan("")), "nan");
}

}  // namespace
}  // namespace yiopt

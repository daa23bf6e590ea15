#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vrjp::stats {

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // unbiased, needs n >= 2

/// Standard normal CDF.
double normal_cdf(double z);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Upper-tail p-value of a chi-square statistic with `dof` degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

/// Pearson statistic of observed counts against expected counts.
/// Cells with expected < `min_expected` are pooled into their neighbor.
struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};
ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> expected,
                               double min_expected = 5.0);

/// Two-sample homogeneity chi-square over matched count vectors.
ChiSquareResult chi_square_two_sample(std::span<const double> counts_a,
                                      std::span<const double> counts_b,
                                      double min_expected = 5.0);

/// One-sample Kolmogorov-Smirnov distance against a CDF evaluated per sample.
/// `cdf_values` must correspond to the sorted sample.
double ks_distance_sorted(std::span<const double> cdf_values);

/// Asymptotic KS critical distance at significance alpha (one sample, size n).
double ks_critical(std::size_t n, double alpha);

/// Two-sample KS distance; inputs need not be sorted.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Two-sample KS critical distance at significance alpha.
double ks_two_sample_critical(std::size_t n, std::size_t m, double alpha);

/// Anderson-Darling A^2 against the standard normal (all parameters known).
/// The 1% critical value for this fully specified case is 3.857.
double anderson_darling_normal(std::vector<double> sample);

inline constexpr double kAndersonDarling1pc = 3.857;

/// Lag-k sample autocovariance about the sample mean (biased normalization).
double autocovariance(std::span<const double> xs, std::size_t lag);

/// Lag-k sample autocorrelation.
double autocorrelation(std::span<const double> xs, std::size_t lag);

}  // namespace vrjp::stats

#include "vrjp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vrjp::stats {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance: need n >= 2");
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace {

// Series expansion of P(a,x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x) by modified Lentz, valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
  if (a <= 0.0) throw std::invalid_argument("gamma_p: a must be positive");
  if (x < 0.0) throw std::invalid_argument("gamma_p: x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double chi_square_pvalue(double statistic, int dof) {
  if (dof <= 0) throw std::invalid_argument("chi_square_pvalue: dof must be positive");
  if (statistic <= 0.0) return 1.0;
  return std::clamp(1.0 - gamma_p(0.5 * dof, 0.5 * statistic), 0.0, 1.0);
}

namespace {

// Pool trailing low-expectation cells left so that every cell used in the
// statistic has expected mass at least min_expected.
void pool_cells(std::vector<double>& obs, std::vector<double>& exp_counts,
                double min_expected) {
  for (std::size_t i = obs.size(); i-- > 1;) {
    if (exp_counts[i] < min_expected) {
      exp_counts[i - 1] += exp_counts[i];
      obs[i - 1] += obs[i];
      exp_counts.erase(exp_counts.begin() + static_cast<std::ptrdiff_t>(i));
      obs.erase(obs.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  if (obs.size() >= 2 && exp_counts[0] < min_expected) {
    exp_counts[1] += exp_counts[0];
    obs[1] += obs[0];
    exp_counts.erase(exp_counts.begin());
    obs.erase(obs.begin());
  }
}

}  // namespace

ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> expected,
                               double min_expected) {
  if (observed.size() != expected.size() || observed.empty()) {
    throw std::invalid_argument("chi_square_gof: mismatched inputs");
  }
  std::vector<double> obs(observed.begin(), observed.end());
  std::vector<double> exp_counts(expected.begin(), expected.end());
  pool_cells(obs, exp_counts, min_expected);

  ChiSquareResult r;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (exp_counts[i] <= 0.0) continue;
    const double d = obs[i] - exp_counts[i];
    r.statistic += d * d / exp_counts[i];
  }
  r.dof = static_cast<int>(obs.size()) - 1;
  if (r.dof < 1) {
    r.dof = 0;
    r.p_value = 1.0;
    return r;
  }
  r.p_value = chi_square_pvalue(r.statistic, r.dof);
  return r;
}

ChiSquareResult chi_square_two_sample(std::span<const double> counts_a,
                                      std::span<const double> counts_b,
                                      double min_expected) {
  if (counts_a.size() != counts_b.size() || counts_a.empty()) {
    throw std::invalid_argument("chi_square_two_sample: mismatched inputs");
  }
  double na = 0.0;
  double nb = 0.0;
  for (double x : counts_a) na += x;
  for (double x : counts_b) nb += x;
  if (na <= 0.0 || nb <= 0.0) {
    throw std::invalid_argument("chi_square_two_sample: empty sample");
  }

  // Pool on the combined expectation, applying the same merge to both.
  std::vector<double> a(counts_a.begin(), counts_a.end());
  std::vector<double> b(counts_b.begin(), counts_b.end());
  std::vector<double> pooled(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    pooled[i] = (a[i] + b[i]) * std::min(na, nb) / (na + nb);
  }
  for (std::size_t i = a.size(); i-- > 1;) {
    if (pooled[i] < min_expected) {
      pooled[i - 1] += pooled[i];
      a[i - 1] += a[i];
      b[i - 1] += b[i];
      pooled.erase(pooled.begin() + static_cast<std::ptrdiff_t>(i));
      a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
      b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  ChiSquareResult r;
  const double k_a = std::sqrt(nb / na);
  const double k_b = std::sqrt(na / nb);
  int used = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double tot = a[i] + b[i];
    if (tot <= 0.0) continue;
    const double d = k_a * a[i] - k_b * b[i];
    r.statistic += d * d / tot;
    ++used;
  }
  r.dof = used - 1;
  if (r.dof < 1) {
    r.dof = 0;
    r.p_value = 1.0;
    return r;
  }
  r.p_value = chi_square_pvalue(r.statistic, r.dof);
  return r;
}

double ks_distance_sorted(std::span<const double> cdf_values) {
  const std::size_t n = cdf_values.size();
  if (n == 0) throw std::invalid_argument("ks_distance_sorted: empty sample");
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
    d = std::max(d, std::max(cdf_values[i] - lo, hi - cdf_values[i]));
  }
  return d;
}

namespace {

double ks_coefficient(double alpha) {
  // c(alpha) = sqrt(-ln(alpha/2) / 2); c(0.01) = 1.6276.
  return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

}  // namespace

double ks_critical(std::size_t n, double alpha) {
  return ks_coefficient(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_two_sample_critical(std::size_t n, std::size_t m, double alpha) {
  const double nm = static_cast<double>(n) * static_cast<double>(m);
  return ks_coefficient(alpha) *
         std::sqrt(static_cast<double>(n + m) / nm);
}

double anderson_darling_normal(std::vector<double> sample) {
  const std::size_t n = sample.size();
  if (n < 2) throw std::invalid_argument("anderson_darling_normal: need n >= 2");
  std::sort(sample.begin(), sample.end());

  const double floor_log = std::log(std::numeric_limits<double>::min());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double phi_lo = normal_cdf(sample[i]);
    const double phi_hi = normal_cdf(sample[n - 1 - i]);
    const double log_lo = phi_lo > 0.0 ? std::log(phi_lo) : floor_log;
    const double log_hi = phi_hi < 1.0 ? std::log1p(-phi_hi) : floor_log;
    s += (2.0 * static_cast<double>(i) + 1.0) * (log_lo + log_hi);
  }
  return -static_cast<double>(n) - s / static_cast<double>(n);
}

double autocovariance(std::span<const double> xs, std::size_t lag) {
  if (xs.size() <= lag) throw std::invalid_argument("autocovariance: sample too short");
  const double m = mean(xs);
  double s = 0.0;
  for (std::size_t i = 0; i + lag < xs.size(); ++i) {
    s += (xs[i] - m) * (xs[i + lag] - m);
  }
  return s / static_cast<double>(xs.size() - lag);
}

double autocorrelation(std::span<const double> xs, std::size_t lag) {
  const double c0 = autocovariance(xs, 0);
  if (c0 == 0.0) return 0.0;
  return autocovariance(xs, lag) / c0;
}

}  // namespace vrjp::stats

#include "vrjp/offspring.hpp"

#include <cmath>
#include <stdexcept>

#include "vrjp/quadrature.hpp"

namespace vrjp {

OffspringDistribution::OffspringDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("offspring: empty vector");
  double sum = 0.0;
  for (double& p : probs_) {
    if (p < 0.0) {
      if (p < -1e-9) throw std::invalid_argument("offspring: negative entry");
      p = 0.0;
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("offspring: entries do not sum to 1");
  }
}

double OffspringDistribution::mean() const {
  double m = 0.0;
  for (std::size_t k = 1; k < probs_.size(); ++k) {
    m += static_cast<double>(k) * probs_[k];
  }
  return m;
}

double OffspringDistribution::pgf(double x) const {
  double v = 0.0;
  for (std::size_t k = probs_.size(); k-- > 0;) {
    v = v * x + probs_[k];
  }
  return v;
}

namespace {

// Exact binomial coefficients as doubles; fine for the b this library sees.
double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return c;
}

}  // namespace

OffspringDistribution offspring_p(int b) {
  if (b < 1) throw std::invalid_argument("offspring_p: b must be >= 1");

  // I(d) = int (1+z)/(d+z) e^-z dz, needed for d = 1 .. b+1.
  std::vector<double> shift_integral(static_cast<std::size_t>(b) + 2, 0.0);
  for (int d = 1; d <= b + 1; ++d) {
    shift_integral[static_cast<std::size_t>(d)] = integrate_exp(
        [d](double z) { return (1.0 + z) / (static_cast<double>(d) + z); }, 1.0);
  }

  std::vector<double> probs(static_cast<std::size_t>(b) + 1, 0.0);
  for (int k = 0; k <= b; ++k) {
    // Kahan summation over the alternating sum.
    double sum = 0.0;
    double carry = 0.0;
    for (int j = 0; j <= k; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      const double term = sign * binomial(b, k) * binomial(k, j) *
                          shift_integral[static_cast<std::size_t>(j + b - k + 1)];
      const double y = term - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    }
    if (sum < -1e-9) {
      throw std::runtime_error("offspring_p: alternating-sum cancellation");
    }
    probs[static_cast<std::size_t>(k)] = sum < 0.0 ? 0.0 : sum;
  }
  return OffspringDistribution(std::move(probs));
}

OffspringDistribution offspring_q(const OffspringDistribution& p) {
  const std::size_t k_max = p.max_offspring();
  std::vector<double> q(std::max<std::size_t>(k_max, 1), 0.0);
  q[0] = p[0] + (k_max >= 1 ? p[1] : 0.0);
  for (std::size_t k = 1; k + 1 <= k_max; ++k) {
    q[k] = p[k + 1];
  }
  return OffspringDistribution(std::move(q));
}

}  // namespace vrjp

#include "vrjp/quadrature.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace vrjp {

QuadratureError::QuadratureError(double previous, double last)
    : std::runtime_error([&] {
        std::ostringstream os;
        os.precision(17);
        os << "integrate_exp failed to converge; last two estimates " << previous
           << " and " << last;
        return os.str();
      }()),
      previous_(previous),
      last_(last) {}

namespace {

constexpr int kGaussOrder = 16;

struct GaussRule {
  std::array<double, kGaussOrder> node{};    // on [-1, 1]
  std::array<double, kGaussOrder> weight{};
};

// Legendre nodes by Newton iteration on P_n; weights from the derivative.
GaussRule make_gauss_rule() {
  GaussRule rule;
  const int n = kGaussOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.node[i] = -x;
    rule.node[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weight[i] = w;
    rule.weight[n - 1 - i] = w;
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

}  // namespace

double integrate_exp(const std::function<double(double)>& f, double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("integrate_exp: rate must be positive");

  // Unit-rate substitution u = rate * z; truncation tail below e^-40.
  const double upper = 40.0;
  const auto g = [&](double u) { return f(u / rate) * std::exp(-u) / rate; };
  const GaussRule& rule = gauss_rule();

  const auto panel_sum = [&](int panels) {
    const double h = upper / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double mid = p * h + 0.5 * h;
      double acc = 0.0;
      for (int k = 0; k < kGaussOrder; ++k) {
        acc += rule.weight[k] * g(mid + 0.5 * h * rule.node[k]);
      }
      total += acc * 0.5 * h;
    }
    return total;
  };

  double previous = panel_sum(1);
  for (int panels = 2; panels <= 4096; panels *= 2) {
    const double total = panel_sum(panels);
    if (std::abs(total - previous) < 1e-13) return total;
    previous = total;
  }
  throw QuadratureError(panel_sum(2048), previous);
}

}  // namespace vrjp

#include "vrjp/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "vrjp/quadrature.hpp"

namespace vrjp {

ModelConstants compute_constants(int b) {
  if (b < 1) throw std::invalid_argument("compute_constants: b must be >= 1");

  ModelConstants c;
  c.b = b;
  c.good_prob = integrate_exp([](double z) { return 1.0 / (2.0 + z); }, 1.0);
  c.m = b * c.good_prob;
  if (c.m <= 1.0) throw std::domain_error("subcritical good cluster");

  int zeta = 2;
  while (std::pow(c.m, zeta - 1) * (c.m - 1.0) <= 1.0) {
    ++zeta;
    if (zeta > 10'000) throw std::runtime_error("compute_constants: zeta search overflow");
  }
  c.zeta = zeta;

  c.alpha_lower = integrate_exp(
      [b](double z) { return (1.0 + z) / (b + 1.0 + z); }, 1.0);

  const OffspringDistribution p = offspring_p(b);
  const OffspringDistribution q = offspring_q(p);
  c.beta_b = smallest_fixed_point(PgfExpr::leaf(p));
  c.gamma_b = smallest_fixed_point(
      PgfExpr::compose(PgfExpr::iterate(PgfExpr::leaf(p), zeta - 1), PgfExpr::leaf(q)));

  c.phi_b = (1.0 - std::exp(-static_cast<double>(b))) *
            (1.0 - std::exp(-static_cast<double>(b + 1))) * b / (b + 2.0);
  return c;
}

double two_jump_return_probability(int b) {
  if (b < 1) throw std::invalid_argument("two_jump_return_probability: b must be >= 1");
  return integrate_exp(
      [b](double z) { return (1.0 + z) / (b + 1.0 + z) * b; }, static_cast<double>(b));
}

double entropy(double x, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("entropy: p must lie in (0,1)");
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("entropy: x must lie in [0,1]");
  if (x == 0.0) return -std::log1p(-p);
  if (x == 1.0) return -std::log(p);
  return x * std::log(x / p) + (1.0 - x) * std::log((1.0 - x) / (1.0 - p));
}

double tail_bound_l(long n, double s, const ModelConstants& constants) {
  if (n < 1) throw std::invalid_argument("tail_bound_l: n must be >= 1");
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("tail_bound_l: s must lie in (0,1)");
  const long blocks = n / constants.zeta;
  if (blocks == 0) return 1.0;
  const double center = constants.cut_success_rate();
  if (s >= center) return 1.0;
  return std::exp(-static_cast<double>(blocks) * entropy(std::min(s, center), center));
}

long censoring_buffer(const ModelConstants& constants, double eps, long limit) {
  for (long n = constants.zeta; n <= limit; ++n) {
    if (tail_bound_l(n, 1.0 / static_cast<double>(n), constants) <= eps) return n;
  }
  return -1;
}

double two_vertex_moment(double c, double t, int k) {
  if (c < 0.0) throw std::invalid_argument("two_vertex_moment: c must be >= 0");
  if (t < 1.0) throw std::invalid_argument("two_vertex_moment: t must be >= 1");
  switch (k) {
    case 1:
      return c * t;
    case 2:
      return -c + (c * c + c) * t * t;
    case 3:
      return -3.0 * (c * c + c) * t + (c * c * c + 3.0 * c * c + 3.0 * c) * t * t * t;
    default:
      throw std::invalid_argument("two_vertex_moment: unsupported order");
  }
}

}  // namespace vrjp

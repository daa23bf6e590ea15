#pragma once

#include "vrjp/offspring.hpp"
#include "vrjp/pgf.hpp"

namespace vrjp {

/// Closed-form constants of the b-ary tree model, b >= 3.
struct ModelConstants {
  int b = 0;
  double good_prob = 0.0;    // P(a fixed vertex is good) = int e^-z/(2+z) dz
  double m = 0.0;            // mean offspring of the good cluster, b * good_prob
  int zeta = 0;              // smallest lag >= 2 with m^(zeta-1)(m-1) > 1
  double alpha_lower = 0.0;  // tabulated lower bound on the return probability
  double beta_b = 0.0;       // smallest fixed point of the p-PGF
  double gamma_b = 0.0;      // smallest fixed point of p^(zeta-1) o q
  double phi_b = 0.0;        // (1-e^-b)(1-e^-(b+1)) b/(b+2)

  /// Center of the binomial tail bound, (1 - gamma_b) * phi_b.
  double cut_success_rate() const { return (1.0 - gamma_b) * phi_b; }
};

/// Fills every field. Throws std::domain_error("subcritical good cluster")
/// when m <= 1 (the supercritical hypothesis fails, e.g. b <= 2).
ModelConstants compute_constants(int b);

/// Probability that the process returns to the root in exactly two jumps:
/// int (1+z)/(b+1+z) b e^-bz dz. This is the integrand the return-probability
/// lemma actually bounds with; the tabulated alpha_lower reported alongside
/// the other constants is the rate-1 variant int (1+z)/(b+1+z) e^-z dz that
/// the literature quotes for b = 3 (0.3809...).
double two_jump_return_probability(int b);

/// Relative entropy H(x | p) = x ln(x/p) + (1-x) ln((1-x)/(1-p)), extended
/// by continuity with H(0|p) = ln(1/(1-p)) and H(1|p) = ln(1/p).
/// Nonnegative, zero exactly at x = p, decreasing on (0, p).
double entropy(double x, double p);

/// Tail bound P(l_1 >= n) <= exp{ -floor(n/zeta) * inf_{x in [0,s]} H(x | c) }
/// with c = (1-gamma_b) phi_b. Since H(.|c) decreases on (0,c), the infimum
/// sits at min(s, c). Returns 1 when n < zeta or s >= c.
double tail_bound_l(long n, double s, const ModelConstants& constants);

/// Smallest n with tail_bound_l(n, 1/n) <= eps; -1 if none below `limit`.
long censoring_buffer(const ModelConstants& constants, double eps, long limit = 1'000'000);

/// Moments of the two-vertex local time: with initial weight c on the silent
/// vertex and unit weight on the occupied one, E[L(0, xi(t))^k] solves the
/// moment ODE family and equals
///   k=1:  c t
///   k=2:  -c + (c^2 + c) t^2
///   k=3:  -3(c^2 + c) t + (c^3 + 3c^2 + 3c) t^3
/// for t >= 1. Throws std::invalid_argument for other k.
double two_vertex_moment(double c, double t, int k);

}  // namespace vrjp

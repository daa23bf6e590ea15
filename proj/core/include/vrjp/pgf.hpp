#pragma once

#include <memory>
#include <stdexcept>

#include "vrjp/offspring.hpp"

namespace vrjp {

/// Composition tree over offspring distributions.
///
/// `compose(f, g)` is the random-sum law (V ~ f individuals each spawning
/// a g-distributed count): its generating function is G_f(G_g(x)).
/// `iterate(base, n)` is the n-fold self-composition; iterate(base, 0) is the
/// identity (one individual, G(x) = x).
class PgfExpr {
 public:
  static PgfExpr leaf(OffspringDistribution dist);
  static PgfExpr compose(PgfExpr outer, PgfExpr inner);
  static PgfExpr iterate(PgfExpr base, int n);

  /// Point evaluation of the generating function. Maps [0,1] into [0,1].
  double eval(double x) const;

  /// Exact mean by the chain rule: mean(compose) = mean(outer)*mean(inner).
  double mean() const;

 private:
  struct Node;
  explicit PgfExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline double pgf_eval(const PgfExpr& expr, double x) { return expr.eval(x); }

/// Raised when the monotone fixed-point iteration hits its cap with the
/// residual still above 1e-10; carries the bracketing interval.
class FixedPointError : public std::runtime_error {
 public:
  FixedPointError(double lower, double upper);
  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  double lower_;
  double upper_;
};

/// Smallest root of x = G(x) on [0,1], by the monotone iteration
/// x_{n+1} = G(x_n) from x_0 = 0. Starting at zero the iterates increase and
/// stay below every fixed point, so the limit is the smallest one. Stops when
/// the step falls below 1e-13 or after 1e6 iterations (failure if the gap is
/// still above 1e-10).
double smallest_fixed_point(const PgfExpr& expr);

}  // namespace vrjp

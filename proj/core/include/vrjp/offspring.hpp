#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vrjp {

/// Finite probability vector over {0, ..., K} with PGF evaluation.
class OffspringDistribution {
 public:
  /// Validates nonnegativity (entries in [-1e-9, 0) are clamped to zero)
  /// and total mass 1 within 1e-10; throws std::invalid_argument otherwise.
  explicit OffspringDistribution(std::vector<double> probs);

  std::size_t max_offspring() const { return probs_.size() - 1; }
  double operator[](std::size_t k) const { return probs_[k]; }
  std::span<const double> probs() const { return probs_; }

  double mean() const;

  /// Generating function sum_k p_k x^k, by Horner.
  double pgf(double x) const;

 private:
  std::vector<double> probs_;
};

/// Offspring law of the good-vertex cluster on the b-ary tree:
///   p_k = sum_{j=0}^{k} C(b,k) C(k,j) (-1)^j I(j + b - k + 1),
/// with I(d) = integral of (1+z)/(d+z) e^-z over [0, infinity).
///
/// The inner integrals are computed once per shift d and reused; the
/// alternating sum runs through compensated summation because the binomial
/// coefficients grow. A computed entry below -1e-9 aborts with
/// std::runtime_error (cancellation); entries in [-1e-9, 0) clamp to zero.
OffspringDistribution offspring_p(int b);

/// First-child-removed law: q_0 = p_0 + p_1, q_k = p_{k+1} for k >= 1.
OffspringDistribution offspring_q(const OffspringDistribution& p);

}  // namespace vrjp

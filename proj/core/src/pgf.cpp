#include "vrjp/pgf.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <variant>

namespace vrjp {

struct PgfExpr::Node {
  struct Leaf {
    OffspringDistribution dist;
  };
  struct Compose {
    std::shared_ptr<const Node> outer;
    std::shared_ptr<const Node> inner;
  };
  struct Iterate {
    std::shared_ptr<const Node> base;
    int count;
  };
  std::variant<Leaf, Compose, Iterate> body;

  double eval(double x) const {
    if (const auto* leaf = std::get_if<Leaf>(&body)) {
      return leaf->dist.pgf(x);
    }
    if (const auto* comp = std::get_if<Compose>(&body)) {
      return comp->outer->eval(comp->inner->eval(x));
    }
    const auto& it = std::get<Iterate>(body);
    double v = x;
    for (int i = 0; i < it.count; ++i) v = it.base->eval(v);
    return v;
  }

  double mean() const {
    if (const auto* leaf = std::get_if<Leaf>(&body)) {
      return leaf->dist.mean();
    }
    if (const auto* comp = std::get_if<Compose>(&body)) {
      return comp->outer->mean() * comp->inner->mean();
    }
    const auto& it = std::get<Iterate>(body);
    return std::pow(it.base->mean(), it.count);
  }
};

PgfExpr PgfExpr::leaf(OffspringDistribution dist) {
  return PgfExpr(std::make_shared<Node>(Node{Node::Leaf{std::move(dist)}}));
}

PgfExpr PgfExpr::compose(PgfExpr outer, PgfExpr inner) {
  return PgfExpr(std::make_shared<Node>(
      Node{Node::Compose{std::move(outer.node_), std::move(inner.node_)}}));
}

PgfExpr PgfExpr::iterate(PgfExpr base, int n) {
  if (n < 0) throw std::invalid_argument("PgfExpr::iterate: negative count");
  return PgfExpr(std::make_shared<Node>(Node{Node::Iterate{std::move(base.node_), n}}));
}

double PgfExpr::eval(double x) const { return node_->eval(x); }

double PgfExpr::mean() const { return node_->mean(); }

FixedPointError::FixedPointError(double lower, double upper)
    : std::runtime_error([&] {
        std::ostringstream os;
        os.precision(17);
        os << "smallest_fixed_point: iteration cap reached, root bracketed in ["
           << lower << ", " << upper << "]";
        return os.str();
      }()),
      lower_(lower),
      upper_(upper) {}

double smallest_fixed_point(const PgfExpr& expr) {
  double x = 0.0;
  for (long n = 0; n < 1'000'000; ++n) {
    const double next = expr.eval(x);
    if (std::abs(next - x) < 1e-13) return next;
    x = next;
  }
  const double next = expr.eval(x);
  if (std::abs(next - x) <= 1e-10) return next;
  // The iterates from 0 stay below the smallest root, so [x, 1] brackets it.
  throw FixedPointError(x, 1.0);
}

}  // namespace vrjp

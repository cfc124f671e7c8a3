#include "rmpredict/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "rmpredict/errors.hpp"

namespace rmp::tnorm {

TruthValue::TruthValue(double v) : value_(v) {
  if (!(v >= -tolerance && v <= 1 + tolerance)) {
    throw DomainError("truth value " + std::to_string(v) + " outside [0,1]");
  }
  value_ = std::clamp(v, 0.0, 1.0);
}

double t_norm_L(TruthValue x, TruthValue y) { return std::max(0.0, x + y - 1.0); }
double s_norm_L(TruthValue x, TruthValue y) { return std::min(1.0, x + y); }
double impl_L(TruthValue x, TruthValue y) { return std::min(1.0, 1.0 - x + y); }
double neg_L(TruthValue x) { return 1.0 - x; }
double weak_and(TruthValue x, TruthValue y) { return std::min<double>(x, y); }
double weak_or(TruthValue x, TruthValue y) { return std::max<double>(x, y); }

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::commutativity: return "commutativity";
    case Axiom::associativity: return "associativity";
    case Axiom::monotonicity: return "monotonicity";
    case Axiom::boundary: return "boundary";
  }
  return "?";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(axiom) << " fails at x=" << x << ", y=" << y;
  if (axiom == Axiom::associativity) os << ", z=" << z;
  if (axiom == Axiom::monotonicity) os << ", x2=" << z;
  return os.str();
}

std::optional<Violation> check_t_norm(const BinaryOp& op, std::size_t n) {
  if (n == 0) throw DomainError("grid denominator must be positive");
  std::vector<double> grid(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid[i] = static_cast<double>(i) / static_cast<double>(n);
  const auto near = [](double a, double b) { return std::abs(a - b) <= tolerance; };

  // Tabulate once; associativity re-applies op to table values, which need
  // not lie on the grid.
  std::vector<double> table((n + 1) * (n + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) table[i * (n + 1) + j] = op(grid[i], grid[j]);
  const auto at = [&](std::size_t i, std::size_t j) { return table[i * (n + 1) + j]; };

  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (!near(at(i, j), at(j, i))) return Violation{Axiom::commutativity, grid[i], grid[j]};

  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t k = 0; k <= n; ++k) {
        const double left = op(grid[i], at(j, k));
        const double right = op(at(i, j), grid[k]);
        if (!near(left, right)) return Violation{Axiom::associativity, grid[i], grid[j], grid[k]};
      }

  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (at(i, j) > at(i + 1, j) + tolerance) {
        return Violation{Axiom::monotonicity, grid[i], grid[j], grid[i + 1]};
      }

  for (std::size_t i = 0; i <= n; ++i) {
    if (!near(at(i, 0), 0.0)) return Violation{Axiom::boundary, grid[i], 0.0};
    if (!near(at(i, n), grid[i])) return Violation{Axiom::boundary, grid[i], 1.0};
  }
  return std::nullopt;
}

const char* to_string(Connective c) {
  switch (c) {
    case Connective::sum: return "sum";
    case Connective::strong_sum: return "strong_sum";
    case Connective::product: return "product";
    case Connective::strong_product: return "strong_product";
    case Connective::implication: return "implication";
    case Connective::negation: return "negation";
  }
  return "?";
}

double propagate(TruthValue r, TruthValue s, Connective c) {
  switch (c) {
    case Connective::sum: return weak_or(r, s);
    case Connective::strong_sum: return s_norm_L(r, s);
    case Connective::product: return weak_and(r, s);
    case Connective::strong_product: return t_norm_L(r, s);
    // Same degree as the strong product, as the rule is stated.
    case Connective::implication: return t_norm_L(r, s);
    case Connective::negation: return neg_L(r);
  }
  throw DomainError("unknown connective");
}

double propagate(const Degree& r, const Degree& s, Connective c) {
  return propagate(TruthValue(r.to_double()), TruthValue(s.to_double()), c);
}

}  // namespace rmp::tnorm

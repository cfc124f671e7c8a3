#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "rmpredict/mereology.hpp"

namespace rmp::tnorm {

inline constexpr double tolerance = 1e-9;

// Truth value in [0, 1]. Construction outside the interval throws DomainError.
class TruthValue {
 public:
  TruthValue(double v);  // NOLINT(google-explicit-constructor)
  double value() const { return value_; }
  operator double() const { return value_; }  // NOLINT(google-explicit-constructor)

 private:
  double value_;
};

// Lukasiewicz family.
double t_norm_L(TruthValue x, TruthValue y);   // max{0, x+y-1}
double s_norm_L(TruthValue x, TruthValue y);   // min{1, x+y}
double impl_L(TruthValue x, TruthValue y);     // min{1, 1-x+y}
double neg_L(TruthValue x);                    // 1-x
double weak_and(TruthValue x, TruthValue y);   // min
double weak_or(TruthValue x, TruthValue y);    // max

using BinaryOp = std::function<double(double, double)>;

enum class Axiom { commutativity, associativity, monotonicity, boundary };

const char* to_string(Axiom a);

struct Violation {
  Axiom axiom;
  double x = 0;
  double y = 0;
  double z = 0;  // third grid point (associativity) or x2 (monotonicity)
  std::string describe() const;
};

// Checks the four t-norm conditions on the grid {0, 1/n, ..., 1}, in the
// order commutativity, associativity, monotonicity, boundary. Returns the
// first violation, or nullopt when op passes everywhere.
std::optional<Violation> check_t_norm(const BinaryOp& op, std::size_t grid_denominator);

enum class Connective { sum, strong_sum, product, strong_product, implication, negation };

const char* to_string(Connective c);

// Degree assigned to c(a, b) given P_r(c, a) and P_s(c, b). Negation ignores s.
double propagate(TruthValue r, TruthValue s, Connective c);
// Exact degrees from mereo_algebra are converted at this boundary.
double propagate(const Degree& r, const Degree& s, Connective c);

}  // namespace rmp::tnorm

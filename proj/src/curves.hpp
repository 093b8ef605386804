#ifndef CREDEQ_CURVES_HPP
#define CREDEQ_CURVES_HPP

#include <span>
#include <string>

namespace credeq {

enum class Cyclicality { pro, counter, constant, unclassified };

// A scalar curve of the dividend level: either a default intensity lambda(x)
// (must be >= 0) or a short rate r(x). Three closed-form families cover every
// scenario in the suite:
//   constant:       level
//   exp_decay:      scale * exp(-rate * x)        (counter-cyclical)
//   exp_saturating: scale * (1 - exp(-rate * x))  (pro-cyclical)
struct CurveSpec {
  enum class Kind { constant, exp_decay, exp_saturating };

  Kind kind = Kind::constant;
  double level = 0.0; // constant
  double scale = 0.0; // exp families
  double rate = 0.0;  // exp families

  double operator()(double x) const;

  static CurveSpec make_constant(double level);
  static CurveSpec make_exp_decay(double scale, double rate);
  static CurveSpec make_exp_saturating(double scale, double rate);
};

// Certifies the cyclicality tag by a monotonicity scan over the given grid.
// "pro" = nondecreasing in x, "counter" = nonincreasing; constants satisfy both
// and are tagged constant.
Cyclicality certify_cyclicality(const CurveSpec& curve, std::span<const double> x_grid);

std::string to_string(Cyclicality c);

// Throws std::invalid_argument if the curve takes a negative value on the grid
// (intensity curves must be nonnegative).
void require_nonnegative(const CurveSpec& curve, std::span<const double> x_grid,
                         const std::string& name);

} // namespace credeq

#endif

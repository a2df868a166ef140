#pragma once

#include <cstddef>
#include <functional>

#include "abel_center/centers.hpp"

namespace abel_center {

struct NumericConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_steps = 1'000'000;
  /// |y| beyond this aborts with BlowUp.
  double blowup = 1e6;

  /// Throws InputError for non-positive tolerances or bounds.
  void validate() const;
};

/// y(x1) for dy/dx = rhs(x, y), y(x0) = y0, by an adaptive embedded
/// Runge-Kutta-Fehlberg 7(8) pair. x1 < x0 integrates backwards.
/// Throws BlowUp or StepLimitExceeded.
double integrate_scalar(const std::function<double(double, double)>& rhs, double x0, double x1, double y0,
                        const NumericConfig& cfg = {});

/// y(x1) for the solution of the Abel equation with y(x0) = y0.
double transport(const AbelEquation& eq, double y0, const NumericConfig& cfg = {});
/// y(x0) for the solution with y(x1) = y1.
double transport_reverse(const AbelEquation& eq, double y1, const NumericConfig& cfg = {});

}  // namespace abel_center

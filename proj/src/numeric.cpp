#include "abel_center/numeric.hpp"

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "abel_center/errors.hpp"

namespace abel_center {

namespace odeint = boost::numeric::odeint;

void NumericConfig::validate() const {
  if (!(abs_tol > 0) || !(rel_tol > 0)) throw InputError("tolerances must be positive");
  if (max_steps == 0) throw InputError("max_steps must be positive");
  if (!(blowup > 0)) throw InputError("blow-up bound must be positive");
}

double integrate_scalar(const std::function<double(double, double)>& rhs, double x0, double x1, double y0,
                        const NumericConfig& cfg) {
  cfg.validate();
  using State = std::array<double, 1>;
  auto system = [&](const State& y, State& dydx, double x) { dydx[0] = rhs(x, y[0]); };
  auto stepper = odeint::make_controlled(cfg.abs_tol, cfg.rel_tol, odeint::runge_kutta_fehlberg78<State>());

  State y{y0};
  double x = x0;
  const double span = x1 - x0;
  if (span == 0.0) return y0;
  const double dir = span > 0 ? 1.0 : -1.0;
  double dx = span / 100.0;
  for (std::size_t step = 0; step < cfg.max_steps; ++step) {
    const double remaining = x1 - x;
    if (dir * remaining <= 0.0) return y[0];
    if (dir * (dx - remaining) > 0.0) dx = remaining;
    const double before = x;
    if (stepper.try_step(system, y, x, dx) == odeint::success) {
      if (!std::isfinite(y[0]) || std::abs(y[0]) > cfg.blowup) throw BlowUp(x);
      // The last step may land a rounding error short of x1.
      if (std::abs(x1 - x) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x1))) {
        return y[0];
      }
    } else if (x == before && std::abs(dx) < std::numeric_limits<double>::min()) {
      throw BlowUp(x);
    }
  }
  throw StepLimitExceeded("integrator exceeded " + std::to_string(cfg.max_steps) + " steps");
}

namespace {

std::function<double(double, double)> abel_rhs(const AbelEquation& eq) {
  std::vector<std::vector<double>> species;
  for (const auto& a : eq.species) {
    std::vector<double> c;
    for (const auto& r : a.coefficients()) c.push_back(r.get_d());
    species.push_back(std::move(c));
  }
  return [species = std::move(species)](double x, double y) {
    double sum = 0.0;
    double ypow = y * y;
    for (const auto& c : species) {
      double v = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
      sum += v * ypow;
      ypow *= y;
    }
    return -sum;
  };
}

}  // namespace

double transport(const AbelEquation& eq, double y0, const NumericConfig& cfg) {
  return integrate_scalar(abel_rhs(eq), eq.interval.x0.get_d(), eq.interval.x1.get_d(), y0, cfg);
}

double transport_reverse(const AbelEquation& eq, double y1, const NumericConfig& cfg) {
  return integrate_scalar(abel_rhs(eq), eq.interval.x1.get_d(), eq.interval.x0.get_d(), y1, cfg);
}

}  // namespace abel_center

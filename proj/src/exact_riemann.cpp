#include "atmofv/exact_riemann.hpp"

#include "atmofv/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace atmofv {

ExactRiemannSolution::ExactRiemannSolution(const GasState1D& left, const GasState1D& right,
                                           double gamma)
    : L_(left), R_(right), gamma_(gamma) {
  if (!(left.rho > 0.0) || !(left.p > 0.0) || !(right.rho > 0.0) || !(right.p > 0.0)) {
    throw DomainError("exact Riemann solver needs positive densities and pressures");
  }
  aL_ = std::sqrt(gamma_ * L_.p / L_.rho);
  aR_ = std::sqrt(gamma_ * R_.p / R_.rho);
  const double du = R_.u - L_.u;
  if (2.0 / (gamma_ - 1.0) * (aL_ + aR_) <= du) {
    std::ostringstream os;
    os << "Riemann data generate vacuum (du=" << du << ")";
    throw VacuumError(os.str());
  }

  // Two-rarefaction guess, which is exact for two rarefactions and a safe
  // start otherwise.
  const double z = (gamma_ - 1.0) / (2.0 * gamma_);
  double p = std::pow((aL_ + aR_ - 0.5 * (gamma_ - 1.0) * du) /
                          (aL_ / std::pow(L_.p, z) + aR_ / std::pow(R_.p, z)),
                      1.0 / z);
  p = std::max(p, 1e-14);
  for (int it = 0; it < 100; ++it) {
    const PressureFunction fl = pressure_function(p, L_, aL_);
    const PressureFunction fr = pressure_function(p, R_, aR_);
    const double p_new = std::max(p - (fl.f + fr.f + du) / (fl.df + fr.df), 1e-14);
    const double change = 2.0 * std::abs(p_new - p) / (p_new + p);
    p = p_new;
    if (change < 1e-15) break;
  }
  p_star_ = p;
  u_star_ = 0.5 * (L_.u + R_.u) +
            0.5 * (pressure_function(p, R_, aR_).f - pressure_function(p, L_, aL_).f);
}

ExactRiemannSolution::PressureFunction ExactRiemannSolution::pressure_function(
    double p, const GasState1D& s, double a) const {
  const double g = gamma_;
  if (p > s.p) {
    const double A = 2.0 / ((g + 1.0) * s.rho);
    const double B = (g - 1.0) / (g + 1.0) * s.p;
    const double q = std::sqrt(A / (p + B));
    return {(p - s.p) * q, q * (1.0 - 0.5 * (p - s.p) / (B + p))};
  }
  const double ratio = p / s.p;
  return {2.0 * a / (g - 1.0) * (std::pow(ratio, (g - 1.0) / (2.0 * g)) - 1.0),
          1.0 / (s.rho * a) * std::pow(ratio, -(g + 1.0) / (2.0 * g))};
}

GasState1D ExactRiemannSolution::sample(double xi) const {
  const double g = gamma_;
  const double gm = (g - 1.0) / (g + 1.0);
  if (xi <= u_star_) {
    const GasState1D& s = L_;
    const double a = aL_;
    if (p_star_ > s.p) {
      const double S = s.u - a * std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / s.p + (g - 1.0) / (2.0 * g));
      if (xi <= S) return s;
      const double ratio = p_star_ / s.p;
      return {s.rho * (ratio + gm) / (gm * ratio + 1.0), u_star_, p_star_};
    }
    const double head = s.u - a;
    if (xi <= head) return s;
    const double a_star = a * std::pow(p_star_ / s.p, (g - 1.0) / (2.0 * g));
    const double tail = u_star_ - a_star;
    if (xi >= tail) return {s.rho * std::pow(p_star_ / s.p, 1.0 / g), u_star_, p_star_};
    const double c = 2.0 / (g + 1.0) + gm / a * (s.u - xi);
    return {s.rho * std::pow(c, 2.0 / (g - 1.0)), 2.0 / (g + 1.0) * (a + 0.5 * (g - 1.0) * s.u + xi),
            s.p * std::pow(c, 2.0 * g / (g - 1.0))};
  }
  const GasState1D& s = R_;
  const double a = aR_;
  if (p_star_ > s.p) {
    const double S = s.u + a * std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / s.p + (g - 1.0) / (2.0 * g));
    if (xi >= S) return s;
    const double ratio = p_star_ / s.p;
    return {s.rho * (ratio + gm) / (gm * ratio + 1.0), u_star_, p_star_};
  }
  const double head = s.u + a;
  if (xi >= head) return s;
  const double a_star = a * std::pow(p_star_ / s.p, (g - 1.0) / (2.0 * g));
  const double tail = u_star_ + a_star;
  if (xi <= tail) return {s.rho * std::pow(p_star_ / s.p, 1.0 / g), u_star_, p_star_};
  const double c = 2.0 / (g + 1.0) - gm / a * (s.u - xi);
  return {s.rho * std::pow(c, 2.0 / (g - 1.0)), 2.0 / (g + 1.0) * (-a + 0.5 * (g - 1.0) * s.u + xi),
          s.p * std::pow(c, 2.0 * g / (g - 1.0))};
}

}  // namespace atmofv

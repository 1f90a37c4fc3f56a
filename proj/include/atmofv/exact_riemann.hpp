#pragma once

namespace atmofv {

/// One-dimensional gas state for the exact Riemann problem.
struct GasState1D {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

/// Exact solution of the 1D Euler Riemann problem for an ideal gas
/// (Newton iteration on the pressure function, self-similar sampling).
class ExactRiemannSolution {
 public:
  /// Throws DomainError for non-positive data and VacuumError when the
  /// data generate vacuum.
  ExactRiemannSolution(const GasState1D& left, const GasState1D& right, double gamma);

  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }

  /// State at similarity coordinate xi = (x - x_diaphragm) / t.
  GasState1D sample(double xi) const;

 private:
  struct PressureFunction {
    double f;
    double df;
  };
  PressureFunction pressure_function(double p, const GasState1D& s, double a) const;

  GasState1D L_;
  GasState1D R_;
  double gamma_;
  double aL_;
  double aR_;
  double p_star_ = 0.0;
  double u_star_ = 0.0;
};

}  // namespace atmofv

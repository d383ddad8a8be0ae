#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gdec {

struct QuadratureResult {
  double value{0.0};
  double abs_error_estimate{0.0};
  long evaluations{0};
  bool converged{true};
};

/// Axis-aligned integration rectangle [ax,bx] x [ay,by].
struct Rect {
  double ax, bx, ay, by;
};

/// Adaptive 1D quadrature on [a,b] with nested Gauss(7)/Kronrod(15) panels,
/// error per panel |K15 - G7|, deterministic depth-first bisection.
///
/// max_frequency > 0 declares the fastest oscillation of f; initial panels
/// are then no wider than pi/max_frequency (half the shortest period).
/// Reversed limits negate the result. If the subdivision cap is reached the
/// best value is returned with converged = false.
QuadratureResult integrate_1d(const std::function<double(double)>& f,
                              double a, double b, double rel_tol,
                              double max_frequency = 0.0);

/// Adaptive tensor-product quadrature on a single rectangle. Nested
/// 7x7 / 15x15 rule, bisection of the longer side.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const Rect& r, double rel_tol,
                              double max_frequency = 0.0);

/// Sum of integrate_2d over explicit subdomains. Callers align subdomain
/// boundaries with integrand kinks (e.g. a trajectory corner).
QuadratureResult integrate_2d_piecewise(
    const std::function<double(double, double)>& f,
    std::span<const Rect> subdomains, double rel_tol,
    double max_frequency = 0.0);

/// Bisection root finder on [lo,hi]; requires a sign change, stops when the
/// bracket is narrower than tol (or cannot shrink further).
/// Throws std::invalid_argument if g(lo)*g(hi) > 0.
double find_root_bracketed(const std::function<double(double)>& g, double lo,
                           double hi, double tol);

struct GaussNode {
  double x;  ///< abscissa on [-1,1]
  double w;  ///< weight
};

/// Gauss-Legendre nodes and weights on [-1,1], exact for degree <= 2n-1.
std::vector<GaussNode> gauss_legendre(int n);

}  // namespace gdec

#pragma once

#include <functional>
#include <vector>

namespace gyrokit::quadrature {

/// Integrand over (0,1) receiving both u and 1-u at full precision, so that
/// endpoint factors like (1-u)^(-1/2) do not lose digits near u = 1.
using Endpoint01Fn = std::function<double(double u, double one_minus_u)>;

/// Tanh-sinh (double exponential) quadrature on (0,1).  Handles integrable
/// endpoint singularities u^(p-1), (1-u)^(q-1) with p,q > 0.
double tanh_sinh_01(const Endpoint01Fn& f, double abs_tol = 1e-13);

/// Adaptive Gauss-Kronrod 15(7) on [a,b] for smooth integrands.
double gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-12);

/// Adaptive Simpson on [a,b]; split_points are treated as panel boundaries
/// (used to isolate removable singularities before refinement).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-11,
                        const std::vector<double>& split_points = {});

}  // namespace gyrokit::quadrature

#pragma once

#include <cstddef>
#include <functional>

namespace skp::quadrature {

// Adaptive Simpson with local error estimate err = (S_fine - S_coarse)/15.
// Subdivides until |err| <= max(abs_tol, rel_tol*|whole|) per interval.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10, double abs_tol = 0.0, int max_depth = 52);

// Composite trapezoid on n equispaced points (n >= 2). Reference-grade
// integrator for oracle comparisons, not for production use.
double trapezoid(const std::function<double(double)>& f, double a, double b, std::size_t n);

// Central difference with one Richardson level: (4 D(h/2) - D(h)) / 3.
double derivative_richardson(const std::function<double(double)>& f, double x, double h);

// Second derivative, central stencil at steps h and h/2, Richardson-combined.
double second_derivative_richardson(const std::function<double(double)>& f, double x, double h);

} // namespace skp::quadrature

#pragma once

#include <complex>

// Self-contained special functions used by the closed-form partition
// function: real and imaginary error functions and the terminating
// Gauss hypergeometric series.

namespace skp::specfun {

using Complex = std::complex<double>;

// erf(x) = (2/sqrt(pi)) * integral_0^x exp(-t^2) dt.
// Absolute accuracy <= 1e-12 over the whole real line.
double erf_real(double x);

// erfc(x) = 1 - erf(x), computed without cancellation for x > 0.
double erfc_real(double x);

// erfi(x) = (2/sqrt(pi)) * integral_0^x exp(+t^2) dt = -i erf(ix).
// Relative accuracy <= 1e-10 where the result is representable.
// Throws std::overflow_error for |x| > 30; for |x| in (~26.6, 30] the
// true value exceeds the double range and +/-inf is returned.
double erfi(double x);

// erf on the real or imaginary axis only (all the closed form needs).
// Throws std::invalid_argument for general complex arguments.
Complex erf_axis(Complex z);

// Terminating Gauss series 2F1(-n, b; c; s) = sum_{k=0}^{n}
// (-n)_k (b)_k / (c)_k * s^k / k!, evaluated as the exact finite sum.
// Throws std::domain_error when c is a non-positive integer > -n
// (a Pochhammer pole inside the sum).
double gauss_2f1_terminating(int n, double b, double c, double s);

} // namespace skp::specfun

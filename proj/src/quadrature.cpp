#include "skp/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace skp::quadrature {

namespace {

double simpson(double h, double fa, double fm, double fb) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

double adapt(const std::function<double(double)>& f, double a, double m, double b,
             double fa, double fm, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(m - a, fa, flm, fm);
    const double right = simpson(b - m, fm, frm, fb);
    const double err = (left + right - whole) / 15.0;
    if (std::fabs(err) <= tol || depth <= 0)
        return left + right + err;
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_tol, int max_depth) {
    if (!(b > a)) {
        if (b == a) return 0.0;
        throw std::domain_error("adaptive_simpson: b < a");
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(b - a, fa, fm, fb);
    const double tol = std::max(abs_tol, rel_tol * std::fabs(whole));
    return adapt(f, a, m, b, fa, fm, fb, whole, std::max(tol, 5e-324), max_depth);
}

double trapezoid(const std::function<double(double)>& f, double a, double b, std::size_t n) {
    if (n < 2) throw std::domain_error("trapezoid: need at least 2 points");
    const double h = (b - a) / static_cast<double>(n - 1);
    double sum = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i + 1 < n; ++i)
        sum += f(a + h * static_cast<double>(i));
    return sum * h;
}

double derivative_richardson(const std::function<double(double)>& f, double x, double h) {
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

double second_derivative_richardson(const std::function<double(double)>& f, double x, double h) {
    const double fx = f(x);
    const double d1 = (f(x + h) - 2.0 * fx + f(x - h)) / (h * h);
    const double hh = 0.5 * h;
    const double d2 = (f(x + hh) - 2.0 * fx + f(x - hh)) / (hh * hh);
    return (4.0 * d2 - d1) / 3.0;
}

} // namespace skp::quadrature

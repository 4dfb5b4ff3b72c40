#include "dim1.hpp"

#include <cmath>

namespace srbm {

double green_1d(const Dim1Params& q, double x) {
    q.validate();
    if (!(q.mu > 0.0)) fail(ErrorCode::Domain, "green_1d requires mu > 0 (transient)");
    if (x < 0.0) return 0.0;
    if (x >= q.x0) return 1.0 / q.mu;
    return std::exp(2.0 * q.mu / q.sigma2 * (x - q.x0)) / q.mu;
}

Complex psi_1d(const Dim1Params& q, Complex theta) {
    q.validate();
    if (!(q.mu > 0.0)) fail(ErrorCode::Domain, "psi_1d requires mu > 0 (transient)");
    if (!(theta.real() < 0.0))
        fail(ErrorCode::Domain, "psi_1d requires Re theta < 0");
    double thetaStar = -2.0 * q.mu / q.sigma2;
    Complex den = q.mu * theta + 0.5 * q.sigma2 * theta * theta;
    if (std::abs(theta - Complex(thetaStar)) < 1e-9 * std::abs(thetaStar)) {
        // removable: numerator and denominator share the zero at theta*
        double e = std::exp(thetaStar * q.x0);
        return Complex(e * (q.x0 + q.sigma2 / (2.0 * q.mu)) / q.mu, 0.0);
    }
    Complex num = std::exp(theta * q.x0) +
                  theta * (q.sigma2 / (2.0 * q.mu)) * std::exp(thetaStar * q.x0);
    return -num / den;
}

double pde_residual_1d(const Dim1Params& q, double x, double h) {
    if (x == q.x0) fail(ErrorCode::Domain, "residual undefined at the source point");
    if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "h must be positive");
    double gm = green_1d(q, x - h), g0 = green_1d(q, x), gp = green_1d(q, x + h);
    double d2 = (gp - 2.0 * g0 + gm) / (h * h);
    double d1 = (gp - gm) / (2.0 * h);
    return 0.5 * q.sigma2 * d2 - q.mu * d1;
}

double pde_boundary_residual_1d(const Dim1Params& q, double h) {
    if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "h must be positive");
    double g0 = green_1d(q, 0.0), g1 = green_1d(q, h);
    double d1 = (g1 - g0) / h;  // one-sided
    return q.sigma2 * d1 - 2.0 * q.mu * g0;
}

}  // namespace srbm

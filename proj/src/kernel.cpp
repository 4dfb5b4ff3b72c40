#include "kernel.hpp"

#include <cmath>

namespace srbm {

namespace {

// sqrt of det*(x - xm)*(xp - x): analytic off (-inf,xm] u [xp,inf), positive
// on (xm,xp). On the lower cut itself the principal-branch factors give
// +i sqrt|.|, i.e. the limit from above; Theta2^- then has Im <= 0 there.
Complex sqrt_two_cuts(double det, double xm, double xp, Complex x) {
    return std::sqrt(det) * std::sqrt(x - xm) * std::sqrt(Complex(xp) - x);
}

}  // namespace

KernelGeometry branch_points(const ModelParams& p) {
    p.validate();
    KernelGeometry k;
    double det = p.detSigma();

    double b1 = p.mu2 * p.sigma12 - p.mu1 * p.sigma22;
    double r1 = std::sqrt(b1 * b1 + p.mu2 * p.mu2 * det);
    k.theta1Minus = (b1 - r1) / det;
    k.theta1Plus = (b1 + r1) / det;

    double b2 = p.mu1 * p.sigma12 - p.mu2 * p.sigma11;
    double r2 = std::sqrt(b2 * b2 + p.mu1 * p.mu1 * det);
    k.theta2Minus = (b2 - r2) / det;
    k.theta2Plus = (b2 + r2) / det;

    k.beta = std::acos(-p.sigma12 / std::sqrt(p.sigma11 * p.sigma22));

    // thetaStar: substitute t1 = -r21 t2 into gamma; nonzero root of
    // q/2 t2^2 + (mu2 - r21 mu1) t2 with q = (-r21,1).Sigma.(-r21,1)^T > 0.
    double q1 = p.sigma11 * p.r21 * p.r21 - 2.0 * p.sigma12 * p.r21 + p.sigma22;
    double lin1 = p.mu2 - p.r21 * p.mu1;
    k.thetaStar2 = -2.0 * lin1 / q1;
    k.thetaStar1 = -p.r21 * k.thetaStar2;
    k.starDegenerate = (lin1 == 0.0);

    double q2 = p.sigma11 - 2.0 * p.sigma12 * p.r12 + p.sigma22 * p.r12 * p.r12;
    double lin2 = p.mu1 - p.r12 * p.mu2;
    k.thetaStarStar1 = -2.0 * lin2 / q2;
    k.thetaStarStar2 = -p.r12 * k.thetaStarStar1;
    k.starStarDegenerate = (lin2 == 0.0);
    return k;
}

Complex disc_theta1(const ModelParams& p, Complex t1) {
    double det = p.detSigma();
    return -det * t1 * t1 + 2.0 * (p.mu2 * p.sigma12 - p.mu1 * p.sigma22) * t1
         + p.mu2 * p.mu2;
}

Complex sqrt_disc_theta1(const ModelParams& p, const KernelGeometry& k, Complex t1) {
    return sqrt_two_cuts(p.detSigma(), k.theta1Minus, k.theta1Plus, t1);
}

Complex disc_theta2(const ModelParams& p, Complex t2) {
    double det = p.detSigma();
    return -det * t2 * t2 + 2.0 * (p.mu1 * p.sigma12 - p.mu2 * p.sigma11) * t2
         + p.mu1 * p.mu1;
}

Complex sqrt_disc_theta2(const ModelParams& p, const KernelGeometry& k, Complex t2) {
    return sqrt_two_cuts(p.detSigma(), k.theta2Minus, k.theta2Plus, t2);
}

Complex theta2_branch(const ModelParams& p, const KernelGeometry& k, Complex t1, int sign) {
    Complex s = sqrt_disc_theta1(p, k, t1);
    return (-(p.sigma12 * t1 + p.mu2) + double(sign) * s) / p.sigma22;
}

Complex theta1_branch(const ModelParams& p, const KernelGeometry& k, Complex t2, int sign) {
    Complex s = sqrt_disc_theta2(p, k, t2);
    return (-(p.sigma12 * t2 + p.mu1) + double(sign) * s) / p.sigma11;
}

Complex theta2_branch_minus_deriv(const ModelParams& p, const KernelGeometry& k, Complex t1) {
    // d/dt1 of (-(sigma12 t1 + mu2) - sqrt(d))/sigma22 with
    // sqrt(d) = sqrt(det)*sqrt(t1-a)*sqrt(b-t1), a = theta1-, b = theta1+.
    double det = p.detSigma();
    Complex sa = std::sqrt(t1 - k.theta1Minus);
    Complex sb = std::sqrt(Complex(k.theta1Plus) - t1);
    Complex dS = std::sqrt(det) * (sb / (2.0 * sa) - sa / (2.0 * sb));
    return (-p.sigma12 - dS) / p.sigma22;
}

}  // namespace srbm

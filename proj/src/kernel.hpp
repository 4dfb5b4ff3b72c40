#pragma once

#include "common.hpp"
#include "model.hpp"

namespace srbm {

// gamma(theta)   = (sigma11 t1^2 + 2 sigma12 t1 t2 + sigma22 t2^2)/2 + mu.theta
// gamma1(theta)  = t1 + r21 t2   (reflection form of the vertical face)
// gamma2(theta)  = r12 t1 + t2
inline Complex gamma_k(const ModelParams& p, Complex t1, Complex t2) {
    return 0.5 * (p.sigma11 * t1 * t1 + 2.0 * p.sigma12 * t1 * t2 + p.sigma22 * t2 * t2)
         + p.mu1 * t1 + p.mu2 * t2;
}
inline Complex gamma1_k(const ModelParams& p, Complex t1, Complex t2) {
    return t1 + p.r21 * t2;
}
inline Complex gamma2_k(const ModelParams& p, Complex t1, Complex t2) {
    return p.r12 * t1 + t2;
}

// Distinguished points of the ellipse/line geometry. thetaStar solves
// gamma = gamma1 = 0 (nonzero root), thetaStarStar solves gamma = gamma2 = 0.
struct KernelGeometry {
    double theta1Minus = 0.0, theta1Plus = 0.0;
    double theta2Minus = 0.0, theta2Plus = 0.0;
    double thetaStar1 = 0.0, thetaStar2 = 0.0;
    double thetaStarStar1 = 0.0, thetaStarStar2 = 0.0;
    double beta = 0.0;                 // arccos(-sigma12/sqrt(sigma11 sigma22))
    bool starDegenerate = false;       // gamma1=0 line tangent at the origin
    bool starStarDegenerate = false;
};

KernelGeometry branch_points(const ModelParams& p);

// Discriminant of gamma as a quadratic in theta2:
//   d(t1) = t1^2 (sigma12^2 - sigma11 sigma22) + 2 t1 (mu2 sigma12 - mu1 sigma22) + mu2^2
// and its square root with the cut exactly on (-inf,theta1-] u [theta1+,inf),
// positive on (theta1-, theta1+), equal to +i sqrt|d| on the lower cut.
Complex disc_theta1(const ModelParams& p, Complex t1);
Complex sqrt_disc_theta1(const ModelParams& p, const KernelGeometry& k, Complex t1);
Complex disc_theta2(const ModelParams& p, Complex t2);
Complex sqrt_disc_theta2(const ModelParams& p, const KernelGeometry& k, Complex t2);

// Branches Theta2^{+-}(t1) = (-(sigma12 t1 + mu2) +- sqrt(d(t1)))/sigma22 and the
// mirrored Theta1^{+-}(t2). gamma(t1, Theta2^{+-}(t1)) = 0 identically.
Complex theta2_branch(const ModelParams& p, const KernelGeometry& k, Complex t1, int sign);
Complex theta1_branch(const ModelParams& p, const KernelGeometry& k, Complex t2, int sign);

// d(Theta2^-)/dtheta1 (analytic, same branch conventions).
Complex theta2_branch_minus_deriv(const ModelParams& p, const KernelGeometry& k, Complex t1);

}  // namespace srbm

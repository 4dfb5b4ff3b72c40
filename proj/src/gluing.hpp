#pragma once

#include "common.hpp"
#include "kernel.hpp"

namespace srbm {

// Conformal gluing map w(t2) = T_{pi/beta}(-(2 t2 - (t2+ + t2-))/(t2+ - t2-)),
// analytic on C \ [theta2+, inf), w(vertex) = -1, one-to-one from G_R onto
// C \ (-inf,-1], w(t2) = w(conj t2) on R.
struct GluingMap {
    double exponent = 2.0;   // a = pi/beta, > 1 when beta < pi
    double center = 0.0;     // (theta2+ + theta2-)/2
    double halfwidth = 1.0;  // (theta2+ - theta2-)/2
    double theta2Plus = 0.0; // cut endpoint
};

GluingMap make_gluing(const ModelParams& p, const KernelGeometry& k);

// Generalized Chebyshev T_a(x) = cos(a arccos x); for integer a this is the
// classical polynomial. Both algebraic forms agree off the cut of arccos.
Complex chebyshev(double a, Complex x);

// Throws Error(Domain) for t2 on the cut [theta2+, inf).
Complex w_eval(const GluingMap& g, Complex t2);

// w + 1 computed as 2 cos^2(a arccos(xi)/2): exact cancellation control at the
// vertex where w = -1. All contour kernels are formed in this coordinate.
Complex w_hat(const GluingMap& g, Complex t2);

Complex w_prime(const GluingMap& g, Complex t2);

// W = (w+1)/w; pole where w = 0 (reported, the pole choice is the map's).
Complex W_eval(const GluingMap& g, Complex t2);

}  // namespace srbm

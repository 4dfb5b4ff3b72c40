#pragma once

#include "common.hpp"
#include "gluing.hpp"
#include "kernel.hpp"
#include "model.hpp"

#include <vector>

namespace srbm {

// One quadrature node of the R^- discretization. The curve is parameterized
// by its generator t1 = theta1- - sinh^2(v): the sinh^2 map both clusters
// nodes at the vertex (square-root grading) and stretches to the infinite end.
struct CurvePoint {
    double v = 0.0;        // map parameter
    double t1 = 0.0;       // generating theta1 in (-inf, theta1-)
    Complex z;             // Theta2^-(t1), the R^- point (Im z <= 0)
    Complex dzdt1;         // dTheta2^-/dtheta1 at t1
    double uh = 0.0;       // w(z) + 1 (real on the curve; <= 0)
    double dudv = 0.0;     // d/dv of w(z(v)) along the contour
    double glw = 0.0;      // Gauss-Legendre weight in v
    double weight = 0.0;   // quadrature weight in the theta1 parameter (> 0)
};

struct ContourGrid {
    std::vector<CurvePoint> pts;   // ordered by decreasing t1, vertex first
    double V = 0.0;                // truncation in the v parameter
    double truncationT1 = 0.0;     // most negative t1 used
    double uhEnd = 0.0;            // w+1 at the truncated end
    double tol = 0.0;
    double tailBound = 0.0;        // achieved truncation bound estimate
    int nodeCount() const { return static_cast<int>(pts.size()); }
};

// Vertex of R: Theta2(theta1-) = -(sigma12 theta1- + mu2)/sigma22 (real).
double curve_vertex(const ModelParams& p, const KernelGeometry& k);

// LHS - RHS of the hyperbola equation at x = Re t2, y = Im t2; zero iff t2
// lies on the conic containing R.
double hyperbola_residual(const ModelParams& p, Complex t2);

// Abscissa of the branch of R through the vertex at height y (closed form
// via the generator t1(y); even in y).
double curve_abscissa(const ModelParams& p, const KernelGeometry& k, double y);

// Open domain G_R bounded by R on the right: Re t2 < X_R(Im t2).
bool in_domain(const ModelParams& p, const KernelGeometry& k, Complex t2);

// Build the quadrature grid. nodeCount >= 16; throws Error(Truncation) when
// the tolerance is unreachable within the budget (report carries the bound).
ContourGrid contour_grid(const ModelParams& p, const KernelGeometry& k,
                         const GluingMap& g, int nodeCount, double tol);

}  // namespace srbm

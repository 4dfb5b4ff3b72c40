#pragma once

#include "common.hpp"
#include "curve.hpp"

#include <vector>

namespace srbm {

// Side of the cut u in (-inf,-1] (uh in (-inf,0]) for boundary values of
// Cauchy integrals. The contour runs vertex -> infinity (u decreasing), so
// Below (Im w -> 0^-) is the left limit carrying +1/2 of the density.
enum class CutSide { Auto, Above, Below, PrincipalValue };

// Public operation modes per the module contract.
enum class CauchyMode { OffCurve, PrincipalValue };

struct CauchyIntegrand {
    const ContourGrid* grid = nullptr;
    std::vector<Complex> values;  // f at grid points, |values| = nodeCount
};

// (1/2i pi) int_{R^-} f(t) w'(t)/(w(t)-w(z)) dt in the pulled-back parameter,
// with the kernel formed in the uh = w+1 coordinate. zetah = w(z)+1.
// For targets on or near the cut the density value f0 at the projected curve
// point makes the singularity subtraction exact; otherwise the nearest node
// sample is used (first-order near the cut, irrelevant away from it).
Complex cauchy_raw(const ContourGrid& grid, const std::vector<Complex>& f,
                   Complex zetah, CutSide side = CutSide::Auto,
                   const Complex* f0exact = nullptr);

// Spec-level operation: OffCurve requires z off the curve (proximity error on
// the cut, recommending PrincipalValue mode); PrincipalValue evaluates the PV
// at a point of the cut.
Complex cauchy_integral(const CauchyIntegrand& f, Complex zetah, CauchyMode mode);

// Closed-form endpoint term: int w'/(w - w(z)) over the truncated contour
// equals log((u_end - u(z))/(u_start - u(z))) with the side handled explicitly.
Complex endpoint_log(const ContourGrid& grid, Complex zetah, CutSide side);

// Total continuous argument variation along ordered nonzero samples.
// Throws Error(Resolution) when a consecutive phase jump exceeds pi/2.
double winding(const std::vector<Complex>& valuesOnCurve);

}  // namespace srbm

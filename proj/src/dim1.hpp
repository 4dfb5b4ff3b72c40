#pragma once

#include "common.hpp"

namespace srbm {

// One-dimensional reflected Brownian motion (variance sigma2, drift mu > 0,
// start x0 >= 0): closed-form Green's function and its Laplace transform,
// used as exact oracles for the simulation engine.
struct Dim1Params {
    double sigma2 = 1.0;
    double mu = 1.0;
    double x0 = 0.0;

    void validate() const {
        if (!(sigma2 > 0.0)) fail(ErrorCode::Parameter, "sigma2 must be > 0");
        if (!(x0 >= 0.0)) fail(ErrorCode::Parameter, "x0 must be >= 0");
    }
};

// g(x0,x) = (1/mu) e^{(2mu/sigma2)(x - x0)} for 0 <= x < x0, (1/mu) for x >= x0.
double green_1d(const Dim1Params& q, double x);

// psi(theta) = -(e^{theta x0} + theta (sigma2/2mu) e^{-(2mu/sigma2) x0})
//              / (mu theta + sigma2 theta^2 / 2), Re theta < 0.
// At theta = -2mu/sigma2 the singularity is removable; the limit is returned.
// theta = 0 is a genuine pole (total mass of the Green's measure is infinite).
Complex psi_1d(const Dim1Params& q, Complex theta);

// Centered second-order residual of (sigma2/2) g'' - mu g' away from x0, and
// one-sided residual of sigma2 g'(0) - 2 mu g(0) at the boundary.
double pde_residual_1d(const Dim1Params& q, double x, double h);
double pde_boundary_residual_1d(const Dim1Params& q, double h);

}  // namespace srbm

#pragma once

#include "common.hpp"
#include "model.hpp"
#include "montecarlo.hpp"

#include <string>

namespace srbm {

// Run configuration: the nine model keys plus quadrature and simulation
// settings. Absent keys take the documented defaults; unknown keys are an
// error listing them with line numbers; duplicate keys are an error.
struct RunConfig {
    ModelParams model;             // defaults to the canonical instance
    int quadratureNodes = 512;
    double quadratureTol = 1e-8;
    SimConfig sim;                 // dt 1e-3, tMax 30, paths 1e5, seed 42
};

// Accepted keys: sigma11 sigma12 sigma22 mu1 mu2 r12 r21 x1 x2
//                nodes tol dt tmax paths seed
RunConfig parse_config(const std::string& text);

}  // namespace srbm

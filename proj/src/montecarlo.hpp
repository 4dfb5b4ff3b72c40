#pragma once

#include "common.hpp"
#include "model.hpp"

#include <cstdint>
#include <vector>

namespace srbm {

struct SimConfig {
    double dt = 1e-3;
    double tMax = 30.0;
    long long paths = 100000;
    std::uint64_t seed = 42;

    void validate() const {
        if (!(dt > 0.0) || !(dt <= tMax)) fail(ErrorCode::InvalidArgument, "need 0 < dt <= tMax");
        if (paths < 1) fail(ErrorCode::InvalidArgument, "paths >= 1");
    }
};

struct McEstimate {
    Complex mean{0.0, 0.0};
    double stderrTotal = 0.0;   // sample stderr + truncation bias bound
    double stderrStat = 0.0;    // sample std / sqrt(paths)
    double biasBound = 0.0;     // exponential tail bound e^{Re th.z_end}/|Re th.mu|
    long long paths = 0;
    SimConfig config;
};

struct PathState {
    double z1 = 0.0, z2 = 0.0;  // position, componentwise >= 0
    double l1 = 0.0, l2 = 0.0;  // accumulated local times, nondecreasing
};

// One implicit Skorokhod step: solve the 2x2 LCP  zNew = z + dw + mu dt + R dL,
// zNew >= 0, dL >= 0, zNew_i dL_i = 0 by enumerating the active sets
// {}, {1}, {2}, {1,2}. Unique under the existence condition.
// Throws Error(Reflection) when no case is feasible.
void reflect_step(const ModelParams& p, double z1, double z2, double dw1, double dw2,
                  double dt, double* z1New, double* z2New, double* dL1, double* dL2);

// Counter-based per-path streams: path i uses a generator seeded from
// (seed XOR i), so parallel and serial runs agree bit for bit.
struct McRequest {
    enum class Kind { PsiInterior, PsiBoundary } kind = Kind::PsiInterior;
    int face = 1;              // for PsiBoundary: 1 or 2
    Complex theta1{0.0, 0.0};  // interior: both; boundary face 1: theta2 used, face 2: theta1
    Complex theta2{0.0, 0.0};
};

struct HistSpec {
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    int nx = 1, ny = 1;
};

struct McResults {
    std::vector<McEstimate> estimates;           // one per request
    std::vector<McEstimate> histogram;           // nx*ny, row-major (i*ny + j)
};

// Fused estimator pass: one simulation, many accumulators. All estimators
// share the same per-path stream, so a single-request run reproduces the
// corresponding estimate of a multi-request run exactly.
McResults run_mc(const ModelParams& p, const SimConfig& cfg,
                 const std::vector<McRequest>& requests,
                 const HistSpec* hist = nullptr);

McEstimate estimate_psi(const ModelParams& p, Complex theta1, Complex theta2,
                        const SimConfig& cfg);
McEstimate estimate_psi_boundary(const ModelParams& p, int face, Complex theta,
                                 const SimConfig& cfg);

// 1D reflected Brownian motion x -> max(0, x + dw + mu dt); estimators for
// psi(theta), the occupation histogram on [0, xMax), and E L(inf).
struct Dim1McResult {
    McEstimate psi;
    McEstimate localTimeTotal;
    std::vector<McEstimate> histogram;  // nBins over [0, xMax)
    double binWidth = 0.0;
};

Dim1McResult simulate_1d(double sigma2, double mu, double x0, Complex theta,
                         double xMax, int nBins, const SimConfig& cfg);

}  // namespace srbm

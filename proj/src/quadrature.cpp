#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace srbm {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Complex kTwoPiI{0.0, 2.0 * kPi};

// d f/d v at node j via a local 5-point Lagrange derivative; used for the
// removable limit of (f - f0) w'/(w - w0) when the target is the node itself.
Complex density_deriv(const ContourGrid& grid, const std::vector<Complex>& f, int j) {
    int n = static_cast<int>(f.size());
    int lo = std::max(0, std::min(j - 2, n - 5));
    double v0 = grid.pts[j].v;
    Complex d = 0.0;
    for (int i = 0; i < 5; ++i) {
        double term = 0.0;
        for (int k = 0; k < 5; ++k) {
            if (k == i) continue;
            double prod = 1.0;
            for (int l = 0; l < 5; ++l) {
                if (l == i || l == k) continue;
                prod *= (v0 - grid.pts[lo + l].v) / (grid.pts[lo + i].v - grid.pts[lo + l].v);
            }
            term += prod / (grid.pts[lo + i].v - grid.pts[lo + k].v);
        }
        d += f[lo + i] * term;
    }
    return d;
}

int nearest_node(const ContourGrid& grid, double uh0) {
    int best = 0;
    double bd = std::abs(grid.pts[0].uh - uh0);
    for (int j = 1; j < grid.nodeCount(); ++j) {
        double d = std::abs(grid.pts[j].uh - uh0);
        if (d < bd) { bd = d; best = j; }
    }
    return best;
}

}  // namespace

Complex endpoint_log(const ContourGrid& grid, Complex zetah, CutSide side) {
    double uhEnd = grid.uhEnd;  // << 0
    if (zetah.imag() != 0.0) {
        // Im(u - zeta) has constant sign along the real u-path: principal logs.
        return std::log(Complex(uhEnd) - zetah) - std::log(Complex(0.0) - zetah);
    }
    double x = zetah.real();
    if (x >= 0.0) {
        // target right of the cut end: both u - zeta < 0, real logs
        return Complex(std::log((x - uhEnd) / x), 0.0);
    }
    Complex L0(std::log(std::abs(uhEnd - x)) - std::log(std::abs(-x)), 0.0);
    switch (side) {
        case CutSide::Above: return L0 - Complex(0.0, kPi);
        case CutSide::Below: return L0 + Complex(0.0, kPi);
        case CutSide::PrincipalValue: return L0;
        case CutSide::Auto:
            fail(ErrorCode::Proximity,
                 "evaluation point lies on the contour image; use PrincipalValue "
                 "mode or a side limit");
    }
    return L0;
}

Complex cauchy_raw(const ContourGrid& grid, const std::vector<Complex>& f,
                   Complex zetah, CutSide side, const Complex* f0exact) {
    const int n = grid.nodeCount();
    if (static_cast<int>(f.size()) != n)
        fail(ErrorCode::InvalidArgument, "integrand sample count != grid nodes");

    bool nearCut = zetah.real() < -1e-12 &&
                   std::abs(zetah.imag()) < 0.5 * (1.0 + std::abs(zetah.real()));
    std::vector<Complex> terms(n);
    if (!nearCut) {
        for (int j = 0; j < n; ++j) {
            const CurvePoint& cp = grid.pts[j];
            terms[j] = f[j] * cp.dudv * cp.glw / (Complex(cp.uh) - zetah);
        }
        return pairwise_sum(terms) / kTwoPiI;
    }

    int j0 = nearest_node(grid, zetah.real());
    Complex f0 = f0exact ? *f0exact : f[j0];
    bool atNode = std::abs(Complex(grid.pts[j0].uh) - zetah) < 1e-300;
    for (int j = 0; j < n; ++j) {
        const CurvePoint& cp = grid.pts[j];
        if (atNode && j == j0) {
            // removable point: (f - f0) w'/(w - w0) -> df/dv
            terms[j] = density_deriv(grid, f, j0) * cp.glw;
        } else {
            terms[j] = (f[j] - f0) * cp.dudv * cp.glw / (Complex(cp.uh) - zetah);
        }
    }
    return (pairwise_sum(terms) + f0 * endpoint_log(grid, zetah, side)) / kTwoPiI;
}

Complex cauchy_integral(const CauchyIntegrand& fi, Complex zetah, CauchyMode mode) {
    if (!fi.grid) fail(ErrorCode::InvalidArgument, "integrand lacks a grid");
    bool onCut = zetah.imag() == 0.0 && zetah.real() < 0.0;
    if (mode == CauchyMode::OffCurve) {
        if (onCut)
            fail(ErrorCode::Proximity,
                 "point lies on the contour; use PrincipalValue mode or refine the grid");
        return cauchy_raw(*fi.grid, fi.values, zetah, CutSide::Auto);
    }
    if (!onCut)
        fail(ErrorCode::InvalidArgument, "PrincipalValue mode needs a point of the cut");
    return cauchy_raw(*fi.grid, fi.values, zetah, CutSide::PrincipalValue);
}

double winding(const std::vector<Complex>& vals) {
    if (vals.empty()) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        if (vals[i] == Complex(0.0) || vals[i + 1] == Complex(0.0))
            fail(ErrorCode::InvalidArgument, "winding of a zero sample");
        double step = std::arg(vals[i + 1] / vals[i]);
        if (std::abs(step) > kPi / 2.0)
            fail(ErrorCode::Resolution,
                 "phase jump " + std::to_string(step) + " exceeds pi/2; grid too coarse");
        total += step;
    }
    return total;
}

}  // namespace srbm

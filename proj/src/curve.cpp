#include "curve.hpp"

#include <algorithm>
#include <cmath>

namespace srbm {

namespace {

// Gauss-Legendre nodes/weights on [-1,1], Newton on Legendre polynomials.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[n - 1 - i] = t;
        w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

}  // namespace

double curve_vertex(const ModelParams& p, const KernelGeometry& k) {
    return -(p.sigma12 * k.theta1Minus + p.mu2) / p.sigma22;
}

double hyperbola_residual(const ModelParams& p, Complex t2) {
    double x = t2.real(), y = t2.imag();
    double lhs = p.sigma22 * (p.sigma12 * p.sigma12 - p.sigma11 * p.sigma22) * x * x
               + p.sigma12 * p.sigma12 * p.sigma22 * y * y
               - 2.0 * p.sigma22 * (p.sigma11 * p.mu2 - p.sigma12 * p.mu1) * x;
    double rhs = p.mu2 * (p.sigma11 * p.mu2 - 2.0 * p.sigma12 * p.mu1);
    return lhs - rhs;
}

double curve_abscissa(const ModelParams& p, const KernelGeometry& k, double y) {
    // Height |Im Theta2^-(t1)| = sqrt(|d(t1)|)/sigma22 is monotone in t1 below
    // theta1-; solve det*(t1-a)(b-t1) = -(sigma22 y)^2 for the root <= a.
    double det = p.detSigma();
    double a = k.theta1Minus, b = k.theta1Plus;
    double mid = 0.5 * (a + b);
    double t1 = mid - std::sqrt(0.25 * (b - a) * (b - a) + p.sigma22 * p.sigma22 * y * y / det);
    return (-p.sigma12 * t1 - p.mu2) / p.sigma22;
}

bool in_domain(const ModelParams& p, const KernelGeometry& k, Complex t2) {
    return t2.real() < curve_abscissa(p, k, t2.imag());
}

ContourGrid contour_grid(const ModelParams& p, const KernelGeometry& k,
                         const GluingMap& g, int nodeCount, double tol) {
    if (nodeCount < 16)
        fail(ErrorCode::Truncation,
             "contour grid needs at least 16 nodes; tolerance unreachable");
    if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "tol must be positive");

    const int nq = 16;
    int npanels = std::max(2, nodeCount / nq);

    // Truncation V: the log G Cauchy kernel decays only algebraically in u,
    // so require |u_end| >= C/tol regardless of the exponential decay of g.
    double a = g.exponent;
    double xiTarget = 0.5 * std::pow(2.0 * 30.0 / tol, 1.0 / a);
    double ell = std::sqrt(p.sigma11 / p.sigma22);          // |z| ~ ell*|t1| at infinity
    double sNeeded = std::max(1.0, (xiTarget * g.halfwidth + std::abs(g.center)) / ell
                                   + std::abs(k.theta1Minus) + 1.0);
    double V = std::asinh(std::sqrt(sNeeded));
    const double kVMax = 40.0;
    double tailBound = 30.0 / std::max(1.0, 0.5 * std::pow(2.0 * xiTarget, a));
    if (V > kVMax) {
        V = kVMax;
        double sV = std::sinh(V);
        double xiEnd = (ell * sV * sV - std::abs(g.center)) / g.halfwidth;
        tailBound = 30.0 / std::max(1.0, 0.5 * std::pow(2.0 * std::max(1.0, xiEnd), a));
        if (tailBound > tol)
            fail(ErrorCode::Truncation,
                 "truncation bound " + std::to_string(tailBound) + " exceeds tol");
    }

    // Panel edges: geometric grading toward the vertex (PV kernels centered at
    // near-vertex nodes have structure at the scale of the node's own v), then
    // uniform panels to V. v floor keeps t1 - theta1- resolvable in double.
    const double q = 0.62;
    const double vFloor = 5e-4;
    int ngeo = std::max(4, npanels / 3);
    int ngeoCap = static_cast<int>(std::ceil(std::log(vFloor / (V / 3.0)) / std::log(q)));
    ngeo = std::min({ngeo, npanels - 2, ngeoCap});
    std::vector<double> edges;
    edges.push_back(0.0);
    for (int i = ngeo; i >= 1; --i) edges.push_back(V / 3.0 * std::pow(q, i));
    int nuni = npanels - ngeo;
    for (int i = 0; i <= nuni; ++i)
        edges.push_back(V / 3.0 + (V - V / 3.0) * double(i) / double(nuni));

    std::vector<double> gx, gw;
    gauss_legendre(nq, gx, gw);

    ContourGrid grid;
    grid.V = V;
    grid.tol = tol;
    grid.tailBound = tailBound;
    grid.pts.reserve(static_cast<std::size_t>(npanels) * nq);
    for (std::size_t pa = 0; pa + 1 < edges.size(); ++pa) {
        double lo = edges[pa], hi = edges[pa + 1];
        for (int i = 0; i < nq; ++i) {
            CurvePoint cp;
            cp.v = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gx[i];
            cp.glw = 0.5 * (hi - lo) * gw[i];
            double sh = std::sinh(cp.v);
            cp.t1 = k.theta1Minus - sh * sh;
            double dt1dv = -2.0 * sh * std::cosh(cp.v);
            cp.z = theta2_branch(p, k, cp.t1, -1);
            cp.dzdt1 = theta2_branch_minus_deriv(p, k, cp.t1);
            Complex uh = w_hat(g, cp.z);
            Complex dudv = w_prime(g, cp.z) * cp.dzdt1 * dt1dv;
            if (std::abs(uh.imag()) > 1e-7 * (1.0 + std::abs(uh.real())))
                fail(ErrorCode::Internal, "contour point left the real w-image");
            cp.uh = uh.real();
            cp.dudv = dudv.real();
            cp.weight = cp.glw * std::abs(dt1dv);
            grid.pts.push_back(cp);
        }
    }
    double shV = std::sinh(V);
    grid.truncationT1 = k.theta1Minus - shV * shV;
    grid.uhEnd = w_hat(g, theta2_branch(p, k, grid.truncationT1, -1)).real();
    return grid;
}

}  // namespace srbm

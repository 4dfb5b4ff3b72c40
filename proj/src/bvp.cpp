#include "bvp.hpp"

#include <algorithm>
#include <cmath>

namespace srbm {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Complex kTwoPiI{0.0, 2.0 * kPi};

Complex exp_dot(const ModelParams& p, Complex t1, Complex t2) {
    return std::exp(t1 * p.x1 + t2 * p.x2);
}

}  // namespace

DecouplingCondition decoupling_condition(const ModelParams& p) {
    KernelGeometry k = branch_points(p);
    DecouplingCondition c;
    double sb = std::sin(k.beta), cb = std::cos(k.beta);
    c.epsilon = std::atan2(sb, p.r21 * std::sqrt(p.sigma11 / p.sigma22) + cb);
    c.delta = std::atan2(sb, p.r12 * std::sqrt(p.sigma22 / p.sigma11) + cb);
    double s = c.epsilon + c.delta;
    for (int m = -8; m <= 8 && !c.satisfied; ++m)
        for (int n = -8; n <= 8; ++n)
            if (std::abs(s - m * k.beta - n * kPi) < 1e-9) { c.satisfied = true; break; }
    return c;
}

SideEngine::SideEngine(const ModelParams& p, int nodeCount, double tol) : p_(p) {
    k_ = branch_points(p_);
    g_ = make_gluing(p_, k_);
    grid_ = contour_grid(p_, k_, g_, nodeCount, tol);

    const int n = grid_.nodeCount();
    bd_.Gvals.resize(n);
    bd_.gvals.resize(n);
    bd_.logGvals.resize(n);

    double vx = curve_vertex(p_, k_);
    Complex rhoV = gamma1_k(p_, k_.theta1Minus, vx) / gamma2_k(p_, k_.theta1Minus, vx);
    double g1v = std::real(gamma1_k(p_, k_.theta1Minus, vx));
    double g2v = std::real(gamma2_k(p_, k_.theta1Minus, vx));
    double critScale = std::abs(k_.theta1Minus) + std::abs(vx);
    if (std::abs(g1v) < 1e-12 * critScale || std::abs(g2v) < 1e-12 * critScale)
        fail(ErrorCode::Pole, "gamma1*gamma2 vanishes at (theta1-, vertex): G has a "
                              "vertex zero/pole, index data degenerate");
    double basePhi = std::arg(rhoV);

    double prevPhi = basePhi;
    for (int j = 0; j < n; ++j) {
        const CurvePoint& cp = grid_.pts[j];
        Complex g1 = gamma1_k(p_, cp.t1, cp.z);
        Complex g2 = gamma2_k(p_, cp.t1, cp.z);
        double scale = 1.0 + std::abs(cp.t1) + std::abs(cp.z);
        if (std::abs(g2) < 1e-13 * scale || std::abs(g1) < 1e-13 * scale)
            fail(ErrorCode::Pole, "kernel form vanishes on the contour at t1 = " +
                                  std::to_string(cp.t1));
        Complex rho = g1 / g2;
        double phi = std::arg(rho);
        // continuous determination node to node
        while (phi - prevPhi > kPi) phi -= 2.0 * kPi;
        while (phi - prevPhi < -kPi) phi += 2.0 * kPi;
        if (std::abs(phi - prevPhi) > kPi / 2.0)
            fail(ErrorCode::Resolution, "arg G step exceeds pi/2 between contour nodes");
        prevPhi = phi;
        bd_.logGvals[j] = Complex(0.0, 2.0 * (phi - basePhi));
        bd_.Gvals[j] = rho / std::conj(rho);

        Complex zc = std::conj(cp.z);
        Complex g1c = gamma1_k(p_, cp.t1, zc);
        Complex g2c = gamma2_k(p_, cp.t1, zc);
        bd_.gvals[j] = (g2c / g1c) * (exp_dot(p_, cp.t1, cp.z) / g2 -
                                      exp_dot(p_, cp.t1, zc) / g2c);
    }
    bd_.d = 0.0;  // G(vertex) = rho_v/conj(rho_v) = 1, rho_v real
    bd_.Delta = 2.0 * (prevPhi - basePhi);
    bd_.chiSign = (g1v * g2v > 0.0) ? 1 : 0;
    bd_.chiWindRaw = static_cast<int>(std::floor((bd_.d + bd_.Delta) / (2.0 * kPi)));
    bd_.chiWind = -bd_.chiWindRaw;

    bd_.C0 = cauchy_raw(grid_, bd_.logGvals, Complex(1.0, 0.0));

    bd_.Eplus.resize(n);
    bd_.density.resize(n);
    for (int j = 0; j < n; ++j) {
        Complex Jb = cauchy_raw(grid_, bd_.logGvals, Complex(grid_.pts[j].uh, 0.0),
                                CutSide::Below, &bd_.logGvals[j]) - bd_.C0;
        bd_.Eplus[j] = std::exp(Jb);
        bd_.density[j] = bd_.gvals[j] / bd_.Eplus[j];
    }

    // Delta > 0: E itself decays at infinity, the decaying-solution family is
    // one-dimensional; pin it with the interior anchor at theta2**.
    if (bd_.Delta > 1e-10) {
        Complex tss(k_.thetaStarStar2, 0.0);
        if (!inDomain(tss))
            fail(ErrorCode::Internal,
                 "Delta > 0 but theta2** is not inside G_R; cannot pin the solution");
        Complex g1ss = gamma1_k(p_, k_.thetaStarStar1, k_.thetaStarStar2);
        if (std::abs(g1ss) < 1e-12)
            fail(ErrorCode::Pole, "gamma1(theta**) = 0: anchor degenerate");
        Complex anchor = -exp_dot(p_, k_.thetaStarStar1, k_.thetaStarStar2) / g1ss;
        Complex zh = w_hat(g_, tss);
        bd_.anchorC = anchor / E_of(zh) - I_of(zh);
        bd_.anchorApplied = true;
    }
}

double SideEngine::invert_uh(double uh0) const {
    int j = 0;
    double best = std::abs(grid_.pts[0].uh - uh0);
    for (int i = 1; i < grid_.nodeCount(); ++i) {
        double d = std::abs(grid_.pts[i].uh - uh0);
        if (d < best) { best = d; j = i; }
    }
    double t1 = grid_.pts[j].t1;
    for (int it = 0; it < 80; ++it) {
        Complex z = theta2_branch(p_, k_, t1, -1);
        double uh = w_hat(g_, z).real();
        double du = std::real(w_prime(g_, z) * theta2_branch_minus_deriv(p_, k_, t1));
        double step = (uh - uh0) / du;
        double t1n = t1 - step;
        if (t1n >= k_.theta1Minus)
            t1n = 0.5 * (t1 + k_.theta1Minus);  // stay on the generator ray
        if (std::abs(t1n - t1) < 1e-14 * (1.0 + std::abs(t1))) { t1 = t1n; break; }
        t1 = t1n;
    }
    return t1;
}

Complex SideEngine::logG_at(Complex t2) const {
    Complex rho = gamma1_k(p_, theta1_branch(p_, k_, t2, -1), t2) /
                  gamma2_k(p_, theta1_branch(p_, k_, t2, -1), t2);
    // principal step from the nearest node's unwrapped value
    int j = 0;
    double best = std::abs(grid_.pts[0].z - t2);
    for (int i = 1; i < grid_.nodeCount(); ++i) {
        double d = std::abs(grid_.pts[i].z - t2);
        if (d < best) { best = d; j = i; }
    }
    const CurvePoint& cp = grid_.pts[j];
    Complex rhoJ = gamma1_k(p_, cp.t1, cp.z) / gamma2_k(p_, cp.t1, cp.z);
    double base = bd_.logGvals[j].imag() / 2.0;
    double dphi = std::arg(rho / rhoJ);
    return Complex(0.0, 2.0 * (base + dphi));
}

Complex SideEngine::G_at(Complex t2) const {
    Complex t1 = theta1_branch(p_, k_, t2, -1);
    Complex zc = std::conj(t2);
    return (gamma1_k(p_, t1, t2) / gamma2_k(p_, t1, t2)) *
           (gamma2_k(p_, t1, zc) / gamma1_k(p_, t1, zc));
}

Complex SideEngine::g_at(Complex t2) const {
    Complex t1 = theta1_branch(p_, k_, t2, -1);
    Complex zc = std::conj(t2);
    Complex g2 = gamma2_k(p_, t1, t2), g2c = gamma2_k(p_, t1, zc);
    return (g2c / gamma1_k(p_, t1, zc)) *
           (exp_dot(p_, t1, t2) / g2 - exp_dot(p_, t1, zc) / g2c);
}

SideEngine::ExactDensity SideEngine::project_density(Complex zetah) const {
    ExactDensity e;
    double uh0 = zetah.real();
    if (!(uh0 < -1e-12)) return e;  // beyond the vertex end in u: plain panels resolve
    double t1 = invert_uh(uh0);
    Complex z = theta2_branch(p_, k_, t1, -1);
    e.lam0 = logG_at(z);
    Complex Jb = cauchy_raw(grid_, bd_.logGvals, Complex(uh0, 0.0),
                            CutSide::Below, &e.lam0) - bd_.C0;
    e.f0 = g_at(z) / std::exp(Jb);
    e.valid = true;
    return e;
}

Complex SideEngine::E_of(Complex zetah, CutSide side) const {
    bool nearCut = zetah.real() < -1e-12 &&
                   std::abs(zetah.imag()) < 0.5 * (1.0 + std::abs(zetah.real()));
    if (nearCut) {
        ExactDensity ex = project_density(zetah);
        if (ex.valid)
            return std::exp(cauchy_raw(grid_, bd_.logGvals, zetah, side, &ex.lam0) - bd_.C0);
    }
    return std::exp(cauchy_raw(grid_, bd_.logGvals, zetah, side) - bd_.C0);
}

Complex SideEngine::I_of(Complex zetah, CutSide side) const {
    bool nearCut = zetah.real() < -1e-12 &&
                   std::abs(zetah.imag()) < 0.5 * (1.0 + std::abs(zetah.real()));
    if (nearCut) {
        ExactDensity ex = project_density(zetah);
        if (ex.valid)
            return cauchy_raw(grid_, bd_.density, zetah, side, &ex.f0);
    }
    return cauchy_raw(grid_, bd_.density, zetah, side);
}

Complex SideEngine::Y_of(Complex t2, int chi) const {
    Complex zh = w_hat(g_, t2);
    Complex w = zh - 1.0;
    Complex E = E_of(zh);
    return std::pow(w, chi) * E;
}

Complex SideEngine::Y_plus(int j, int chi) const {
    Complex w(grid_.pts[j].uh - 1.0, 0.0);
    return std::pow(w, chi) * bd_.Eplus[j];
}

bool SideEngine::onCurve(Complex t2, double tolScale) const {
    double eps = tolScale * (1.0 + std::abs(t2));
    return std::abs(t2.real() - curve_abscissa(p_, k_, t2.imag())) < eps &&
           t2.real() <= curve_vertex(p_, k_) + eps;
}

Complex SideEngine::direct_value(Complex t2, CutSide side) const {
    Complex zh = w_hat(g_, t2);
    if (side == CutSide::Auto && std::abs(zh.imag()) < 1e-13 && zh.real() < -1e-12) {
        // evaluation on R itself: the G_R-side limit; below R^- the domain is
        // approached through Im w > 0 (Above), mirrored on R^+.
        side = t2.imag() <= 0.0 ? CutSide::Above : CutSide::Below;
        zh = Complex(zh.real(), 0.0);
    }
    Complex E = E_of(zh, side);
    Complex I = I_of(zh, side);
    return E * (I + bd_.anchorC);
}

Solver::Solver(const ModelParams& p, const SolverOptions& opt) : p_(p) {
    p_.validate();
    cls_ = classify(p_);
    if (!cls_.exists)
        fail(ErrorCode::Parameter, "process does not exist for these reflections");
    if (cls_.regime != Regime::Transient)
        fail(ErrorCode::Recurrent, "transform solver requires a transient instance");
    int n = opt.nodeCount;
    full_ = std::make_unique<SideEngine>(p_, n, opt.tol);
    half_ = std::make_unique<SideEngine>(p_, std::max(64, n / 2), opt.tol);
    ModelParams sw = p_.swapped();
    fullSw_ = std::make_unique<SideEngine>(sw, n, opt.tol);
    halfSw_ = std::make_unique<SideEngine>(sw, std::max(64, n / 2), opt.tol);
}

Complex Solver::eval_side(const SideEngine& eng, const SideEngine& engSw,
                          Complex t2, int depth, EvalMethod* method) const {
    const ModelParams& p = eng.params();
    const KernelGeometry& k = eng.geometry();
    if (t2.imag() == 0.0 && t2.real() >= k.theta2Plus)
        fail(ErrorCode::Domain, "theta2 on the cut [theta2+, inf)");

    if (eng.onCurve(t2)) {
        if (method) *method = EvalMethod::BoundaryLimit;
        return eng.direct_value(t2);
    }
    if (eng.inDomain(t2)) {
        if (method) *method = EvalMethod::Direct;
        return eng.direct_value(t2);
    }
    // Right of R: holomorphic continuation through the kernel relation,
    // psi1 = -(gamma2 psi2(Theta1^-) + e^{(Theta1^-,t2).x})/gamma1(Theta1^-,t2).
    if (depth >= 2)
        fail(ErrorCode::Domain, "point not evaluable: continuation recursion exceeded");
    Complex t1c = theta1_branch(p, k, t2, -1);
    Complex g1 = gamma1_k(p, t1c, t2);
    if (std::abs(g1) < 1e-12 * (1.0 + std::abs(t1c) + std::abs(t2)))
        fail(ErrorCode::Pole, "gamma1(Theta1^-(theta2), theta2) = 0 on the "
                              "continuation path");
    Complex g2 = gamma2_k(p, t1c, t2);
    Complex psi2v = 0.0;
    if (std::abs(g2) > 1e-14 * (1.0 + std::abs(t1c) + std::abs(t2)))
        psi2v = eval_side(engSw, eng, t1c, depth + 1, nullptr);
    if (method) *method = EvalMethod::Continuation;
    Complex num = g2 * psi2v + exp_dot(p, t1c, t2);
    return -num / g1;
}

EvalResult Solver::eval_with_estimate(bool swappedSide, Complex t2) const {
    EvalResult r;
    const SideEngine& a = swappedSide ? *fullSw_ : *full_;
    const SideEngine& b = swappedSide ? *full_ : *fullSw_;
    const SideEngine& ah = swappedSide ? *halfSw_ : *half_;
    const SideEngine& bh = swappedSide ? *half_ : *halfSw_;
    r.value = eval_side(a, b, t2, 0, &r.method);
    Complex vh = eval_side(ah, bh, t2, 0, nullptr);
    r.errEstimate = std::abs(r.value - vh);
    r.driftCaveat = !(p_.mu1 > 0.0 && p_.mu2 > 0.0);
    return r;
}

EvalResult Solver::psi1(Complex theta2) const { return eval_with_estimate(false, theta2); }

EvalResult Solver::psi2(Complex theta1) const { return eval_with_estimate(true, theta1); }

EvalResult Solver::psi(Complex theta1, Complex theta2) const {
    Complex gv = gamma_k(p_, theta1, theta2);
    double scale = 1.0 + std::abs(theta1) + std::abs(theta2);
    if (std::abs(gv) < 1e-10 * scale * scale)
        fail(ErrorCode::Domain, "gamma(theta) = 0 (removable for the transform): "
                                "evaluate at a perturbed point");
    EvalResult r1 = psi1(theta2);
    EvalResult r2 = psi2(theta1);
    EvalResult r;
    Complex num = gamma1_k(p_, theta1, theta2) * r1.value +
                  gamma2_k(p_, theta1, theta2) * r2.value +
                  exp_dot(p_, theta1, theta2);
    r.value = -num / gv;
    r.errEstimate = (std::abs(gamma1_k(p_, theta1, theta2)) * r1.errEstimate +
                     std::abs(gamma2_k(p_, theta1, theta2)) * r2.errEstimate) /
                    std::abs(gv);
    r.method = (r1.method == EvalMethod::Continuation ||
                r2.method == EvalMethod::Continuation)
                   ? EvalMethod::Continuation
                   : EvalMethod::Direct;
    r.driftCaveat = r1.driftCaveat;
    return r;
}

EvalResult Solver::psi1_decoupled(const RationalFn& F, Complex theta2) const {
    if (!F.vanishesAtInfinity())
        fail(ErrorCode::Contract, "decoupling function must tend to 0 at infinity");
    const SideEngine& e = *full_;
    const ContourGrid& gr = e.grid();
    const BoundaryData& bd = e.boundary();
    double worst = 0.0;
    std::vector<Complex> samples(gr.nodeCount());
    for (int j = 0; j < gr.nodeCount(); ++j) {
        Complex z = gr.pts[j].z;
        Complex ratio = F.eval(z) / F.eval(std::conj(z));
        worst = std::max(worst, std::abs(bd.Gvals[j] - ratio) / (1.0 + std::abs(bd.Gvals[j])));
        samples[j] = F.eval(std::conj(z)) * bd.gvals[j];
    }
    if (worst > 1e-8)
        fail(ErrorCode::Contract,
             "F violates the decoupling identity on the grid; max residual " +
             std::to_string(worst));

    Complex zh = w_hat(e.gluing(), theta2);
    EvalResult r;
    r.value = cauchy_raw(gr, samples, zh) / F.eval(theta2);
    // half-grid twin for the estimate
    const SideEngine& h = *half_;
    std::vector<Complex> sh(h.grid().nodeCount());
    for (int j = 0; j < h.grid().nodeCount(); ++j)
        sh[j] = F.eval(std::conj(h.grid().pts[j].z)) * h.boundary().gvals[j];
    Complex vh = cauchy_raw(h.grid(), sh, w_hat(h.gluing(), theta2)) / F.eval(theta2);
    r.errEstimate = std::abs(r.value - vh);
    r.method = EvalMethod::Direct;
    r.driftCaveat = !(p_.mu1 > 0.0 && p_.mu2 > 0.0);
    return r;
}

}  // namespace srbm

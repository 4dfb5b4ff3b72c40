#pragma once

#include "common.hpp"
#include "curve.hpp"
#include "gluing.hpp"
#include "kernel.hpp"
#include "model.hpp"
#include "quadrature.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace srbm {

// Boundary data of the Carleman problem on the contour grid.
//
// Conventions frozen by the calibration battery (exact spot anchors,
// boundary-condition residual, Monte Carlo cross-checks):
//   * contour orientation vertex -> infinity (theta1 decreasing),
//   * log G anchored at d = arg G(vertex) = 0 and unwrapped continuously,
//   * Y+ / E+ is the Below-side (left) Plemelj limit exp(+log G/2 + PV),
//   * solution sign +, the w^chi power of the printed formula collapses,
//   * for Delta > 0 the BVP-plus-decay solution family is one-dimensional and
//     the constant is pinned by psi1(theta2**) = -e^{theta** . x}/gamma1(theta**).
struct BoundaryData {
    std::vector<Complex> Gvals;
    std::vector<Complex> gvals;
    std::vector<Complex> logGvals;   // continuous branch of log G along R^-
    std::vector<Complex> Eplus;      // below-side limit of the exponential factor
    std::vector<Complex> density;    // g / E+ samples
    double d = 0.0;                  // arg G at the vertex, in (-pi, pi]
    double Delta = 0.0;              // [arg G]_{R^-}, vertex -> infinity
    int chiSign = 0;                 // Lemma sign rule at (theta1-, vertex); authoritative
    int chiWindRaw = 0;              // floor((d+Delta)/(2 pi))
    int chiWind = 0;                 // calibrated cross-check: -chiWindRaw
    Complex C0;                      // Cauchy value of log G at the w=0 point
    Complex anchorC{0.0, 0.0};       // family constant (nonzero only when Delta > 0)
    bool anchorApplied = false;
};

enum class EvalMethod { Direct, BoundaryLimit, Continuation };

struct EvalResult {
    Complex value;
    double errEstimate = 0.0;     // |full grid - half grid| self-convergence
    EvalMethod method = EvalMethod::Direct;
    bool driftCaveat = false;     // non-positive drift (Appendix-style instance)
};

// Rational decoupling function F(z) = lead * prod(z - zero_i)/prod(z - pole_j).
struct RationalFn {
    Complex lead{1.0, 0.0};
    std::vector<Complex> zeros;
    std::vector<Complex> poles;
    Complex eval(Complex z) const {
        Complex v = lead;
        for (Complex q : zeros) v *= (z - q);
        for (Complex q : poles) v /= (z - q);
        return v;
    }
    bool vanishesAtInfinity() const { return poles.size() > zeros.size(); }
};

struct DecouplingCondition {
    bool satisfied = false;
    double epsilon = 0.0;   // in (0, pi)
    double delta = 0.0;
};

// eps + delta in beta Z + pi Z within 1e-9, |m|,|n| <= 8.
DecouplingCondition decoupling_condition(const ModelParams& p);

// One orientation of the problem (psi1 of the given model). The Solver below
// pairs a primal engine with the index-swapped one.
class SideEngine {
public:
    SideEngine(const ModelParams& p, int nodeCount, double tol);

    const ModelParams& params() const { return p_; }
    const KernelGeometry& geometry() const { return k_; }
    const GluingMap& gluing() const { return g_; }
    const ContourGrid& grid() const { return grid_; }
    const BoundaryData& boundary() const { return bd_; }

    // G and g of the boundary condition at an arbitrary point of R
    // (t2 need not be a grid node). Used directly by the residual tests.
    Complex G_at(Complex t2) const;
    Complex g_at(Complex t2) const;

    // log G at a curve point, continuous branch (principal step from the
    // nearest grid node's unwrapped value).
    Complex logG_at(Complex t2) const;

    // Y(w(t2)) = w^chi exp(J(w(t2))) and its below/above boundary limits.
    Complex Y_of(Complex t2, int chi) const;
    Complex Y_plus(int nodeIndex, int chi) const;

    // psi1 restricted to G_R (direct contour formula), boundary limits on R,
    // both with the Delta>0 anchor term included.
    Complex direct_value(Complex t2, CutSide side = CutSide::Auto) const;

    bool inDomain(Complex t2) const { return in_domain(p_, k_, t2); }
    bool onCurve(Complex t2, double tolScale = 1e-9) const;

    // Exponential factor E(zetah) = exp(J - C0) and the g/E+ Cauchy transform,
    // exposed for the validation battery.
    Complex E_of(Complex zetah, CutSide side = CutSide::Auto) const;
    Complex I_of(Complex zetah, CutSide side = CutSide::Auto) const;

private:
    struct ExactDensity {
        Complex lam0, f0;
        bool valid = false;
    };
    ExactDensity project_density(Complex zetah) const;
    double invert_uh(double uh0) const;  // t1 on the contour with what(z(t1)) = uh0

    ModelParams p_;
    KernelGeometry k_;
    GluingMap g_;
    ContourGrid grid_;
    BoundaryData bd_;
    friend class Solver;
};

struct SolverOptions {
    int nodeCount = 512;
    double tol = 1e-8;
};

// Full evaluator: psi1, psi2 (index swap), psi (functional equation), the
// decoupled fast path, plus half-resolution twins for error estimates.
class Solver {
public:
    Solver(const ModelParams& p, const SolverOptions& opt = {});

    const ModelParams& params() const { return p_; }
    const Classification& classification() const { return cls_; }
    const SideEngine& primal() const { return *full_; }
    const SideEngine& swapped() const { return *fullSw_; }

    EvalResult psi1(Complex theta2) const;
    EvalResult psi2(Complex theta1) const;
    EvalResult psi(Complex theta1, Complex theta2) const;

    // Alternative evaluation through a user-supplied decoupling function
    // (contract-checked against G on the grid within 1e-8).
    EvalResult psi1_decoupled(const RationalFn& F, Complex theta2) const;

private:
    Complex eval_side(const SideEngine& eng, const SideEngine& engSw,
                      Complex t2, int depth, EvalMethod* method) const;
    EvalResult eval_with_estimate(bool swappedSide, Complex t2) const;

    ModelParams p_;
    Classification cls_;
    std::unique_ptr<SideEngine> full_, half_, fullSw_, halfSw_;
};

}  // namespace srbm

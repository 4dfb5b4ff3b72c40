#include "model.hpp"

#include "kernel.hpp"

namespace srbm {

void ModelParams::validate() const {
    if (!(sigma11 > 0.0) || !(sigma22 > 0.0) || !(detSigma() > 0.0))
        fail(ErrorCode::Parameter, "covariance must be positive definite");
    if (!(x1 >= 0.0) || !(x2 >= 0.0))
        fail(ErrorCode::Parameter, "starting point must be componentwise >= 0");
}

bool validate_existence(const ModelParams& p, bool* warning) {
    p.validate();
    bool exists = (p.r12 > 0.0) || (p.r21 > 0.0) || (p.r12 * p.r21 < 1.0);
    if (warning) {
        // Audit flag for the borderline family where the clauses interact.
        *warning = (p.r12 * p.r21 >= 1.0) && (p.r12 < 0.0 || p.r21 < 0.0);
    }
    return exists;
}

Classification classify(const ModelParams& p) {
    Classification c;
    c.exists = validate_existence(p, &c.existenceWarning);
    double mu1m = p.mu1 < 0.0 ? -p.mu1 : 0.0;  // negative parts
    double mu2m = p.mu2 < 0.0 ? -p.mu2 : 0.0;
    double a = p.mu1 + p.r12 * mu2m;
    double b = p.mu2 + p.r21 * mu1m;
    if (a > 0.0 || b > 0.0)
        c.regime = Regime::Transient;
    else if (a < 0.0 && b < 0.0)
        c.regime = Regime::PositiveRecurrent;
    else
        c.regime = Regime::NullRecurrent;  // exact equality only, by design
    c.driftSignCase = p.mu1 > 0.0 ? (p.mu2 > 0.0 ? DriftSignCase::PP : DriftSignCase::PN)
                                  : (p.mu2 > 0.0 ? DriftSignCase::NP : DriftSignCase::NN);
    return c;
}

ConvergenceDomain convergence_domain(const ModelParams& p, const KernelGeometry& k) {
    Classification c = classify(p);
    if (!c.exists) fail(ErrorCode::Parameter, "process does not exist for these reflections");
    if (c.regime != Regime::Transient)
        fail(ErrorCode::Recurrent, "convergence domain defined for transient instances only");

    ConvergenceDomain d;
    double t1s = k.thetaStar1, t2ss = k.thetaStarStar2;
    switch (c.driftSignCase) {
        case DriftSignCase::PP:
            d.psi1MaxRe = t2ss;
            d.psi2MaxRe = t1s;
            d.psiBox1 = std::min(t1s, 0.0);
            d.psiBox2 = std::min(t2ss, 0.0);
            break;
        case DriftSignCase::PN:
            d.psi1MaxRe = std::min(t2ss, 0.0);
            d.psi2MaxRe = 0.0;
            d.psiBox1 = 0.0;
            d.psiBox2 = std::min(t2ss, 0.0);
            break;
        case DriftSignCase::NP:
            d.psi1MaxRe = 0.0;
            d.psi2MaxRe = std::min(t1s, 0.0);
            d.psiBox1 = std::min(t1s, 0.0);
            d.psiBox2 = 0.0;
            break;
        case DriftSignCase::NN:
            d.psi1MaxRe = 0.0;
            d.psi2MaxRe = 0.0;
            d.psiBox1 = 0.0;
            d.psiBox2 = 0.0;
            break;
    }
    return d;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Transient: return "Transient";
        case Regime::PositiveRecurrent: return "PositiveRecurrent";
        case Regime::NullRecurrent: return "NullRecurrent";
    }
    return "?";
}

const char* drift_case_name(DriftSignCase c) {
    switch (c) {
        case DriftSignCase::PP: return "PP";
        case DriftSignCase::PN: return "PN";
        case DriftSignCase::NP: return "NP";
        case DriftSignCase::NN: return "NN";
    }
    return "?";
}

}  // namespace srbm

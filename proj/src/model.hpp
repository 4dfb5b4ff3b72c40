#pragma once

#include "common.hpp"

namespace srbm {

// Problem instance: covariance Sigma, drift mu, reflection matrix
// R = [[1, r12], [r21, 1]], starting point x >= 0. Immutable after validate().
struct ModelParams {
    double sigma11 = 1.0, sigma12 = 0.0, sigma22 = 1.0;
    double mu1 = 1.0, mu2 = 1.0;
    double r12 = 0.0, r21 = 0.0;
    double x1 = 1.0, x2 = 1.0;

    double detSigma() const { return sigma11 * sigma22 - sigma12 * sigma12; }

    // Index swap 1<->2: maps the process to its coordinate-exchanged copy.
    ModelParams swapped() const {
        ModelParams s;
        s.sigma11 = sigma22; s.sigma12 = sigma12; s.sigma22 = sigma11;
        s.mu1 = mu2; s.mu2 = mu1;
        s.r12 = r21; s.r21 = r12;
        s.x1 = x2; s.x2 = x1;
        return s;
    }

    // Throws Error(Parameter) unless Sigma is positive definite and x >= 0.
    void validate() const;
};

enum class Regime { Transient, PositiveRecurrent, NullRecurrent };
enum class DriftSignCase { PP, PN, NP, NN };

struct Classification {
    bool exists = false;
    bool existenceWarning = false;  // r12*r21 >= 1 with a negative off-diagonal
    Regime regime = Regime::Transient;
    DriftSignCase driftSignCase = DriftSignCase::PP;
};

// Existence of the SRBM: r12 > 0 or r21 > 0 or r12*r21 < 1 (literal
// disjunction; equivalent to the completely-S condition for unit diagonal).
bool validate_existence(const ModelParams& p, bool* warning = nullptr);

// Transient iff mu1 + r12*mu2^- > 0 or mu2 + r21*mu1^- > 0 (mu^- = max(0,-mu));
// positive recurrent iff both quantities are strictly negative; null recurrent
// on exact equality. Requires existence.
Classification classify(const ModelParams& p);

struct ConvergenceDomain {
    double psi1MaxRe = 0.0;          // sup of Re theta2 with psi1 finite
    double psi2MaxRe = 0.0;
    double psiBox1 = 0.0, psiBox2 = 0.0;  // componentwise strict upper bounds for psi
};

struct KernelGeometry;  // kernel.hpp

// Convergence bounds by drift-sign case. Requires a transient instance.
ConvergenceDomain convergence_domain(const ModelParams& p, const KernelGeometry& k);

const char* regime_name(Regime r);
const char* drift_case_name(DriftSignCase c);

}  // namespace srbm

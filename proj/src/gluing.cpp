#include "gluing.hpp"

#include <cmath>

namespace srbm {

namespace {

constexpr double kPi = 3.14159265358979323846;

inline bool on_cut(const GluingMap& g, Complex t2) {
    return t2.imag() == 0.0 && t2.real() >= g.theta2Plus;
}

inline Complex xi_of(const GluingMap& g, Complex t2) {
    return -(t2 - g.center) / g.halfwidth;
}

}  // namespace

GluingMap make_gluing(const ModelParams& p, const KernelGeometry& k) {
    (void)p;
    GluingMap g;
    g.exponent = kPi / k.beta;
    g.center = 0.5 * (k.theta2Plus + k.theta2Minus);
    g.halfwidth = 0.5 * (k.theta2Plus - k.theta2Minus);
    g.theta2Plus = k.theta2Plus;
    return g;
}

Complex chebyshev(double a, Complex x) {
    return std::cos(a * std::acos(x));
}

Complex w_eval(const GluingMap& g, Complex t2) {
    if (on_cut(g, t2))
        fail(ErrorCode::Domain, "w is defined on C \\ [theta2+, inf)");
    Complex xi = xi_of(g, t2);
    double a = g.exponent;
    // Cancellation control at the cut endpoint theta2+ (xi = -1): series in
    // s = sqrt(2(xi+1)), acos(-1+e) = pi - sqrt(2e)(1 + e/24 + ...).
    if (std::abs(t2 - Complex(g.theta2Plus)) < 1e-8 * g.halfwidth) {
        Complex e = xi + 1.0;
        Complex s = std::sqrt(2.0 * e) * (1.0 + e / 24.0);
        return std::cos(a * (kPi - s));
    }
    return std::cos(a * std::acos(xi));
}

Complex w_hat(const GluingMap& g, Complex t2) {
    if (on_cut(g, t2))
        fail(ErrorCode::Domain, "w is defined on C \\ [theta2+, inf)");
    Complex xi = xi_of(g, t2);
    Complex c = std::cos(0.5 * g.exponent * std::acos(xi));
    return 2.0 * c * c;
}

Complex w_prime(const GluingMap& g, Complex t2) {
    if (on_cut(g, t2))
        fail(ErrorCode::Domain, "w is defined on C \\ [theta2+, inf)");
    Complex xi = xi_of(g, t2);
    double a = g.exponent;
    Complex phi = std::acos(xi);
    Complex sp = std::sin(phi);
    // T_a'(xi) = a sin(a phi)/sin(phi); phi -> 0 is the regular point xi = 1
    // (theta2-), where the ratio tends to a^2.
    Complex ratio;
    if (std::abs(sp) < 1e-7) {
        if (std::abs(phi) < 1e-6) {
            ratio = a * a * (1.0 - (a * a - 1.0) * phi * phi / 6.0);
        } else {
            // phi near pi: genuine sqrt singularity of w' at theta2+.
            ratio = a * std::sin(a * phi) / sp;
        }
    } else {
        ratio = a * std::sin(a * phi) / sp;
    }
    return ratio * (-1.0 / g.halfwidth);
}

Complex W_eval(const GluingMap& g, Complex t2) {
    Complex w = w_eval(g, t2);
    if (std::abs(w) < 1e-13)
        fail(ErrorCode::Pole, "W has a pole where w = 0 (the map's chosen pole)");
    return (w + 1.0) / w;
}

}  // namespace srbm

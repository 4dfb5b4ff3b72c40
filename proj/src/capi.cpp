#include "srbm/srbm.h"

#include "bvp.hpp"
#include "config.hpp"
#include "curve.hpp"
#include "dim1.hpp"
#include "gluing.hpp"
#include "kernel.hpp"
#include "model.hpp"
#include "montecarlo.hpp"
#include "validate.hpp"

#include <cstring>
#include <string>

using namespace srbm;

namespace {

thread_local std::string g_lastError;

srbm_status to_status(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return SRBM_ERR_INVALID_ARGUMENT;
        case ErrorCode::Parameter: return SRBM_ERR_PARAMETER;
        case ErrorCode::Domain: return SRBM_ERR_DOMAIN;
        case ErrorCode::Recurrent: return SRBM_ERR_RECURRENT;
        case ErrorCode::Proximity: return SRBM_ERR_PROXIMITY;
        case ErrorCode::Truncation: return SRBM_ERR_TRUNCATION;
        case ErrorCode::Pole: return SRBM_ERR_POLE;
        case ErrorCode::Contract: return SRBM_ERR_CONTRACT;
        case ErrorCode::Resolution: return SRBM_ERR_RESOLUTION;
        case ErrorCode::Reflection: return SRBM_ERR_REFLECTION;
        case ErrorCode::Internal: return SRBM_ERR_INTERNAL;
    }
    return SRBM_ERR_INTERNAL;
}

template <typename Fn>
srbm_status guarded(Fn&& fn) {
    try {
        fn();
        return SRBM_OK;
    } catch (const Error& e) {
        g_lastError = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_lastError = e.what();
        return SRBM_ERR_INTERNAL;
    }
}

ModelParams from_c(const srbm_model_params& mp) {
    ModelParams p;
    p.sigma11 = mp.sigma11; p.sigma12 = mp.sigma12; p.sigma22 = mp.sigma22;
    p.mu1 = mp.mu1; p.mu2 = mp.mu2;
    p.r12 = mp.r12; p.r21 = mp.r21;
    p.x1 = mp.x1; p.x2 = mp.x2;
    return p;
}

SimConfig sim_from(const srbm_run_params* rp) {
    SimConfig s;
    if (rp) {
        s.dt = rp->dt;
        s.tMax = rp->tmax;
        s.paths = rp->paths;
        s.seed = rp->seed;
    }
    return s;
}

void write_c(Complex v, double out[2]) {
    out[0] = v.real();
    out[1] = v.imag();
}

}  // namespace

struct srbm_model {
    ModelParams p;
    KernelGeometry k;
};

struct srbm_solver {
    Solver impl;
    explicit srbm_solver(const ModelParams& p, const SolverOptions& o) : impl(p, o) {}
};

extern "C" {

const char* srbm_version(void) { return "0.1.0"; }

const char* srbm_status_str(srbm_status s) {
    switch (s) {
        case SRBM_OK: return "ok";
        case SRBM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SRBM_ERR_PARAMETER: return "parameter error";
        case SRBM_ERR_DOMAIN: return "domain error";
        case SRBM_ERR_RECURRENT: return "recurrent instance";
        case SRBM_ERR_PROXIMITY: return "proximity error";
        case SRBM_ERR_TRUNCATION: return "truncation error";
        case SRBM_ERR_POLE: return "pole";
        case SRBM_ERR_CONTRACT: return "contract violation";
        case SRBM_ERR_RESOLUTION: return "resolution error";
        case SRBM_ERR_REFLECTION: return "reflection failure";
        case SRBM_ERR_INTERNAL: return "internal error";
    }
    return "?";
}

const char* srbm_last_error(void) { return g_lastError.c_str(); }

void srbm_run_params_defaults(srbm_run_params* rp) {
    if (!rp) return;
    rp->nodes = 512;
    rp->tol = 1e-8;
    rp->dt = 1e-3;
    rp->tmax = 30.0;
    rp->paths = 100000;
    rp->seed = 42;
}

srbm_status srbm_config_parse(const char* text, srbm_model_params* mp,
                              srbm_run_params* rp) {
    if (!text || !mp) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        RunConfig cfg = parse_config(text);
        mp->sigma11 = cfg.model.sigma11;
        mp->sigma12 = cfg.model.sigma12;
        mp->sigma22 = cfg.model.sigma22;
        mp->mu1 = cfg.model.mu1;
        mp->mu2 = cfg.model.mu2;
        mp->r12 = cfg.model.r12;
        mp->r21 = cfg.model.r21;
        mp->x1 = cfg.model.x1;
        mp->x2 = cfg.model.x2;
        if (rp) {
            rp->nodes = cfg.quadratureNodes;
            rp->tol = cfg.quadratureTol;
            rp->dt = cfg.sim.dt;
            rp->tmax = cfg.sim.tMax;
            rp->paths = cfg.sim.paths;
            rp->seed = cfg.sim.seed;
        }
    });
}

srbm_status srbm_model_create(const srbm_model_params* mp, srbm_model** out) {
    if (!mp || !out) return SRBM_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        ModelParams p = from_c(*mp);
        p.validate();
        *out = new srbm_model{p, branch_points(p)};
    });
}

void srbm_model_destroy(srbm_model* m) { delete m; }

srbm_status srbm_model_classify(const srbm_model* m, int* exists, int* warning,
                                int* regime, int* drift_case) {
    if (!m) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        Classification c = classify(m->p);
        if (exists) *exists = c.exists ? 1 : 0;
        if (warning) *warning = c.existenceWarning ? 1 : 0;
        if (regime) *regime = static_cast<int>(c.regime);
        if (drift_case) *drift_case = static_cast<int>(c.driftSignCase);
    });
}

srbm_status srbm_model_geometry(const srbm_model* m, double out9[9]) {
    if (!m || !out9) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const KernelGeometry& k = m->k;
        out9[0] = k.theta1Minus; out9[1] = k.theta1Plus;
        out9[2] = k.theta2Minus; out9[3] = k.theta2Plus;
        out9[4] = k.thetaStar1;  out9[5] = k.thetaStar2;
        out9[6] = k.thetaStarStar1; out9[7] = k.thetaStarStar2;
        out9[8] = k.beta;
    });
}

srbm_status srbm_model_convergence(const srbm_model* m, double* psi1_max_re,
                                   double* psi2_max_re, double box[2]) {
    if (!m) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        ConvergenceDomain d = convergence_domain(m->p, m->k);
        if (psi1_max_re) *psi1_max_re = d.psi1MaxRe;
        if (psi2_max_re) *psi2_max_re = d.psi2MaxRe;
        if (box) { box[0] = d.psiBox1; box[1] = d.psiBox2; }
    });
}

srbm_status srbm_model_gamma(const srbm_model* m, const double theta[4], double out[2]) {
    if (!m || !theta || !out) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        write_c(gamma_k(m->p, Complex(theta[0], theta[1]), Complex(theta[2], theta[3])), out);
    });
}

srbm_status srbm_model_gamma1(const srbm_model* m, const double theta[4], double out[2]) {
    if (!m || !theta || !out) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        write_c(gamma1_k(m->p, Complex(theta[0], theta[1]), Complex(theta[2], theta[3])), out);
    });
}

srbm_status srbm_model_gamma2(const srbm_model* m, const double theta[4], double out[2]) {
    if (!m || !theta || !out) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        write_c(gamma2_k(m->p, Complex(theta[0], theta[1]), Complex(theta[2], theta[3])), out);
    });
}

srbm_status srbm_model_gluing(const srbm_model* m, const double theta2[2], double w[2],
                              double wprime[2], double W[2]) {
    if (!m || !theta2) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        GluingMap g = make_gluing(m->p, m->k);
        Complex t2(theta2[0], theta2[1]);
        Complex wv = w_eval(g, t2);
        if (w) write_c(wv, w);
        if (wprime) write_c(w_prime(g, t2), wprime);
        if (W) write_c(W_eval(g, t2), W);  // throws Pole where w = 0
    });
}

srbm_status srbm_model_decoupling(const srbm_model* m, int* satisfied, double* epsilon,
                                  double* delta) {
    if (!m) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        DecouplingCondition c = decoupling_condition(m->p);
        if (satisfied) *satisfied = c.satisfied ? 1 : 0;
        if (epsilon) *epsilon = c.epsilon;
        if (delta) *delta = c.delta;
    });
}

srbm_status srbm_solver_create(const srbm_model* m, int nodes, double tol,
                               srbm_solver** out) {
    if (!m || !out) return SRBM_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        SolverOptions o;
        o.nodeCount = nodes > 0 ? nodes : 512;
        o.tol = tol > 0.0 ? tol : 1e-8;
        *out = new srbm_solver(m->p, o);
    });
}

void srbm_solver_destroy(srbm_solver* s) { delete s; }

srbm_status srbm_solver_grid_size(const srbm_solver* s, int* count) {
    if (!s || !count) return SRBM_ERR_INVALID_ARGUMENT;
    *count = s->impl.primal().grid().nodeCount();
    return SRBM_OK;
}

srbm_status srbm_solver_grid_row(const srbm_solver* s, int i, double out4[4]) {
    if (!s || !out4) return SRBM_ERR_INVALID_ARGUMENT;
    const ContourGrid& g = s->impl.primal().grid();
    if (i < 0 || i >= g.nodeCount()) return SRBM_ERR_INVALID_ARGUMENT;
    const CurvePoint& cp = g.pts[i];
    out4[0] = cp.t1;
    out4[1] = cp.z.real();
    out4[2] = cp.z.imag();
    out4[3] = cp.weight;
    return SRBM_OK;
}

srbm_status srbm_solver_index(const srbm_solver* s, int* chi, int* chi_wind, double* d,
                              double* delta) {
    if (!s) return SRBM_ERR_INVALID_ARGUMENT;
    const BoundaryData& bd = s->impl.primal().boundary();
    if (chi) *chi = bd.chiSign;
    if (chi_wind) *chi_wind = bd.chiWind;
    if (d) *d = bd.d;
    if (delta) *delta = bd.Delta;
    return SRBM_OK;
}

namespace {

srbm_status eval_common(const srbm_solver* s, int which, const double* in, double out[2],
                        double* err, int* method) {
    if (!s || !in || !out) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        EvalResult r;
        if (which == 0)
            r = s->impl.psi1(Complex(in[0], in[1]));
        else if (which == 1)
            r = s->impl.psi2(Complex(in[0], in[1]));
        else
            r = s->impl.psi(Complex(in[0], in[1]), Complex(in[2], in[3]));
        write_c(r.value, out);
        if (err) *err = r.errEstimate;
        if (method) *method = static_cast<int>(r.method);
    });
}

}  // namespace

srbm_status srbm_solver_psi1(const srbm_solver* s, const double theta2[2], double out[2],
                             double* err, int* method) {
    return eval_common(s, 0, theta2, out, err, method);
}

srbm_status srbm_solver_psi2(const srbm_solver* s, const double theta1[2], double out[2],
                             double* err, int* method) {
    return eval_common(s, 1, theta1, out, err, method);
}

srbm_status srbm_solver_psi(const srbm_solver* s, const double theta[4], double out[2],
                            double* err, int* method) {
    return eval_common(s, 2, theta, out, err, method);
}

srbm_status srbm_solver_psi1_decoupled(const srbm_solver* s, const double lead[2],
                                       const double* zeros, int nzeros,
                                       const double* poles, int npoles,
                                       const double theta2[2], double out[2],
                                       double* err) {
    if (!s || !lead || !theta2 || !out) return SRBM_ERR_INVALID_ARGUMENT;
    if ((nzeros > 0 && !zeros) || (npoles > 0 && !poles)) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        RationalFn F;
        F.lead = Complex(lead[0], lead[1]);
        for (int i = 0; i < nzeros; ++i) F.zeros.emplace_back(zeros[2 * i], zeros[2 * i + 1]);
        for (int i = 0; i < npoles; ++i) F.poles.emplace_back(poles[2 * i], poles[2 * i + 1]);
        EvalResult r = s->impl.psi1_decoupled(F, Complex(theta2[0], theta2[1]));
        write_c(r.value, out);
        if (err) *err = r.errEstimate;
    });
}

srbm_status srbm_mc_psi(const srbm_model* m, const double theta[4],
                        const srbm_run_params* rp, double mean[2],
                        double* stderr_total, double* bias_bound) {
    if (!m || !theta || !mean) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        McEstimate e = estimate_psi(m->p, Complex(theta[0], theta[1]),
                                    Complex(theta[2], theta[3]), sim_from(rp));
        write_c(e.mean, mean);
        if (stderr_total) *stderr_total = e.stderrTotal;
        if (bias_bound) *bias_bound = e.biasBound;
    });
}

srbm_status srbm_mc_psi_boundary(const srbm_model* m, int face, const double theta[2],
                                 const srbm_run_params* rp, double mean[2],
                                 double* stderr_total, double* bias_bound) {
    if (!m || !theta || !mean) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        McEstimate e = estimate_psi_boundary(m->p, face, Complex(theta[0], theta[1]),
                                             sim_from(rp));
        write_c(e.mean, mean);
        if (stderr_total) *stderr_total = e.stderrTotal;
        if (bias_bound) *bias_bound = e.biasBound;
    });
}

srbm_status srbm_mc_occupation(const srbm_model* m, double x0, double x1, double y0,
                               double y1, int nx, int ny, const srbm_run_params* rp,
                               double* mean, double* stderr_out) {
    if (!m || !mean || !stderr_out || nx < 1 || ny < 1 || !(x1 > x0) || !(y1 > y0))
        return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        HistSpec h{x0, x1, y0, y1, nx, ny};
        McResults res = run_mc(m->p, sim_from(rp), {}, &h);
        for (std::size_t i = 0; i < res.histogram.size(); ++i) {
            mean[i] = res.histogram[i].mean.real();
            stderr_out[i] = res.histogram[i].stderrTotal;
        }
    });
}

srbm_status srbm_dim1_green(double sigma2, double mu, double x0, double x, double* out) {
    if (!out) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = green_1d({sigma2, mu, x0}, x); });
}

srbm_status srbm_dim1_psi(double sigma2, double mu, double x0, const double theta[2],
                          double out[2]) {
    if (!theta || !out) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        write_c(psi_1d({sigma2, mu, x0}, Complex(theta[0], theta[1])), out);
    });
}

srbm_status srbm_mc_dim1(double sigma2, double mu, double x0, const double theta[2],
                         double xmax, int nbins, const srbm_run_params* rp,
                         double psi_mean[2], double* psi_stderr, double* eL_mean,
                         double* eL_stderr, double* hist_mean, double* hist_stderr) {
    if (!theta) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        Dim1McResult r = simulate_1d(sigma2, mu, x0, Complex(theta[0], theta[1]), xmax,
                                     nbins, sim_from(rp));
        if (psi_mean) write_c(r.psi.mean, psi_mean);
        if (psi_stderr) *psi_stderr = r.psi.stderrTotal;
        if (eL_mean) *eL_mean = r.localTimeTotal.mean.real();
        if (eL_stderr) *eL_stderr = r.localTimeTotal.stderrTotal;
        if (hist_mean && hist_stderr) {
            for (std::size_t i = 0; i < r.histogram.size(); ++i) {
                hist_mean[i] = r.histogram[i].mean.real();
                hist_stderr[i] = r.histogram[i].stderrTotal;
            }
        }
    });
}

srbm_status srbm_validate_run(const srbm_model_params* mp, const srbm_run_params* rp,
                              srbm_validate_cb cb, void* user, int* n_failed) {
    if (!mp) return SRBM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        RunConfig cfg;
        cfg.model = from_c(*mp);
        if (rp) {
            cfg.quadratureNodes = rp->nodes;
            cfg.quadratureTol = rp->tol;
            cfg.sim = sim_from(rp);
        }
        ValidationReport rep = run_validate(cfg);
        if (cb)
            for (const auto& row : rep.rows)
                cb(row.name.c_str(), row.status.c_str(), row.value, row.tolerance, user);
        if (n_failed) *n_failed = rep.failures();
    });
}

}  // extern "C"

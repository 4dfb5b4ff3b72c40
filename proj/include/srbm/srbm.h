/*
 * srbm-green: moment generating functions of Green's functions of a transient
 * obliquely reflected Brownian motion in the quadrant, with a Monte Carlo
 * oracle and one-dimensional closed forms.
 *
 * C interface: opaque handles + status codes. All outputs are written through
 * pointers; complex values are (re, im) pairs. On any status other than
 * SRBM_OK, srbm_last_error() returns a thread-local message.
 */
#ifndef SRBM_GREEN_SRBM_H
#define SRBM_GREEN_SRBM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SRBM_API __declspec(dllexport)
#else
#define SRBM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum srbm_status {
    SRBM_OK = 0,
    SRBM_ERR_INVALID_ARGUMENT,
    SRBM_ERR_PARAMETER,
    SRBM_ERR_DOMAIN,
    SRBM_ERR_RECURRENT,
    SRBM_ERR_PROXIMITY,
    SRBM_ERR_TRUNCATION,
    SRBM_ERR_POLE,
    SRBM_ERR_CONTRACT,
    SRBM_ERR_RESOLUTION,
    SRBM_ERR_REFLECTION,
    SRBM_ERR_INTERNAL
} srbm_status;

typedef struct srbm_model_params {
    double sigma11, sigma12, sigma22;
    double mu1, mu2;
    double r12, r21;
    double x1, x2;
} srbm_model_params;

typedef struct srbm_run_params {
    int nodes;            /* quadrature nodes, default 512 */
    double tol;           /* quadrature tolerance, default 1e-8 */
    double dt;            /* simulation step, default 1e-3 */
    double tmax;          /* horizon, default 30 */
    long long paths;      /* default 100000 */
    uint64_t seed;        /* default 42 */
} srbm_run_params;

/* regimes */
enum { SRBM_TRANSIENT = 0, SRBM_POSITIVE_RECURRENT = 1, SRBM_NULL_RECURRENT = 2 };
/* drift sign cases */
enum { SRBM_DRIFT_PP = 0, SRBM_DRIFT_PN = 1, SRBM_DRIFT_NP = 2, SRBM_DRIFT_NN = 3 };
/* psi evaluation methods */
enum { SRBM_EVAL_DIRECT = 0, SRBM_EVAL_BOUNDARY_LIMIT = 1, SRBM_EVAL_CONTINUATION = 2 };

typedef struct srbm_model srbm_model;   /* parameters + derived geometry */
typedef struct srbm_solver srbm_solver; /* contour grids + boundary data */

SRBM_API const char* srbm_version(void);
SRBM_API const char* srbm_status_str(srbm_status s);
SRBM_API const char* srbm_last_error(void);

SRBM_API void srbm_run_params_defaults(srbm_run_params* rp);

/* key=value config text; missing keys take defaults, unknown keys error */
SRBM_API srbm_status srbm_config_parse(const char* text, srbm_model_params* mp,
                                       srbm_run_params* rp);

SRBM_API srbm_status srbm_model_create(const srbm_model_params* mp, srbm_model** out);
SRBM_API void srbm_model_destroy(srbm_model* m);

/* exists/warning/regime/drift_case may each be NULL */
SRBM_API srbm_status srbm_model_classify(const srbm_model* m, int* exists,
                                         int* warning, int* regime, int* drift_case);

/* out9 = theta1-, theta1+, theta2-, theta2+, theta*_1, theta*_2,
 *        theta**_1, theta**_2, beta */
SRBM_API srbm_status srbm_model_geometry(const srbm_model* m, double out9[9]);

SRBM_API srbm_status srbm_model_convergence(const srbm_model* m, double* psi1_max_re,
                                            double* psi2_max_re, double box[2]);

SRBM_API srbm_status srbm_model_gamma(const srbm_model* m, const double theta[4],
                                      double out[2]);
SRBM_API srbm_status srbm_model_gamma1(const srbm_model* m, const double theta[4],
                                       double out[2]);
SRBM_API srbm_status srbm_model_gamma2(const srbm_model* m, const double theta[4],
                                       double out[2]);

/* gluing map at theta2 = (re, im): w, w', W; any output pointer may be NULL.
 * A pole of W reports SRBM_ERR_POLE with w/w' still written. */
SRBM_API srbm_status srbm_model_gluing(const srbm_model* m, const double theta2[2],
                                       double w[2], double wprime[2], double W[2]);

/* decoupling condition: eps + delta in beta Z + pi Z */
SRBM_API srbm_status srbm_model_decoupling(const srbm_model* m, int* satisfied,
                                           double* epsilon, double* delta);

SRBM_API srbm_status srbm_solver_create(const srbm_model* m, int nodes, double tol,
                                        srbm_solver** out);
SRBM_API void srbm_solver_destroy(srbm_solver* s);

/* contour grid rows (t1, re z, im z, weight) for plotting */
SRBM_API srbm_status srbm_solver_grid_size(const srbm_solver* s, int* count);
SRBM_API srbm_status srbm_solver_grid_row(const srbm_solver* s, int i, double out4[4]);

/* index data: chi (Lemma sign rule), winding cross-check, d and Delta */
SRBM_API srbm_status srbm_solver_index(const srbm_solver* s, int* chi, int* chi_wind,
                                       double* d, double* delta);

/* psi evaluations; out = (re, im); err/method may be NULL */
SRBM_API srbm_status srbm_solver_psi1(const srbm_solver* s, const double theta2[2],
                                      double out[2], double* err, int* method);
SRBM_API srbm_status srbm_solver_psi2(const srbm_solver* s, const double theta1[2],
                                      double out[2], double* err, int* method);
SRBM_API srbm_status srbm_solver_psi(const srbm_solver* s, const double theta[4],
                                     double out[2], double* err, int* method);

/* decoupled fast path with F = lead * prod(z - zeros)/prod(z - poles);
 * zeros/poles are (re, im) pairs */
SRBM_API srbm_status srbm_solver_psi1_decoupled(const srbm_solver* s,
                                                const double lead[2],
                                                const double* zeros, int nzeros,
                                                const double* poles, int npoles,
                                                const double theta2[2], double out[2],
                                                double* err);

/* Monte Carlo: interior transform estimate at theta = (re1,im1,re2,im2) */
SRBM_API srbm_status srbm_mc_psi(const srbm_model* m, const double theta[4],
                                 const srbm_run_params* rp, double mean[2],
                                 double* stderr_total, double* bias_bound);
/* boundary transform estimate on face 1 or 2, theta = (re, im) */
SRBM_API srbm_status srbm_mc_psi_boundary(const srbm_model* m, int face,
                                          const double theta[2],
                                          const srbm_run_params* rp, double mean[2],
                                          double* stderr_total, double* bias_bound);
/* occupation histogram over [x0,x1)x[y0,y1), nx*ny cells; out arrays length
 * nx*ny in row-major (i*ny + j) order */
SRBM_API srbm_status srbm_mc_occupation(const srbm_model* m, double x0, double x1,
                                        double y0, double y1, int nx, int ny,
                                        const srbm_run_params* rp, double* mean,
                                        double* stderr_out);

/* one-dimensional closed forms */
SRBM_API srbm_status srbm_dim1_green(double sigma2, double mu, double x0, double x,
                                     double* out);
SRBM_API srbm_status srbm_dim1_psi(double sigma2, double mu, double x0,
                                   const double theta[2], double out[2]);

/* 1D simulation: psi estimate at theta, E L(inf), histogram over [0,xmax) */
SRBM_API srbm_status srbm_mc_dim1(double sigma2, double mu, double x0,
                                  const double theta[2], double xmax, int nbins,
                                  const srbm_run_params* rp, double psi_mean[2],
                                  double* psi_stderr, double* eL_mean,
                                  double* eL_stderr, double* hist_mean,
                                  double* hist_stderr);

/* validation battery; the callback receives one row per check and may be NULL
 * (then only n_failed is reported). Returns SRBM_OK even when checks fail. */
typedef void (*srbm_validate_cb)(const char* name, const char* status, double value,
                                 double tolerance, void* user);
SRBM_API srbm_status srbm_validate_run(const srbm_model_params* mp,
                                       const srbm_run_params* rp,
                                       srbm_validate_cb cb, void* user,
                                       int* n_failed);

#ifdef __cplusplus
}
#endif

#endif /* SRBM_GREEN_SRBM_H */

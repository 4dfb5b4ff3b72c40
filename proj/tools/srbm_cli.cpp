// srbm: command-line front end over the srbm-green C API.
// Every output is CSV with a provenance comment line.

#include "srbm/srbm.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Options {
    srbm_model_params mp{1, 0, 1, 1, 1, 0, 0, 1, 1};
    srbm_run_params rp;
};

int die(srbm_status st, const std::string& what) {
    std::fprintf(stderr, "error: %s: %s (%s)\n", what.c_str(), srbm_last_error(),
                 srbm_status_str(st));
    return 2;
}

void provenance(const Options& o) {
    std::printf("# srbm-green v%s seed=%llu nodes=%d\n", srbm_version(),
                static_cast<unsigned long long>(o.rp.seed), o.rp.nodes);
}

bool parse_pair(const std::string& s, double out[2]) {
    out[0] = 0.0;
    out[1] = 0.0;
    std::istringstream in(s);
    char comma = 0;
    if (!(in >> out[0])) return false;
    if (in >> comma) {
        if (comma != ',') return false;
        if (!(in >> out[1])) return false;
    }
    return true;
}

bool parse_quad(const std::string& s, double out[4]) {
    std::istringstream in(s);
    std::string tok;
    std::vector<double> vals;
    while (std::getline(in, tok, ',')) {
        try {
            vals.push_back(std::stod(tok));
        } catch (...) {
            return false;
        }
    }
    if (vals.size() == 2) {  // real pair
        out[0] = vals[0]; out[1] = 0.0; out[2] = vals[1]; out[3] = 0.0;
        return true;
    }
    if (vals.size() == 4) {
        for (int i = 0; i < 4; ++i) out[i] = vals[i];
        return true;
    }
    return false;
}

struct ValidateCtx {
    int rows = 0;
};

void validate_row(const char* name, const char* status, double value, double tol,
                  void* user) {
    static_cast<ValidateCtx*>(user)->rows++;
    std::printf("%s,%s,%.12g,%.12g\n", name, status, value, tol);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Green's function transforms of reflected Brownian motion in the quadrant"};
    app.require_subcommand(1);

    Options o;
    srbm_run_params_defaults(&o.rp);
    std::string configPath;
    app.add_option("-c,--config", configPath, "key=value config file");

    auto addModelFlags = [&](CLI::App* cmd) {
        cmd->add_option("--sigma11", o.mp.sigma11);
        cmd->add_option("--sigma12", o.mp.sigma12);
        cmd->add_option("--sigma22", o.mp.sigma22);
        cmd->add_option("--mu1", o.mp.mu1);
        cmd->add_option("--mu2", o.mp.mu2);
        cmd->add_option("--r12", o.mp.r12);
        cmd->add_option("--r21", o.mp.r21);
        cmd->add_option("--x1", o.mp.x1);
        cmd->add_option("--x2", o.mp.x2);
        cmd->add_option("--nodes", o.rp.nodes);
        cmd->add_option("--tol", o.rp.tol);
    };

    std::string thetaArg, fromArg, toArg;
    int gridNodes = 0, face = 0, histDims[2] = {40, 40};
    long long pathsArg = -1;
    double dtArg = -1, tmaxArg = -1;
    long long seedArg = -1;
    std::string histArg;
    double d1sigma2 = 1.0, d1mu = 1.0, d1x0 = 0.0, d1x = -1.0;
    int count = 64;

    CLI::App* cClassify = app.add_subcommand("classify", "existence / recurrence / drift case");
    addModelFlags(cClassify);

    CLI::App* cKernel = app.add_subcommand("kernel", "branch points and intersection points");
    addModelFlags(cKernel);

    CLI::App* cCurve = app.add_subcommand("curve", "contour grid CSV: t1,re_z,im_z,weight");
    addModelFlags(cCurve);
    cCurve->add_option("--nodes-out", gridNodes, "grid nodes to emit (defaults to --nodes)");

    CLI::App* cGlue = app.add_subcommand("glue", "conformal gluing values at theta2");
    addModelFlags(cGlue);
    cGlue->add_option("--theta2", thetaArg, "a,b")->required();

    CLI::App* cPsi1 = app.add_subcommand("psi1", "boundary transform psi1(theta2)");
    addModelFlags(cPsi1);
    cPsi1->add_option("--theta2", thetaArg, "a,b")->required();

    CLI::App* cPsi2 = app.add_subcommand("psi2", "boundary transform psi2(theta1)");
    addModelFlags(cPsi2);
    cPsi2->add_option("--theta1", thetaArg, "a,b")->required();

    CLI::App* cPsi = app.add_subcommand("psi", "interior transform psi(theta)");
    addModelFlags(cPsi);
    cPsi->add_option("--theta", thetaArg, "re1,re2 or re1,im1,re2,im2")->required();

    CLI::App* cMc = app.add_subcommand("mc", "Monte Carlo estimators");
    addModelFlags(cMc);
    cMc->add_option("--paths", pathsArg);
    cMc->add_option("--dt", dtArg);
    cMc->add_option("--tmax", tmaxArg);
    cMc->add_option("--seed", seedArg);
    cMc->add_option("--theta", thetaArg, "interior: re1,re2 or re1,im1,re2,im2; with --face: re[,im]");
    cMc->add_option("--face", face, "boundary face index (1 or 2)");
    cMc->add_option("--hist", histArg, "x0,x1,y0,y1,nx,ny occupation histogram");

    CLI::App* cDim1 = app.add_subcommand("dim1", "one-dimensional closed forms");
    cDim1->add_option("--sigma2", d1sigma2);
    cDim1->add_option("--mu", d1mu);
    cDim1->add_option("--x0", d1x0);
    cDim1->add_option("--x", d1x, "evaluate the Green's function at x");
    cDim1->add_option("--theta", thetaArg, "evaluate the transform at theta = a,b");

    CLI::App* cValidate = app.add_subcommand("validate", "invariant battery; nonzero exit on failure");
    addModelFlags(cValidate);

    CLI::App* cPlot = app.add_subcommand("plot-data", "psi1 along a segment");
    addModelFlags(cPlot);
    cPlot->add_option("--from", fromArg, "a,b")->required();
    cPlot->add_option("--to", toArg, "a,b")->required();
    cPlot->add_option("--count", count);

    CLI11_PARSE(app, argc, argv);

    if (!configPath.empty()) {
        std::ifstream f(configPath);
        if (!f) {
            std::fprintf(stderr, "error: cannot open config '%s'\n", configPath.c_str());
            return 2;
        }
        std::stringstream ss;
        ss << f.rdbuf();
        srbm_status st = srbm_config_parse(ss.str().c_str(), &o.mp, &o.rp);
        if (st != SRBM_OK) return die(st, "config");
        // explicit flags override the file
        for (CLI::App* sub : app.get_subcommands()) (void)sub;
    }
    if (pathsArg > 0) o.rp.paths = pathsArg;
    if (dtArg > 0) o.rp.dt = dtArg;
    if (tmaxArg > 0) o.rp.tmax = tmaxArg;
    if (seedArg >= 0) o.rp.seed = static_cast<uint64_t>(seedArg);

    srbm_model* model = nullptr;
    srbm_status st = srbm_model_create(&o.mp, &model);
    if (st != SRBM_OK) return die(st, "model");
    struct ModelGuard {
        srbm_model* m;
        ~ModelGuard() { srbm_model_destroy(m); }
    } guard{model};

    if (cClassify->parsed()) {
        int exists = 0, warn = 0, regime = 0, dcase = 0;
        st = srbm_model_classify(model, &exists, &warn, &regime, &dcase);
        if (st != SRBM_OK) return die(st, "classify");
        provenance(o);
        static const char* regimes[] = {"Transient", "PositiveRecurrent", "NullRecurrent"};
        static const char* cases[] = {"PP", "PN", "NP", "NN"};
        std::printf("exists,regime,drift_case,existence_warning\n");
        std::printf("%s,%s,%s,%s\n", exists ? "true" : "false", regimes[regime],
                    cases[dcase], warn ? "true" : "false");
        return 0;
    }

    if (cKernel->parsed()) {
        double g9[9];
        st = srbm_model_geometry(model, g9);
        if (st != SRBM_OK) return die(st, "kernel");
        provenance(o);
        std::printf("theta1_minus,theta1_plus,theta2_minus,theta2_plus,"
                    "theta_star_1,theta_star_2,theta_ss_1,theta_ss_2,beta\n");
        for (int i = 0; i < 9; ++i) std::printf("%.17g%s", g9[i], i == 8 ? "\n" : ",");
        return 0;
    }

    if (cCurve->parsed()) {
        srbm_solver* s = nullptr;
        int n = gridNodes > 0 ? gridNodes : o.rp.nodes;
        st = srbm_solver_create(model, n, o.rp.tol, &s);
        if (st != SRBM_OK) return die(st, "solver");
        provenance(o);
        std::printf("t1,re_z,im_z,weight\n");
        int cnt = 0;
        srbm_solver_grid_size(s, &cnt);
        for (int i = 0; i < cnt; ++i) {
            double row[4];
            srbm_solver_grid_row(s, i, row);
            std::printf("%.17g,%.17g,%.17g,%.17g\n", row[0], row[1], row[2], row[3]);
        }
        srbm_solver_destroy(s);
        return 0;
    }

    if (cGlue->parsed()) {
        double t2[2];
        if (!parse_pair(thetaArg, t2)) return die(SRBM_ERR_INVALID_ARGUMENT, "--theta2");
        double w[2], wp[2], W[2];
        st = srbm_model_gluing(model, t2, w, wp, W);
        provenance(o);
        if (st == SRBM_ERR_POLE) {
            std::printf("w,%.17g,%.17g\n", w[0], w[1]);
            std::printf("W,pole,pole\n");
            std::fprintf(stderr, "note: W has a pole at this point (w = 0)\n");
            return 0;
        }
        if (st != SRBM_OK) return die(st, "glue");
        std::printf("w,%.17g,%.17g\n", w[0], w[1]);
        std::printf("W,%.17g,%.17g\n", W[0], W[1]);
        return 0;
    }

    if (cPsi1->parsed() || cPsi2->parsed() || cPsi->parsed()) {
        srbm_solver* s = nullptr;
        st = srbm_solver_create(model, o.rp.nodes, o.rp.tol, &s);
        if (st != SRBM_OK) return die(st, "solver");
        double out[2], err = 0.0;
        int method = 0;
        if (cPsi->parsed()) {
            double th[4];
            if (!parse_quad(thetaArg, th)) return die(SRBM_ERR_INVALID_ARGUMENT, "--theta");
            st = srbm_solver_psi(s, th, out, &err, &method);
        } else {
            double th[2];
            if (!parse_pair(thetaArg, th)) return die(SRBM_ERR_INVALID_ARGUMENT, "--theta");
            st = cPsi1->parsed() ? srbm_solver_psi1(s, th, out, &err, &method)
                                 : srbm_solver_psi2(s, th, out, &err, &method);
        }
        srbm_solver_destroy(s);
        if (st != SRBM_OK) return die(st, "psi");
        provenance(o);
        static const char* methods[] = {"direct", "boundary_limit", "analytic_continuation"};
        std::printf("# method=%s\n", methods[method]);
        std::printf("re,im,abs_err_estimate\n");
        std::printf("%.17g,%.17g,%.3g\n", out[0], out[1], err);
        return 0;
    }

    if (cMc->parsed()) {
        if (!histArg.empty()) {
            double h[6];
            std::istringstream in(histArg);
            std::string tok;
            int i = 0;
            while (std::getline(in, tok, ',') && i < 6) h[i++] = std::stod(tok);
            if (i != 6) return die(SRBM_ERR_INVALID_ARGUMENT, "--hist");
            int nx = static_cast<int>(h[4]), ny = static_cast<int>(h[5]);
            std::vector<double> mean(static_cast<size_t>(nx) * ny),
                stderrv(static_cast<size_t>(nx) * ny);
            st = srbm_mc_occupation(model, h[0], h[1], h[2], h[3], nx, ny, &o.rp,
                                    mean.data(), stderrv.data());
            if (st != SRBM_OK) return die(st, "mc");
            provenance(o);
            std::printf("i,j,mean,stderr\n");
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < ny; ++b)
                    std::printf("%d,%d,%.12g,%.12g\n", a, b, mean[a * ny + b],
                                stderrv[a * ny + b]);
            return 0;
        }
        double mean[2], se = 0.0, bias = 0.0;
        if (face != 0) {
            double th[2];
            if (!parse_pair(thetaArg, th)) return die(SRBM_ERR_INVALID_ARGUMENT, "--theta");
            st = srbm_mc_psi_boundary(model, face, th, &o.rp, mean, &se, &bias);
        } else {
            double th[4];
            if (!parse_quad(thetaArg, th)) return die(SRBM_ERR_INVALID_ARGUMENT, "--theta");
            st = srbm_mc_psi(model, th, &o.rp, mean, &se, &bias);
        }
        if (st != SRBM_OK) return die(st, "mc");
        provenance(o);
        if (mean[1] != 0.0) std::printf("# mean_im=%.12g\n", mean[1]);
        std::printf("mean,stderr,paths,dt,tmax,seed\n");
        std::printf("%.12g,%.12g,%lld,%.12g,%.12g,%llu\n", mean[0], se, o.rp.paths,
                    o.rp.dt, o.rp.tmax, static_cast<unsigned long long>(o.rp.seed));
        return 0;
    }

    if (cDim1->parsed()) {
        provenance(o);
        if (!thetaArg.empty()) {
            double th[2], out[2];
            if (!parse_pair(thetaArg, th)) return die(SRBM_ERR_INVALID_ARGUMENT, "--theta");
            st = srbm_dim1_psi(d1sigma2, d1mu, d1x0, th, out);
            if (st != SRBM_OK) return die(st, "dim1");
            std::printf("re,im\n%.17g,%.17g\n", out[0], out[1]);
        } else if (d1x >= 0.0) {
            double out = 0.0;
            st = srbm_dim1_green(d1sigma2, d1mu, d1x0, d1x, &out);
            if (st != SRBM_OK) return die(st, "dim1");
            std::printf("value\n%.17g\n", out);
        } else {
            return die(SRBM_ERR_INVALID_ARGUMENT, "dim1 needs --x or --theta");
        }
        return 0;
    }

    if (cValidate->parsed()) {
        provenance(o);
        std::printf("check_name,status,value,tolerance\n");
        ValidateCtx ctx;
        int nFailed = 0;
        st = srbm_validate_run(&o.mp, &o.rp, validate_row, &ctx, &nFailed);
        if (st != SRBM_OK) return die(st, "validate");
        return nFailed == 0 ? 0 : 1;
    }

    if (cPlot->parsed()) {
        double a[2], b[2];
        if (!parse_pair(fromArg, a) || !parse_pair(toArg, b))
            return die(SRBM_ERR_INVALID_ARGUMENT, "--from/--to");
        srbm_solver* s = nullptr;
        st = srbm_solver_create(model, o.rp.nodes, o.rp.tol, &s);
        if (st != SRBM_OK) return die(st, "solver");
        provenance(o);
        std::printf("re_theta2,im_theta2,re_psi1,im_psi1\n");
        for (int i = 0; i < count; ++i) {
            double t = count == 1 ? 0.0 : double(i) / (count - 1);
            double th[2] = {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
            double out[2];
            if (srbm_solver_psi1(s, th, out, nullptr, nullptr) == SRBM_OK)
                std::printf("%.12g,%.12g,%.17g,%.17g\n", th[0], th[1], out[0], out[1]);
            else
                std::printf("%.12g,%.12g,nan,nan\n", th[0], th[1]);
        }
        srbm_solver_destroy(s);
        return 0;
    }

    return 0;
}

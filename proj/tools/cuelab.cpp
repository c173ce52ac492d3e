#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cuelab/convergence.hpp"
#include "cuelab/exact_functionals.hpp"
#include "cuelab/kernels.hpp"
#include "cuelab/limit_constants.hpp"
#include "cuelab/polytope.hpp"
#include "cuelab/report.hpp"
#include "cuelab/sampler.hpp"
#include "cuelab/selftest.hpp"

namespace {

using namespace cuelab;

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash))) / Rat(BigInt(s.substr(slash + 1)));
}

std::vector<double> parse_points(const std::string& s) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stod(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

struct Options {
    long N = 2, k = 2, beta = 1, m = 0, t = 1, samples = 200000, workers = 0;
    std::string rho = "1/2", c = "1", lambda = "1";
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tol = 1e-6;
    std::string method = "auto", format = "json", out;
    std::string xs, ys;
};

long resolve_workers(long flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("CUE_LAB_WORKERS")) {
        long w = std::atol(env);
        if (w > 0) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<long>(hc) : 1;
}

Report base_report(const std::string& functional, const std::string& anchor, const Options& o) {
    Report r;
    r.functional = functional;
    r.paper_anchor = anchor;
    if (o.seed_set) {
        r.has_seed = true;
        r.seed = o.seed;
    }
    return r;
}

void finish(Report& r, const Options& o, std::chrono::steady_clock::time_point t0) {
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit_report(r, o.format, o.out);
}

int run_exact(const std::string& functional, const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    if (functional == "ks") {
        r = base_report("exact.ks", "Eq:SchurJointMoments", o);
        r.parameters = {{"N", std::to_string(o.N)}, {"k", std::to_string(o.k)}};
        r.exact = true;
        r.exact_value = Rat(ks_moment(o.N, o.k));
    } else if (functional == "sc") {
        r = base_report("exact.sc", "FuncZ:MidSecularCoeff", o);
        r.parameters = {{"N", std::to_string(o.N)}, {"m", std::to_string(o.m)}, {"k", std::to_string(o.k)}};
        r.exact = true;
        r.exact_value = Rat(secular_moment(o.N, o.m, o.k));
    } else if (functional == "kr3g") {
        r = base_report("exact.kr3g", "Def:KR3Gfunctional", o);
        r.parameters = {{"N", std::to_string(o.N)}, {"m", std::to_string(o.m)}, {"k", std::to_string(o.k)}};
        r.exact = true;
        r.exact_value = Rat(kr3g_moment(o.N, o.m, o.k));
    } else if (functional == "mom") {
        r = base_report("exact.mom", "FuncZ:MoMo", o);
        r.parameters = {{"N", std::to_string(o.N)}, {"k", std::to_string(o.k)}, {"beta", std::to_string(o.beta)}};
        r.exact = true;
        r.exact_value = Rat(mom_moment(o.N, o.k, o.beta));
    } else if (functional == "trunc") {
        Rat lam = parse_rat(o.lambda);
        r = base_report("exact.trunc", "FuncZ:Truncation", o);
        r.parameters = {{"k", std::to_string(o.k)}, {"t", std::to_string(o.t)}, {"lambda", o.lambda}};
        r.exact = true;
        r.exact_value = truncated_moment_lambda(o.k, o.t, lam * lam);
    } else if (functional == "ratio") {
        std::vector<double> X = parse_points(o.xs), Y = parse_points(o.ys);
        r = base_report("exact.ratio", "Eq:ExpectationRatiosAsSupersymSchur", o);
        r.parameters = {{"N", std::to_string(o.N)}, {"k", std::to_string(o.k)}, {"x", o.xs}, {"y", o.ys}};
        r.value = ratio_moment(o.N, o.k, X, Y);
        r.abs_error = 1e-12 * (1.0 + std::abs(r.value));
    } else if (functional == "autocorr") {
        std::vector<double> X = parse_points(o.xs), Y = parse_points(o.ys);
        std::vector<Cplx> px, py;
        for (double x : X) px.push_back(std::exp(Cplx(0.0, 2.0 * M_PI * x / static_cast<double>(o.N))));
        for (double y : Y) py.push_back(std::exp(Cplx(0.0, 2.0 * M_PI * y / static_cast<double>(o.N))));
        r = base_report("exact.autocorr", "Eq:AutocorrelationsAsAQuotientOfDets", o);
        r.parameters = {{"N", std::to_string(o.N)}, {"x", o.xs}, {"y", o.ys}};
        r.value = autocorr_det(o.N, px, py);
        r.abs_error = 1e-10 * (1.0 + std::abs(r.value));
    } else {
        throw CLI::ValidationError("exact: unknown functional '" + functional + "'");
    }
    r.method = "exact";
    finish(r, o, t0);
    return 0;
}

LimitKind kind_from_name(const std::string& s) {
    if (s == "ks") return LimitKind::KS;
    if (s == "sc") return LimitKind::SC;
    if (s == "zt") return LimitKind::ZT;
    if (s == "kr3g") return LimitKind::KR3G;
    if (s == "mom") return LimitKind::MOM;
    if (s == "vol_b") return LimitKind::VOL_B;
    if (s == "vol_s") return LimitKind::VOL_S;
    if (s == "autocorr") return LimitKind::AUTOCORR;
    if (s == "ratio") return LimitKind::RATIO;
    throw CLI::ValidationError("unknown functional '" + s + "'");
}

const char* limit_anchor(LimitKind k) {
    switch (k) {
        case LimitKind::KS: return "EqPhi:KS";
        case LimitKind::SC: return "EqPhi:MidCoeff";
        case LimitKind::ZT: return "EqPhi:TruncatedCharpolIn1";
        case LimitKind::KR3G: return "EqPhi:KR3G";
        case LimitKind::MOM: return "EqPhi:MoMo";
        case LimitKind::VOL_B: return "EqPhi:VolumeBirkoffPolytopeRMT";
        case LimitKind::VOL_S: return "EqPhi:VolumeSubBirkoffPolytopeRMT";
        case LimitKind::AUTOCORR: return "EqPhi:Autocorrels";
        case LimitKind::RATIO: return "EqPhi:Ratios";
    }
    return "?";
}

LimitFunctionalSpec spec_from_options(LimitKind kind, const Options& o) {
    LimitFunctionalSpec spec;
    spec.kind = kind;
    spec.k = o.k;
    spec.rho = parse_rat(o.rho);
    spec.c = parse_rat(o.c);
    spec.beta = o.beta;
    spec.X = parse_points(o.xs);
    spec.Y = parse_points(o.ys);
    return spec;
}

int run_limit(const std::string& functional, const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    LimitKind kind = kind_from_name(functional);
    LimitFunctionalSpec spec = spec_from_options(kind, o);
    Report r = base_report("limit." + functional, limit_anchor(kind), o);
    r.parameters = {{"k", std::to_string(o.k)}, {"rho", o.rho}, {"c", o.c}, {"beta", std::to_string(o.beta)}};
    if (!o.xs.empty()) r.parameters.push_back({"x", o.xs});
    if (!o.ys.empty()) r.parameters.push_back({"y", o.ys});
    if (kind == LimitKind::RATIO && (o.method == "mc" || o.method == "qmc")) {
        if (!spec.Y.empty()) throw std::runtime_error("sampling estimators cover the plain kernel only (no y points)");
        KernelSpec ks{to_double(spec.c), 1, spec.X};
        McEstimate e = o.method == "mc" ? kernel_mc(ks, o.samples, o.seed) : kernel_qmc(ks, o.samples, o.seed);
        r.value = e.value;
        r.abs_error = 3.0 * e.stderr_abs;
        r.has_stderr = true;
        r.stderr_abs = e.stderr_abs;
        r.method = o.method;
    } else {
        LimitBudget budget;
        budget.method = o.method;
        budget.tol = o.tol;
        budget.samples = o.samples;
        budget.seed = o.seed;
        budget.has_seed = o.seed_set;
        LimitEstimate e = evaluate_constant(spec, budget);
        r.value = e.value;
        r.abs_error = e.abs_error;
        r.method = e.method;
        if (e.exact) {
            // exact spline routes return a rational; recover it for the report
            if (kind == LimitKind::KS && spec.k >= 2) {
                r.exact = true;
                r.exact_value = hankel_ks(spec.k);
            } else if (kind == LimitKind::SC) {
                r.exact = true;
                r.exact_value = sc_constant_exact(spec.rho);
            } else if (kind == LimitKind::KR3G) {
                r.exact = true;
                r.exact_value = kr3g_constant_exact(spec.c);
            } else if (kind == LimitKind::MOM && spec.k == 2) {
                r.exact = true;
                r.exact_value = kr3g_constant_exact(Rat(1));
            } else if (kind == LimitKind::VOL_B) {
                r.exact = true;
                r.exact_value = spec.k == 1 ? Rat(1) : vol_birkhoff2_exact();
            } else if (kind == LimitKind::VOL_S && spec.k == 1) {
                r.exact = true;
                r.exact_value = vol_subbirkhoff1_exact();
            } else if (kind == LimitKind::ZT && spec.k == 1) {
                r.exact = true;
                r.exact_value = spec.rho;
            } else if (kind == LimitKind::KS && spec.k == 1) {
                r.exact = true;
                r.exact_value = Rat(1);
            } else if (kind == LimitKind::MOM && spec.k == 1 && spec.beta >= 2) {
                r.exact = true;
                r.exact_value = hankel_ks(spec.beta);
            } else if (kind == LimitKind::MOM && spec.k == 1 && spec.beta == 1) {
                r.exact = true;
                r.exact_value = Rat(1);
            }
        }
    }
    finish(r, o, t0);
    return 0;
}

int run_converge(const std::string& functional, const Options& o, std::vector<long> Ns) {
    auto t0 = std::chrono::steady_clock::now();
    LimitKind kind = kind_from_name(functional);
    LimitFunctionalSpec spec = spec_from_options(kind, o);
    if (Ns.empty()) Ns = {10, 20, 40};
    std::vector<ConvergenceRow> rows = convergence_table(spec, Ns);
    std::vector<std::pair<long, double>> pairs;
    for (const auto& row : rows) pairs.push_back({row.N, row.rescaled});
    RichardsonResult rich = richardson(pairs);
    Report r = base_report("converge." + functional, limit_anchor(kind), o);
    r.parameters = {{"k", std::to_string(o.k)}, {"rho", o.rho}, {"c", o.c}, {"beta", std::to_string(o.beta)}};
    {
        std::string ns;
        for (const auto& row : rows) ns += (ns.empty() ? "" : ";") + std::to_string(row.N) + ":" + selftest_detail::fmt(row.rescaled);
        r.parameters.push_back({"table", ns});
        r.parameters.push_back({"order", std::to_string(order_exponent(spec))});
    }
    r.value = Cplx(rich.value, 0.0);
    r.abs_error = rich.spread;
    r.method = "richardson";
    finish(r, o, t0);
    return 0;
}

int run_ehrhart(const std::string& polytope, const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    if (polytope == "birkhoff") {
        r = base_report("ehrhart.birkhoff", "Eq:BeckFormulaBirkhoff", o);
        r.exact_value = Rat(ehrhart_birkhoff(o.k, o.t));
    } else if (polytope == "subbirkhoff") {
        r = base_report("ehrhart.subbirkhoff", "Eq:BeckFormulaSubBirkhoff", o);
        r.exact_value = Rat(ehrhart_subbirkhoff(o.k, o.t));
    } else {
        throw CLI::ValidationError("ehrhart: unknown polytope '" + polytope + "'");
    }
    r.exact = true;
    r.parameters = {{"k", std::to_string(o.k)}, {"t", std::to_string(o.t)}};
    r.method = "coefficient-extraction";
    finish(r, o, t0);
    return 0;
}

int run_sample(const std::string& functional, const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    const long burnin = 2000;
    McStat s{};
    Report r;
    if (functional == "trace_sq") {
        r = base_report("sample.trace_sq", "Def:SecularCoeff", o);
        s = chain_estimate(o.N, o.samples, burnin, o.seed, [](const std::vector<double>& t) { return functional_trace_sq(t); });
    } else if (functional == "z1_pow") {
        r = base_report("sample.z1_pow", "Eq:KSmomentsCharpol", o);
        s = chain_estimate(o.N, o.samples, burnin, o.seed,
                           [&](const std::vector<double>& t) { return functional_z1_pow(t, o.k); });
    } else if (functional == "sc_pow") {
        r = base_report("sample.sc_pow", "FuncZ:MidSecularCoeff", o);
        s = chain_estimate(o.N, o.samples, burnin, o.seed,
                           [&](const std::vector<double>& t) { return functional_sc_pow(t, o.m, o.k); });
    } else {
        throw CLI::ValidationError("sample: unknown functional '" + functional + "'");
    }
    r.parameters = {{"N", std::to_string(o.N)}, {"k", std::to_string(o.k)}, {"m", std::to_string(o.m)},
                    {"samples", std::to_string(o.samples)}, {"acceptance", selftest_detail::fmt(s.acceptance)}};
    r.value = Cplx(s.mean, 0.0);
    r.abs_error = 3.0 * s.stderr_;
    r.has_stderr = true;
    r.stderr_abs = s.stderr_;
    r.method = "mcmc";
    finish(r, o, t0);
    return 0;
}

int run_selftest_cmd(const Options& o) {
    long workers = resolve_workers(o.workers);
    std::vector<CriterionResult> rs = run_selftest(workers);
    for (const auto& r : rs) {
        std::cout << (r.pass ? "PASS" : (r.assertive ? "FAIL" : "INFO")) << "  [" << r.id << "] " << r.name << "  ("
                  << selftest_detail::fmt(r.runtime_s) << " s)\n";
        if (!r.detail.empty()) std::cout << "      " << r.detail << "\n";
    }
    if (!o.out.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rs)
            j.push_back({{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"assertive", r.assertive},
                         {"detail", r.detail},
                         {"runtime_s", r.runtime_s}});
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("selftest: cannot open '" + o.out + "'");
        f << j.dump(2) << "\n";
    }
    return selftest_failed(rs) ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and limiting functionals of CUE characteristic polynomials"};
    app.require_subcommand(1);
    // config precedes the subcommand: cuelab --config run.toml exact ks
    // file keys live in a section named after the subcommand, e.g. [exact] N=4
    app.set_config("--config");

    Options o;
    std::string functional, polytope;
    std::vector<long> Ns;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", o.out);
        sub->add_option("--workers", o.workers);
    };

    CLI::App* exact = app.add_subcommand("exact", "exact finite-N functional");
    exact->add_option("functional", functional)->required();
    exact->add_option("--N", o.N);
    exact->add_option("--k", o.k);
    exact->add_option("--m", o.m);
    exact->add_option("--beta", o.beta);
    exact->add_option("--t", o.t);
    exact->add_option("--lambda", o.lambda);
    exact->add_option("--x", o.xs);
    exact->add_option("--y", o.ys);
    add_common(exact);

    CLI::App* limit = app.add_subcommand("limit", "limiting constant or kernel value");
    limit->add_option("functional", functional)->required();
    limit->add_option("--k", o.k);
    limit->add_option("--rho", o.rho);
    limit->add_option("--c", o.c);
    limit->add_option("--beta", o.beta);
    limit->add_option("--method", o.method)->check(CLI::IsMember({"auto", "spline", "quad", "qmc", "mc", "hankel"}));
    limit->add_option("--tol", o.tol);
    limit->add_option("--samples", o.samples);
    limit->add_option("--seed", o.seed);
    limit->add_option("--x", o.xs);
    limit->add_option("--y", o.ys);
    add_common(limit);

    CLI::App* converge = app.add_subcommand("converge", "finite-N table plus extrapolation");
    converge->add_option("functional", functional)->required();
    converge->add_option("--N", Ns);
    converge->add_option("--k", o.k);
    converge->add_option("--rho", o.rho);
    converge->add_option("--c", o.c);
    converge->add_option("--beta", o.beta);
    add_common(converge);

    CLI::App* ehrhart = app.add_subcommand("ehrhart", "lattice point count of a dilated polytope");
    ehrhart->add_option("polytope", polytope)->required();
    ehrhart->add_option("--k", o.k);
    ehrhart->add_option("--t", o.t);
    add_common(ehrhart);

    CLI::App* sample = app.add_subcommand("sample", "MCMC estimate over the eigenangle measure");
    sample->add_option("functional", functional)->required();
    sample->add_option("--N", o.N);
    sample->add_option("--k", o.k);
    sample->add_option("--m", o.m);
    sample->add_option("--samples", o.samples);
    sample->add_option("--seed", o.seed);
    add_common(sample);

    CLI::App* selftest = app.add_subcommand("selftest", "full acceptance suite");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    o.seed_set = (limit->count("--seed") > 0) || (sample->count("--seed") > 0);
    try {
        if (*sample && !o.seed_set) {
            std::cerr << "usage error: sample requires an explicit --seed (no wall-clock default)\n";
            return 1;
        }
        if (*limit && (o.method == "mc" || o.method == "qmc") && !o.seed_set) {
            std::cerr << "usage error: --method " << o.method << " requires an explicit --seed\n";
            return 1;
        }
        if (*exact) return run_exact(functional, o);
        if (*limit) return run_limit(functional, o);
        if (*converge) return run_converge(functional, o, Ns);
        if (*ehrhart) return run_ehrhart(polytope, o);
        if (*sample) return run_sample(functional, o);
        if (*selftest) return run_selftest_cmd(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

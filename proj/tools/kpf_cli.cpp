// kpf: exact Kostant partition function counts and certified entropy /
// capacity / Lidskii bounds for complete-DAG flow polytopes.
//
// Exit codes: 0 ok, 2 usage or input error, 3 resource limit, 4 no
// convergence. Diagnostics go to stderr; results are JSON on stdout by
// default, CSV when --out ends in .csv.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "kostant/closed_forms.hpp"
#include "kostant/entropy.hpp"
#include "kostant/exact_count.hpp"
#include "kostant/lidskii.hpp"
#include "kostant/netflow.hpp"
#include "kostant/scaling.hpp"
#include "kostant/vertex_average.hpp"

using namespace kostant;

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct JsonObject {
    std::string body;
    void raw(const std::string& key, const std::string& value) {
        if (!body.empty()) body += ", ";
        body += "\"" + key + "\": " + value;
    }
    void str(const std::string& key, const std::string& value) { raw(key, "\"" + value + "\""); }
    void num(const std::string& key, double value) { raw(key, fmt12(value)); }
    void boolean(const std::string& key, bool value) { raw(key, value ? "true" : "false"); }
    std::string dump() const { return "{" + body + "}"; }
};

struct FamilyArgs {
    std::string netflow;
    std::string family;
    int n = 0;
    long long t = 1;
    double a = 1.0;
    double p = 0.0;

    bool has_family() const { return !family.empty(); }

    NamedFamily named() const {
        NamedFamily f;
        f.tag = parse_family_tag(family);
        f.t = t;
        f.a = a;
        f.p = p;
        return f;
    }

    NetflowVector resolve() const {
        if (!netflow.empty() && has_family())
            throw Error(ErrorKind::BadParams, "give either --netflow or --family, not both");
        if (!netflow.empty()) return NetflowVector::parse(netflow);
        if (!has_family()) throw Error(ErrorKind::BadParams, "need --netflow or --family");
        if (n < 2) throw Error(ErrorKind::BadParams, "--n is required with --family");
        return kostant::family(named(), n);
    }
};

void add_family_options(CLI::App* cmd, FamilyArgs& args, bool with_netflow = true,
                        bool with_n = true) {
    if (with_netflow)
        cmd->add_option("--netflow", args.netflow, "comma-separated netflow entries");
    cmd->add_option("--family", args.family,
                    "cry|tesler|dilated_tesler|staircase|two_rho|linear|constant_an|power");
    if (with_n) cmd->add_option("--n", args.n, "number of non-sink vertices");
    cmd->add_option("--t", args.t, "dilation parameter");
    cmd->add_option("--a", args.a, "growth coefficient");
    cmd->add_option("--p", args.p, "growth exponent");
}

struct Output {
    std::string path;  // empty = stdout
    bool csv() const { return path.size() > 4 && path.substr(path.size() - 4) == ".csv"; }

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(path);
        if (!file) throw Error(ErrorKind::BadParams, "cannot open output file " + path);
        file << text;
    }
};

// The lower-bound flow for `bound`: closed-form averages where they exist,
// the 2rho midpoint, or the optimizer's repaired flow.
FlowMatrix pick_flow(const std::string& which, const NetflowVector& v,
                     std::optional<ScalingResult>& opt, double tol) {
    if (which == "average") {
        if (v.all_interior_positive()) return average_positive(v);
        if (v.is_cry()) return average_cry(v.n(), v.entry(0));
        throw Error(ErrorKind::Unsupported,
                    "no closed-form average for this netflow; use --flow optimizer");
    }
    if (which == "midpoint") {
        if (v.n() < 2 || v.entry(0) % v.n() != 0)
            throw Error(ErrorKind::BadParams, "midpoint flow applies to the two_rho family");
        return midpoint_2rho(v.n(), v.entry(0) / v.n());
    }
    if (which == "optimizer") {
        if (!opt) {
            ScalingOptions o;
            o.tol = tol;
            opt = maximize_entropy(v, o);
        }
        return opt->flow;
    }
    throw Error(ErrorKind::BadParams, "--flow must be average, optimizer, or midpoint");
}

int run_count(const FamilyArgs& args, const std::string& method, const std::string& terms_path,
              const Output& out) {
    const NetflowVector v = args.resolve();
    BigInt k;
    if (method == "exact")
        k = count_exact(v);
    else if (method == "brute")
        k = count_brute(v);
    else if (method == "lidskii")
        k = lidskii_count(v);
    else
        throw Error(ErrorKind::BadParams, "--method must be exact, brute, or lidskii");
    if (!terms_path.empty()) {
        if (method != "lidskii")
            throw Error(ErrorKind::BadParams, "--terms requires --method lidskii");
        std::ofstream terms(terms_path);
        if (!terms) throw Error(ErrorKind::BadParams, "cannot open terms file " + terms_path);
        lidskii_term_csv(v, terms);
    }
    if (out.csv()) {
        out.write("netflow,method,K\n\"" + v.to_string() + "\"," + method + "," + to_string(k) +
                  "\n");
    } else {
        JsonObject j;
        j.str("K", to_string(k));
        out.write(j.dump() + "\n");
    }
    return 0;
}

int run_bound(const FamilyArgs& args, const std::string& flow_kind, double tol,
              const std::string& trace_path, const Output& out) {
    const NetflowVector v = args.resolve();
    std::ofstream trace;
    ScalingOptions opts;
    opts.tol = tol;
    if (!trace_path.empty()) {
        trace.open(trace_path);
        if (!trace) throw Error(ErrorKind::BadParams, "cannot open trace file " + trace_path);
        opts.trace = &trace;
    }
    std::optional<ScalingResult> opt;
    if (flow_kind == "optimizer") opt = maximize_entropy(v, opts);
    const FlowMatrix flow = pick_flow(flow_kind, v, opt, tol);

    const BoundReport report =
        opt ? upper_bound_at(opt->flow, v, opt->gap) : lower_bound_at(flow, v);

    JsonObject j;
    j.str("netflow", v.to_string());
    j.str("flow", flow_kind);
    j.num("log_lower", report.log_lower);
    if (report.log_upper)
        j.num("log_upper", *report.log_upper);
    else
        j.raw("log_upper", "null");
    j.str("method", bound_method_name(report.method));
    j.boolean("certified", report.certified);
    out.write(j.dump() + "\n");
    return 0;
}

int run_capacity(const FamilyArgs& args, double tol, const std::string& trace_path,
                 const Output& out) {
    const NetflowVector v = args.resolve();
    std::ofstream trace;
    ScalingOptions opts;
    opts.tol = tol;
    if (!trace_path.empty()) {
        trace.open(trace_path);
        if (!trace) throw Error(ErrorKind::BadParams, "cannot open trace file " + trace_path);
        opts.trace = &trace;
    }
    const ScalingResult res = maximize_entropy(v, opts);
    JsonObject j;
    j.str("netflow", v.to_string());
    j.num("capacity_log", res.dual_value);
    j.num("h_star", res.h_star);
    j.num("gap", res.gap);
    j.raw("sweeps", std::to_string(res.sweeps));
    out.write(j.dump() + "\n");
    return 0;
}

int run_vertices(const FamilyArgs& args, const Output& out) {
    const NetflowVector v = args.resolve();
    std::string text;
    for (const FlowMatrix& vert : enumerate_vertices(v)) text += vert.to_json() + "\n";
    out.write(text);
    return 0;
}

int run_asymptotic(const FamilyArgs& args, const Output& out) {
    if (!args.has_family()) throw Error(ErrorKind::BadParams, "asymptotic needs --family");
    const NamedFamily fam = args.named();
    const BoundReport report = asymptotic_bound(fam, static_cast<double>(args.n));
    JsonObject j;
    j.str("family", args.family);
    j.raw("n", std::to_string(args.n));
    j.num("log_lower", report.log_lower);
    j.boolean("certified", report.certified);
    // Prior bounds, where stated, for side-by-side comparison.
    if (fam.tag == FamilyTag::tesler && args.n >= 3) {
        const auto [lo, hi] = oneill_tesler_log_bounds(args.n);
        j.num("oneill_log_lower", lo);
        j.num("oneill_log_upper", hi);
    } else if (fam.tag == FamilyTag::two_rho && args.n % 2 == 1 && args.n >= 3) {
        j.num("oneill_log_lower", oneill_two_rho_log_lower(args.n, fam.t));
    }
    out.write(j.dump() + "\n");
    return 0;
}

struct SweepRow {
    int n = 0;
    std::string k, lower_avg, lower_lidskii, upper, gap;
    bool resource_limited = false;
};

SweepRow sweep_point(const NamedFamily& fam, int n, double tol) {
    SweepRow row;
    row.n = n;
    const NetflowVector v = family(fam, n);
    try {
        row.k = to_string(count_exact(v));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ResourceLimit) throw;
        row.resource_limited = true;
    }
    std::optional<ScalingResult> opt;
    try {
        ScalingOptions opts;
        opts.tol = tol;
        opt = maximize_entropy(v, opts);
        row.upper = fmt12(opt->h_star + opt->gap);
        row.gap = fmt12(opt->gap);
    } catch (const Error&) {
        // leave the optimizer columns empty
    }
    try {
        if (v.all_interior_positive())
            row.lower_avg = fmt12(lower_bound_at(average_positive(v), v).log_lower);
        else if (v.is_cry())
            row.lower_avg = fmt12(lower_bound_at(average_cry(n, v.entry(0)), v).log_lower);
        else if (fam.tag == FamilyTag::two_rho)
            row.lower_avg = fmt12(lower_bound_at(midpoint_2rho(n, fam.t), v).log_lower);
        else if (opt)
            row.lower_avg = fmt12(lower_bound_at(opt->flow, v).log_lower);
    } catch (const Error&) {
    }
    if (v.all_interior_nonnegative()) {
        try {
            row.lower_lidskii = fmt12(lidskii_bounds(v).log_lower);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ResourceLimit)
                row.resource_limited = true;
            else
                throw;
        }
    }
    return row;
}

int run_sweep(const FamilyArgs& args, const std::string& range, double tol, const Output& out) {
    if (!args.has_family()) throw Error(ErrorKind::BadParams, "sweep needs --family");
    const auto dots = range.find("..");
    if (dots == std::string::npos)
        throw Error(ErrorKind::BadParams, "--n range must look like 3..9");
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(range.substr(0, dots));
        hi = std::stoi(range.substr(dots + 2));
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadParams, "bad sweep range '" + range + "'");
    }
    if (lo < 2 || hi < lo) throw Error(ErrorKind::BadParams, "bad sweep range");
    const NamedFamily fam = args.named();

    // Points run in parallel; rows are emitted in n-order so partial output
    // stays usable if a method hits its resource cap.
    const int count = hi - lo + 1;
    std::vector<SweepRow> rows(static_cast<size_t>(count));
    std::vector<std::string> errors(static_cast<size_t>(count));
    std::atomic<bool> usage_error{false};
    unsigned threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("KPF_THREADS"))
        threads = static_cast<unsigned>(std::max(1, std::atoi(env)));
    threads = std::min<unsigned>(threads ? threads : 1, static_cast<unsigned>(count));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= count) return;
            try {
                rows[static_cast<size_t>(idx)] = sweep_point(fam, lo + idx, tol);
            } catch (const Error& e) {
                errors[static_cast<size_t>(idx)] = e.what();
                if (e.kind() != ErrorKind::ResourceLimit && e.kind() != ErrorKind::NoConvergence)
                    usage_error = true;
            } catch (const std::exception& e) {
                errors[static_cast<size_t>(idx)] = e.what();
                usage_error = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::string params = "t=" + std::to_string(fam.t);
    if (fam.tag == FamilyTag::linear || fam.tag == FamilyTag::constant_an ||
        fam.tag == FamilyTag::power)
        params = "a=" + fmt12(fam.a) + ";p=" + fmt12(fam.p);

    bool limited = false;
    std::string text;
    if (out.csv()) text = "n,family,params,K,log_lower_avg,log_lower_lidskii,log_upper,gap\n";
    for (int idx = 0; idx < count; ++idx) {
        const SweepRow& row = rows[static_cast<size_t>(idx)];
        if (!errors[static_cast<size_t>(idx)].empty()) {
            std::cerr << "n=" << lo + idx << ": " << errors[static_cast<size_t>(idx)] << "\n";
            limited = true;
            continue;
        }
        limited = limited || row.resource_limited;
        if (out.csv()) {
            text += std::to_string(row.n) + "," + args.family + "," + params + "," + row.k + "," +
                    row.lower_avg + "," + row.lower_lidskii + "," + row.upper + "," + row.gap +
                    "\n";
        } else {
            JsonObject j;
            j.raw("n", std::to_string(row.n));
            j.str("family", args.family);
            j.str("params", params);
            if (!row.k.empty()) j.str("K", row.k);
            if (!row.lower_avg.empty()) j.raw("log_lower_avg", row.lower_avg);
            if (!row.lower_lidskii.empty()) j.raw("log_lower_lidskii", row.lower_lidskii);
            if (!row.upper.empty()) j.raw("log_upper", row.upper);
            if (!row.gap.empty()) j.raw("gap", row.gap);
            text += j.dump() + "\n";
        }
    }
    out.write(text);
    if (usage_error) return 2;
    return limited ? 3 : 0;
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<CheckResult> check_appendix() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(515151);
    {
        std::uniform_real_distribution<double> tdist(1e-9, 1e6);
        bool ok = true;
        for (int i = 0; i < 10000 && ok; ++i) ok = entropy_ineq_check(tdist(rng));
        out.push_back({"basic_entropy_bound", ok, "10^4 random t in (0,1e6)"});
    }
    {
        std::uniform_real_distribution<double> cdist(0.25, 4.0), ddist(0.25, 8.0);
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            const double c = cdist(rng), d = ddist(rng);
            const long long a = 1 + static_cast<long long>(rng() % 10);
            const long long b = a + 5 + static_cast<long long>(rng() % 500);
            const SmoothFunction f = t_log_linear_handle(c, d);
            const EulerMaclaurin em = euler_maclaurin(f, a, b, (rng() % 2) ? 3 : 5);
            KahanSum direct;
            for (long long k = a; k <= b; ++k) direct.add(f.value(static_cast<double>(k)));
            ok = std::abs(direct.value() - em.approx) <= em.remainder_bound;
        }
        out.push_back({"euler_maclaurin_remainder", ok, "10^3 randomized handles"});
    }
    {
        bool ok = true;
        for (long long t = 1; t <= 50 && ok; ++t)
            for (int n = 1; n <= 50 && ok; ++n) ok = f_bound_check(t, n).ok;
        out.push_back({"f_bound", ok, "1 <= t,n <= 50"});
    }
    {
        bool ok = true;
        for (int n = 1; n <= 7 && ok; ++n) {
            const BigInt f = factorial(n);
            ok = spanning_trees_staircase(n) == f * f;
        }
        out.push_back({"spanning_trees", ok, "matrix-tree vs (n!)^2, n <= 7"});
    }
    return out;
}

std::vector<CheckResult> check_duality() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(626262);
    std::uniform_int_distribution<long long> dist(-3, 3);
    auto random_unit_cut = [&](int n) {
        for (;;) {
            std::vector<long long> e;
            long long sum = 0, prefix = 0;
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                const long long v = dist(rng);
                prefix += v;
                if (prefix < 1) {
                    ok = false;
                    break;
                }
                e.push_back(v);
                sum += v;
            }
            if (!ok) continue;
            e.push_back(-sum);
            return NetflowVector::make(std::move(e));
        }
    };
    bool cap_ok = true, vol_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        const NetflowVector v = random_unit_cut(2 + static_cast<int>(rng() % 7));
        cap_ok = cap_ok && duality_gap(v) <= 1e-6;
        if (v.n() <= 5) vol_ok = vol_ok && volume_duality_check(v) <= 1e-5;
    }
    out.push_back({"capacity_duality", cap_ok, "gap <= 1e-6, n <= 8"});
    out.push_back({"volume_duality", vol_ok, "gap <= 1e-5, n <= 5"});
    return out;
}

std::vector<CheckResult> check_lidskii() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(737373);
    std::uniform_int_distribution<long long> dist(0, 3);
    bool identity_ok = true, bracket_ok = true;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<long long> e;
        long long sum = 0;
        for (int i = 0; i < n; ++i) {
            e.push_back(dist(rng));
            sum += e.back();
        }
        e.push_back(-sum);
        const NetflowVector v = NetflowVector::make(std::move(e));
        const BigInt k = count_exact(v);
        identity_ok = identity_ok && lidskii_count(v) == k;
        bracket_ok = bracket_ok && m_n(v) <= k && k <= s_plus(v) * m_n(v);
    }
    out.push_back({"lidskii_identity", identity_ok, "30 random nonnegative vectors"});
    out.push_back({"lidskii_bracket", bracket_ok, "M_n <= K <= S+ * M_n"});
    bool splus_ok = true;
    for (int n = 2; n <= 6 && splus_ok; ++n)
        for (long long t = 1; t <= static_cast<long long>(n - 1) * (n - 2) / 2 + 2; ++t)
            splus_ok = s_plus(family({FamilyTag::cry, t}, n)) == inversions_at_most(n - 1, t);
    out.push_back({"s_plus_closed_form", splus_ok, "S+ = J_{n-1,t} for CRY"});
    return out;
}

int run_check(const std::string& suite, const Output& out) {
    std::vector<CheckResult> results;
    if (suite == "appendix")
        results = check_appendix();
    else if (suite == "duality")
        results = check_duality();
    else if (suite == "lidskii")
        results = check_lidskii();
    else
        throw Error(ErrorKind::BadParams, "--suite must be appendix, duality, or lidskii");
    std::string text;
    bool all_pass = true;
    for (const CheckResult& r : results) {
        JsonObject j;
        j.str("check", r.name);
        j.boolean("pass", r.pass);
        j.str("detail", r.detail);
        text += j.dump() + "\n";
        all_pass = all_pass && r.pass;
    }
    out.write(text);
    return all_pass ? 0 : 1;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::ResourceLimit: return 3;
        case ErrorKind::NoConvergence: return 4;
        default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kostant partition function counts and bounds"};
    app.require_subcommand(1);

    FamilyArgs args;
    std::string method = "exact";
    std::string flow_kind = "average";
    std::string range;
    std::string suite;
    std::string trace_path;
    double tol = 1e-9;
    Output out;

    std::string terms_path;
    CLI::App* count = app.add_subcommand("count", "exact lattice point count");
    add_family_options(count, args);
    count->add_option("--method", method, "exact|brute|lidskii");
    count->add_option("--terms", terms_path, "per-term CSV dump (lidskii method)");
    count->add_option("--out", out.path, "output file (.csv for CSV)");

    CLI::App* bound = app.add_subcommand("bound", "certified entropy bound at a flow");
    add_family_options(bound, args);
    bound->add_option("--flow", flow_kind, "average|optimizer|midpoint");
    bound->add_option("--tol", tol, "optimizer tolerance");
    bound->add_option("--trace", trace_path, "optimizer trace CSV");
    bound->add_option("--out", out.path, "output file");

    CLI::App* capacity = app.add_subcommand("capacity", "capacity / entropy dual pair");
    add_family_options(capacity, args);
    capacity->add_option("--tol", tol, "marginal residual tolerance");
    capacity->add_option("--trace", trace_path, "optimizer trace CSV");
    capacity->add_option("--out", out.path, "output file");

    CLI::App* vertices = app.add_subcommand("vertices", "stream polytope vertices as JSON lines");
    add_family_options(vertices, args);
    vertices->add_option("--out", out.path, "output file");

    CLI::App* asymptotic = app.add_subcommand("asymptotic", "leading-term lower bounds");
    add_family_options(asymptotic, args, /*with_netflow=*/false);
    asymptotic->add_option("--out", out.path, "output file");

    CLI::App* sweep = app.add_subcommand("sweep", "exact count vs all bounds over a range of n");
    add_family_options(sweep, args, /*with_netflow=*/false, /*with_n=*/false);
    sweep->add_option("--n", range, "range like 3..9")->required();
    sweep->add_option("--tol", tol, "optimizer tolerance");
    sweep->add_option("--out", out.path, "output file (.csv for CSV)");

    CLI::App* check = app.add_subcommand("check", "run a property suite");
    check->add_option("--suite", suite, "appendix|duality|lidskii")->required();
    check->add_option("--out", out.path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return run_count(args, method, terms_path, out);
        if (bound->parsed()) return run_bound(args, flow_kind, tol, trace_path, out);
        if (capacity->parsed()) return run_capacity(args, tol, trace_path, out);
        if (vertices->parsed()) return run_vertices(args, out);
        if (asymptotic->parsed()) return run_asymptotic(args, out);
        if (sweep->parsed()) return run_sweep(args, range, tol, out);
        if (check->parsed()) return run_check(suite, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

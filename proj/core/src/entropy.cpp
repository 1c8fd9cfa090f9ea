#include "kostant/entropy.hpp"

#include <json.hpp>

#include <cmath>

namespace kostant {

double h(double t) {
    if (t < 0.0) throw Error(ErrorKind::NegativeArg, "h requires t >= 0");
    return xlogx(t + 1.0) - xlogx(t);
}

double flow_entropy(const FlowMatrix& flow, const NetflowVector& netflow) {
    const int n = flow.n();
    if (n != netflow.n()) throw Error(ErrorKind::LengthMismatch, "flow/netflow size mismatch");
    KahanSum sum;
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < n - i; ++c) sum.add(h(to_double(flow.f(i, n - c))));
        if (i >= 1) {
            const double gi = to_double(flow.g(i));
            if (gi < 0) throw Error(ErrorKind::InfeasibleFlow, "negative subdiagonal slack");
            sum.add(h(gi));
        }
    }
    return sum.value();
}

double correction_log(const NetflowVector& netflow) {
    KahanSum sum;
    double best = 0.0;
    for (int k = 0; k < netflow.n(); ++k) {
        const double hk = h(static_cast<double>(netflow.s(k)));
        best = std::max(best, hk);
        sum.add(hk);
    }
    return best - 2.0 * sum.value();
}

const char* bound_method_name(BoundMethod method) {
    switch (method) {
        case BoundMethod::entropy_at_flow: return "entropy_at_flow";
        case BoundMethod::entropy_opt: return "entropy_opt";
        case BoundMethod::lidskii: return "lidskii";
        case BoundMethod::closed_form: return "closed_form";
        case BoundMethod::asymptotic: return "asymptotic";
    }
    return "unknown";
}

std::string BoundReport::to_json() const {
    nlohmann::ordered_json j;
    j["log_lower"] = log_lower;
    if (log_upper)
        j["log_upper"] = *log_upper;
    else
        j["log_upper"] = nullptr;
    j["method"] = bound_method_name(method);
    j["certified"] = certified;
    return j.dump();
}

BoundReport lower_bound_at(const FlowMatrix& flow, const NetflowVector& netflow) {
    BoundReport report;
    report.log_lower = correction_log(netflow) + flow_entropy(flow, netflow);
    report.method = BoundMethod::entropy_at_flow;
    report.certified = true;
    return report;
}

BoundReport upper_bound_at(const FlowMatrix& f_star, const NetflowVector& netflow,
                           double opt_gap) {
    if (opt_gap < 0)
        throw Error(ErrorKind::BadParams, "optimality gap must be nonnegative");
    const double entropy = flow_entropy(f_star, netflow);
    BoundReport report;
    report.log_lower = correction_log(netflow) + entropy;
    report.log_upper = entropy + opt_gap;
    report.method = BoundMethod::entropy_opt;
    report.certified = true;
    internal_check(report.log_lower <= *report.log_upper, "bound pair out of order");
    return report;
}

double volume_lower_bound(const FlowMatrix& flow, const NetflowVector& netflow) {
    const int n = netflow.n();
    for (int k = 0; k < n; ++k)
        if (netflow.s(k) == 0)
            throw Error(ErrorKind::ZeroMarginal, "volume bound needs s_k > 0");

    const DenseMatrix a = embed(flow, netflow);
    KahanSum sum;
    // e^{C(n,2)} contributes C(n,2) in natural log.
    sum.add(static_cast<double>(n) * (n - 1) / 2.0);
    for (int k = 2; k <= n; ++k) sum.add(std::log(static_cast<double>(k)));  // log n!
    long long max_s = 0;
    for (int k = 0; k < n; ++k) max_s = std::max(max_s, netflow.s(k));
    sum.add(std::log(static_cast<double>(max_s)));
    for (int k = 0; k < n; ++k) sum.add(-2.0 * std::log(static_cast<double>(netflow.s(k))));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!on_support(n, i, j)) continue;
            const double v = to_double(a.at(i, j));
            if (v <= 0.0)
                throw Error(ErrorKind::ZeroMarginal, "volume bound needs positive support entries");
            sum.add(std::log(v));
        }
    }
    return sum.value();
}

}  // namespace kostant

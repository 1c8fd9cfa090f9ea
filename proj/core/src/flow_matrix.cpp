#include "kostant/flow_matrix.hpp"

#include <json.hpp>

#include <sstream>

namespace kostant {

size_t FlowMatrix::upper_index(int n, int i, int j) {
    // Row i holds f_{i,i+1} .. f_{i,n}; rows are packed in order.
    const size_t row_start = static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i - 1) / 2;
    return row_start + static_cast<size_t>(j - i - 1);
}

const BigRat& FlowMatrix::f(int i, int j) const {
    return upper_[upper_index(n_, i, j)];
}

FlowMatrix FlowMatrix::from_upper(const NetflowVector& netflow, std::vector<BigRat> upper) {
    const int n = netflow.n();
    if (upper.size() != upper_size(n))
        throw Error(ErrorKind::InfeasibleFlow, "wrong number of edge flows");

    FlowMatrix fm;
    fm.n_ = n;
    fm.upper_ = std::move(upper);

    for (const BigRat& v : fm.upper_)
        if (v < 0) throw Error(ErrorKind::InfeasibleFlow, "negative edge flow");

    // Netflow equalities, checked exactly. The n-th (sink) equality is
    // implied by the others.
    for (int i = 0; i < n; ++i) {
        BigRat net = 0;
        for (int j = i + 1; j <= n; ++j) net += fm.f(i, j);
        for (int k = 0; k < i; ++k) net -= fm.f(k, i);
        if (net != BigRat(netflow.entry(i)))
            throw Error(ErrorKind::InfeasibleFlow,
                        "netflow violated at vertex " + std::to_string(i));
    }

    // g_j >= 0 is implied by feasibility (cut argument), so a violation here
    // is a bug, not bad input.
    fm.subdiag_.reserve(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (int j = 1; j < n; ++j) {
        BigRat gj = 0;
        for (int i = 0; i < j; ++i) gj += BigRat(netflow.entry(i)) - fm.f(i, j);
        internal_check(gj >= 0, "derived subdiagonal slack is negative");
        fm.subdiag_.push_back(std::move(gj));
    }

    fm.integral_ = true;
    for (const BigRat& v : fm.upper_)
        if (!is_integer(v)) {
            fm.integral_ = false;
            break;
        }
    return fm;
}

FlowMatrix FlowMatrix::blend(const NetflowVector& netflow, const FlowMatrix& a,
                             const FlowMatrix& b, const BigRat& lambda) {
    if (a.n_ != b.n_) throw Error(ErrorKind::LengthMismatch, "blend needs matching sizes");
    std::vector<BigRat> upper(a.upper_.size());
    const BigRat mu = BigRat(1) - lambda;
    for (size_t k = 0; k < upper.size(); ++k)
        upper[k] = lambda * a.upper_[k] + mu * b.upper_[k];
    return from_upper(netflow, std::move(upper));
}

DenseMatrix embed(const FlowMatrix& flow, const NetflowVector& netflow) {
    const int n = flow.n();
    if (n != netflow.n()) throw Error(ErrorKind::LengthMismatch, "flow/netflow size mismatch");
    DenseMatrix m;
    m.rows = n;
    m.cols = n;
    m.data.assign(static_cast<size_t>(n) * n, BigRat(0));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n - i; ++c) m.at(i, c) = flow.f(i, n - c);
    for (int j = 1; j < n; ++j) {
        const BigRat& gj = flow.g(j);
        if (gj < 0) throw Error(ErrorKind::InfeasibleFlow, "negative subdiagonal entry");
        m.at(j, n - j) = gj;
    }
    return m;
}

std::vector<BigRat> project_ps(const FlowMatrix& flow, const NetflowVector& netflow) {
    const int n = flow.n();
    std::vector<BigRat> out;
    out.reserve(static_cast<size_t>(n - 1));
    BigRat prefix = 0;
    long long prefix_bound = 0;
    for (int i = 0; i <= n - 2; ++i) {
        out.push_back(flow.f(i, n));
        prefix += out.back();
        prefix_bound += netflow.entry(i);
        internal_check(prefix <= BigRat(prefix_bound), "PS projection left its polytope");
    }
    return out;
}

std::vector<BigRat> project_box(const FlowMatrix& flow, const NetflowVector& netflow) {
    const int n = flow.n();
    std::vector<BigRat> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        BigRat xi = 0;
        for (int j = i + 1; j <= n; ++j) xi += flow.f(i, j);
        internal_check(xi >= BigRat(netflow.entry(i)), "box projection below N_i");
        internal_check(xi <= BigRat(netflow.s(i)), "box projection above s_i");
        out.push_back(std::move(xi));
    }
    return out;
}

std::string FlowMatrix::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    std::vector<std::string> upper;
    upper.reserve(upper_.size());
    for (const BigRat& v : upper_) upper.push_back(kostant::to_string(v));
    j["upper"] = upper;
    std::vector<std::string> sub;
    sub.reserve(subdiag_.size());
    for (const BigRat& v : subdiag_) sub.push_back(kostant::to_string(v));
    j["subdiag"] = sub;
    return j.dump();
}

namespace {

BigRat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(text));
        return BigRat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadParams, "bad rational '" + text + "'");
    }
}

}  // namespace

FlowMatrix FlowMatrix::from_json(const NetflowVector& netflow, const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::BadParams, std::string("bad FlowMatrix JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("upper"))
        throw Error(ErrorKind::BadParams, "FlowMatrix JSON needs fields n, upper");
    if (j["n"].get<int>() != netflow.n())
        throw Error(ErrorKind::LengthMismatch, "FlowMatrix n does not match netflow");
    std::vector<BigRat> upper;
    for (const auto& item : j["upper"]) upper.push_back(parse_rat(item.get<std::string>()));
    return from_upper(netflow, std::move(upper));
}

}  // namespace kostant

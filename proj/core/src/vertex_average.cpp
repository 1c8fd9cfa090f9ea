#include "kostant/vertex_average.hpp"

#include <numeric>

namespace kostant {

FlowMatrix average_positive(const NetflowVector& netflow) {
    const int n = netflow.n();
    if (!netflow.all_interior_positive())
        throw Error(ErrorKind::NonPositiveEntry, "average_positive needs N_i > 0");

    std::vector<BigRat> upper(FlowMatrix::upper_size(n));
    for (int i = 0; i < n; ++i) {
        const long long k = n - i;
        // c_k = N_{n-k}/(k+1) + s_{n-k}/(k(k+1))
        const BigRat ck =
            big_rat(netflow.entry(i), k + 1) + big_rat(netflow.s(i), k * (k + 1));
        for (int j = i + 1; j <= n; ++j) upper[FlowMatrix::upper_index(n, i, j)] = ck;
    }
    return FlowMatrix::from_upper(netflow, std::move(upper));
}

FlowMatrix average_cry(int n, long long t) {
    if (n < 2 || t < 1) throw Error(ErrorKind::BadParams, "average_cry needs n >= 2, t >= 1");
    const NetflowVector netflow = family({FamilyTag::cry, t}, n);

    // Powers-of-two cell values of the embedded average; f_{ij} sits at
    // matrix cell (i, n-j).
    auto half_power = [](int e) { return BigRat(1, pow_int(BigInt(2), static_cast<unsigned long>(e))); };
    auto cell = [&](int i, int c) -> BigRat {
        BigRat v;
        if (i == 0 && c == 0)
            v = half_power(n - 1);
        else if (i == 0 || c == 0)
            v = half_power(n - i - c);
        else if (i < n - c)
            v = half_power(n - i - c + 1);
        else
            throw Error(ErrorKind::Internal, "cell off the strict upper region");
        return BigRat(t) * v;
    };

    std::vector<BigRat> upper(FlowMatrix::upper_size(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            upper[FlowMatrix::upper_index(n, i, j)] = cell(i, n - j);
    return FlowMatrix::from_upper(netflow, std::move(upper));
}

FlowMatrix midpoint_2rho(int n, long long t) {
    if (n < 2 || t < 1) throw Error(ErrorKind::BadParams, "midpoint_2rho needs n >= 2, t >= 1");
    const NetflowVector netflow = family({FamilyTag::two_rho, t}, n);
    std::vector<BigRat> upper(FlowMatrix::upper_size(n), BigRat(t));
    // from_upper recomputes the subdiagonal; it comes out t*k(n-k), matching
    // the marginals s_k = t(k+1)(n-k).
    return FlowMatrix::from_upper(netflow, std::move(upper));
}

namespace {

std::vector<FlowMatrix> vertices_positive(const NetflowVector& netflow) {
    const int n = netflow.n();
    if (n > 8) throw Error(ErrorKind::ResourceLimit, "positive vertex enumeration capped at n=8");

    std::vector<FlowMatrix> out;
    std::vector<int> target(static_cast<size_t>(n), 0);  // row i sends everything to target[i]

    // Lexicographic over (target[0], ..., target[n-1]).
    std::vector<long long> supply(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            std::vector<BigRat> upper(FlowMatrix::upper_size(n), BigRat(0));
            for (int r = 0; r < n; ++r)
                upper[FlowMatrix::upper_index(n, r, target[static_cast<size_t>(r)])] =
                    BigRat(supply[static_cast<size_t>(r)]);
            out.push_back(FlowMatrix::from_upper(netflow, std::move(upper)));
            return;
        }
        long long inflow = 0;
        for (int r = 0; r < i; ++r)
            if (target[static_cast<size_t>(r)] == i) inflow += supply[static_cast<size_t>(r)];
        supply[static_cast<size_t>(i)] = netflow.entry(i) + inflow;
        for (int j = i + 1; j <= n; ++j) {
            target[static_cast<size_t>(i)] = j;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<FlowMatrix> vertices_cry(const NetflowVector& netflow) {
    const int n = netflow.n();
    if (n > 8) throw Error(ErrorKind::ResourceLimit, "CRY vertex enumeration capped at n=8");
    const long long t = netflow.entry(0);

    std::vector<FlowMatrix> out;
    out.reserve(1ULL << (n - 1));
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        // bits[j] = g_j for 1 <= j <= n-1, with g_0 = g_n = 0.
        std::vector<int> g(static_cast<size_t>(n + 1), 0);
        for (int j = 1; j < n; ++j) g[static_cast<size_t>(j)] = (mask >> (j - 1)) & 1UL;

        std::vector<BigRat> upper(FlowMatrix::upper_size(n), BigRat(0));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const int c = n - j;  // matrix column of f_{ij}
                // Strict upper region has i < n-c; the value is the 0/1
                // product (1-g_i)(1-g_{n-c}) prod_{k=i+1}^{n-c-1} g_k.
                int value = (1 - g[static_cast<size_t>(i)]) * (1 - g[static_cast<size_t>(n - c)]);
                for (int k = i + 1; k <= n - c - 1 && value; ++k)
                    value *= g[static_cast<size_t>(k)];
                if (value) upper[FlowMatrix::upper_index(n, i, j)] = BigRat(t);
            }
        }
        out.push_back(FlowMatrix::from_upper(netflow, std::move(upper)));
    }
    return out;
}

// A feasible point is a vertex of the flow polytope iff its support is a
// forest in the undirected sense (the incidence columns of a cycle are
// dependent; of a forest, independent).
bool support_is_forest(const FlowMatrix& flow) {
    const int n = flow.n();
    std::vector<int> parent(static_cast<size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (flow.f(i, j) == 0) continue;
            const int a = find(i), b = find(j);
            if (a == b) return false;
            parent[static_cast<size_t>(a)] = b;
        }
    }
    return true;
}

std::vector<FlowMatrix> vertices_generic(const NetflowVector& netflow,
                                         const ResourceLimits& limits) {
    // Netflow incidence matrices are totally unimodular, so all vertices are
    // lattice points; filter the integral points by the forest condition.
    std::vector<FlowMatrix> out;
    for_each_integral_flow(
        netflow,
        [&](const FlowMatrix& f) {
            if (support_is_forest(f)) out.push_back(f);
        },
        limits);
    return out;
}

}  // namespace

std::vector<FlowMatrix> enumerate_vertices(const NetflowVector& netflow,
                                           const ResourceLimits& limits) {
    if (netflow.all_interior_positive()) return vertices_positive(netflow);
    if (netflow.is_cry()) return vertices_cry(netflow);
    if (netflow.n() <= 5) return vertices_generic(netflow, limits);
    throw Error(ErrorKind::Unsupported,
                "no vertex characterization for this netflow; generic detection is capped at n=5");
}

FlowMatrix mean_flow(const NetflowVector& netflow, const std::vector<FlowMatrix>& flows) {
    if (flows.empty()) throw Error(ErrorKind::BadParams, "mean of empty flow list");
    std::vector<BigRat> upper(flows.front().upper().size(), BigRat(0));
    for (const FlowMatrix& f : flows) {
        if (f.upper().size() != upper.size())
            throw Error(ErrorKind::LengthMismatch, "mean of mismatched flows");
        for (size_t k = 0; k < upper.size(); ++k) upper[k] += f.upper()[k];
    }
    const BigRat inv = big_rat(1, static_cast<long long>(flows.size()));
    for (BigRat& v : upper) v *= inv;
    return FlowMatrix::from_upper(netflow, std::move(upper));
}

}  // namespace kostant

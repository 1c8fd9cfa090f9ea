#pragma once

#include <random>
#include <vector>

#include "kostant/exact_count.hpp"
#include "kostant/flow_matrix.hpp"
#include "kostant/netflow.hpp"

namespace kostant::testutil {

// Builds a FlowMatrix from an embedded matrix written out as integer rows
// (the way worked examples are printed), checking that the subdiagonal
// slacks recompute to the given cells.
inline FlowMatrix flow_from_cells(const NetflowVector& netflow,
                                  const std::vector<std::vector<long long>>& cells) {
    const int n = netflow.n();
    std::vector<BigRat> upper(FlowMatrix::upper_size(n), BigRat(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            upper[FlowMatrix::upper_index(n, i, j)] =
                BigRat(cells.at(static_cast<size_t>(i)).at(static_cast<size_t>(n - j)));
    FlowMatrix f = FlowMatrix::from_upper(netflow, std::move(upper));
    for (int j = 1; j < n; ++j)
        internal_check(f.g(j) == BigRat(cells.at(static_cast<size_t>(j)).at(static_cast<size_t>(n - j))),
                       "worked example has inconsistent subdiagonal");
    return f;
}

// Random valid netflow: first n entries drawn from [-mag, mag] with
// rejection until all partial sums are nonnegative.
inline NetflowVector random_netflow(std::mt19937_64& rng, int n, long long mag,
                                    bool nonnegative = false) {
    std::uniform_int_distribution<long long> dist(nonnegative ? 0 : -mag, mag);
    for (;;) {
        std::vector<long long> e;
        long long sum = 0, prefix = 0;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            const long long v = dist(rng);
            prefix += v;
            if (prefix < 0) {
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
}

// Random netflow with every partial sum >= 1 (capacity/entropy suites).
inline NetflowVector random_netflow_positive_cuts(std::mt19937_64& rng, int n, long long mag) {
    for (;;) {
        NetflowVector v = random_netflow(rng, n, mag);
        bool ok = true;
        for (int k = 0; k < v.n(); ++k)
            if (v.s(k) < 1) {
                ok = false;
                break;
            }
        if (ok) return v;
    }
}

}  // namespace kostant::testutil

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kostant/flow_matrix.hpp"
#include "kostant/netflow.hpp"
#include "kostant/numbers.hpp"

namespace kostant {

struct ResourceLimits {
    // Counts memo entries plus enumeration nodes; counting is #P-hard in
    // general, so the tool fails loudly instead of hanging.
    unsigned long long max_states = 100'000'000ULL;
};

// Exact K_n(N) by peeling the sink vertex: a flow decomposes into its last
// transportation column plus a flow on the truncated complete DAG, and the
// recursion is memoized on the residual netflow vector.
BigInt count_exact(const NetflowVector& netflow, const ResourceLimits& limits = {});

// Independent oracle: exhaustive enumeration of the contingency tables with
// marginals (alpha, beta) supported on i+j <= n.
BigInt count_brute(const NetflowVector& netflow, const ResourceLimits& limits = {});

// Visits every integral flow of the polytope, in a deterministic
// (lexicographic in the embedded matrix) order.
void for_each_integral_flow(const NetflowVector& netflow,
                            const std::function<void(const FlowMatrix&)>& visit,
                            const ResourceLimits& limits = {});

struct Dag {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // (i, j) with i < j

    static Dag complete(int n_vertices);
};

// Unit-flow count K_G(1,0,...,0,-1) via the signed path matrix determinant;
// cross-checked against the permanent form for small graphs.
BigInt count_unit_flows_det(const Dag& g);

// Coefficients of the q-factorial [n]_q!: I_{n,k} = permutations of n with
// exactly k inversions.
std::vector<BigInt> inversion_numbers(int n);

// J_{n,k} = permutations with at most k inversions; equals n! once
// k >= C(n,2).
BigInt inversions_at_most(int n, long long k);

// Integer partition counts via Euler's pentagonal recurrence.
BigInt partition_count(long long t);

// Minimal-order linear recurrence a_m = c_1 a_{m-1} + ... + c_r a_{m-r}
// fitted by exact rational elimination and validated on the tail of the
// sequence (including three held-out terms). Returns nullopt when no order
// <= max_order fits.
std::optional<std::vector<BigRat>> fit_recurrence(const std::vector<BigInt>& seq, int max_order);

}  // namespace kostant

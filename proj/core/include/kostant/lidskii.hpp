#pragma once

#include <functional>
#include <vector>

#include "kostant/entropy.hpp"
#include "kostant/exact_count.hpp"
#include "kostant/netflow.hpp"
#include "kostant/numbers.hpp"

namespace kostant {

// Weak composition j_0..j_{n-1} of C(n,2), the index set of the Lidskii
// expansion.
struct WeakComposition {
    std::vector<long long> parts;
};

// Streams exactly the compositions with a nonzero Lidskii term:
// j_i <= N_i + n - i - 1 and j dominating delta = (n-1, ..., 1, 0).
// Enumeration is lexicographically descending in j_0 so the large-t CRY
// maximizer (C(n,2), 0, ..., 0) is visited first.
void positive_compositions(const NetflowVector& netflow,
                           const std::function<void(const WeakComposition&)>& visit);

std::vector<WeakComposition> positive_compositions(const NetflowVector& netflow);

// One Lidskii term: prod_i binom(N_i + n - 1 - i, j_i) * K(j - delta), where
// the inner Kostant value lives on the complete DAG with n vertices (the
// vector j - delta has length n and sums to zero). Zero for excluded
// compositions.
BigInt lidskii_term(const NetflowVector& netflow, const WeakComposition& j,
                    const ResourceLimits& limits = {});

// Sum of the terms over positive_compositions; equals count_exact(N) for
// nonnegative netflow.
BigInt lidskii_count(const NetflowVector& netflow, const ResourceLimits& limits = {});

// Number of nonzero terms. Uses the closed form J_{n-1,t} for the CRY
// family and enumerates otherwise.
BigInt s_plus(const NetflowVector& netflow, const ResourceLimits& limits = {});

// Largest term of the expansion.
BigInt m_n(const NetflowVector& netflow, const ResourceLimits& limits = {});

// Certified pair log M_n <= log K <= log(S+ * M_n).
BoundReport lidskii_bounds(const NetflowVector& netflow, const ResourceLimits& limits = {});

// Per-term CSV dump: j, binomial factor, Kostant factor, term.
void lidskii_term_csv(const NetflowVector& netflow, std::ostream& out,
                      const ResourceLimits& limits = {});

struct CryLargeTBounds {
    BigInt lower;  // binom(t+n-1, C(n,2)) * prod_{i<=n-2} C_i
    BigInt upper;  // (n-1)! * lower
    BoundReport report;
};

// Two-sided bounds for K_n(t,0,...,0,-t) in the regime t >= n^3/2.
CryLargeTBounds cry_large_t_bounds(int n, long long t);

}  // namespace kostant

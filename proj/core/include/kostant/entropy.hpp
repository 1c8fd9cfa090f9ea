#pragma once

#include <optional>
#include <string>

#include "kostant/flow_matrix.hpp"
#include "kostant/netflow.hpp"
#include "kostant/numbers.hpp"

namespace kostant {

// h(t) = (t+1) log(t+1) - t log t, the per-cell entropy of the geometric
// distribution; h(0) = 0.
double h(double t);

// H(f) = sum_{i<j} h(f_{ij}) + sum_{0<j<n} h(g_j). Cells are accumulated in
// the embedding's row-major order with compensated summation, so callers can
// reproduce the value bit-for-bit from closed forms.
double flow_entropy(const FlowMatrix& flow, const NetflowVector& netflow);

// max_k h(s_k) - 2 sum_k h(s_k); always <= 0. The multiplicative correction
// between the entropy supremum and the actual lattice point count.
double correction_log(const NetflowVector& netflow);

enum class BoundMethod {
    entropy_at_flow,
    entropy_opt,
    lidskii,
    closed_form,
    asymptotic,
};

const char* bound_method_name(BoundMethod method);

// A log-scale lower/upper bound pair for log K_n(N).
struct BoundReport {
    double log_lower = 0.0;
    std::optional<double> log_upper;
    BoundMethod method = BoundMethod::entropy_at_flow;
    bool certified = false;

    std::string to_json() const;
};

// Certified lower bound log K >= correction_log(N) + H(f), valid at any
// feasible point f.
BoundReport lower_bound_at(const FlowMatrix& flow, const NetflowVector& netflow);

// Certified two-sided report from an entropy-maximizing flow: the upper side
// is H(f*) + opt_gap where opt_gap must be a rigorous duality gap (as
// produced by maximize_entropy), the lower side is the correction-adjusted
// entropy bound at the same point.
BoundReport upper_bound_at(const FlowMatrix& f_star, const NetflowVector& netflow,
                           double opt_gap);

// Lower bound on the log relative volume of the embedded polytope:
// C(n,2) + log n! + log max_i s_i - 2 sum_i log s_i + sum_support log a_ij.
// Requires strictly positive partial sums and support entries.
double volume_lower_bound(const FlowMatrix& flow, const NetflowVector& netflow);

}  // namespace kostant

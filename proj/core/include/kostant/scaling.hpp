#pragma once

#include <iosfwd>
#include <vector>

#include "kostant/flow_matrix.hpp"
#include "kostant/netflow.hpp"

namespace kostant {

struct ScalingOptions {
    double tol = 1e-9;        // on ||rowsums-alpha||_inf + ||colsums-beta||_inf
    long max_sweeps = 100000;
    std::ostream* trace = nullptr;  // CSV: sweep,residual,dual
};

// Dual variables of the capacity optimization, indexed like the embedding
// (size n each; entries of deleted rows/columns are 0). Feasibility means
// x_i * y_j < 1 on every support cell; the gauge x -> cx, y -> y/c is fixed
// after every sweep by balancing the log norms.
struct ScalingPoint {
    std::vector<double> x;
    std::vector<double> y;
};

struct ScalingResult {
    FlowMatrix flow;     // repaired onto the affine constraints, exact rationals
    double h_star;       // flow entropy at the repaired flow
    double dual_value;   // dual objective at the scaling point; >= log cpc
    double gap;          // dual_value - h_star >= 0, a rigorous duality gap
    long sweeps;
    ScalingPoint point;
};

// Maximizes the flow entropy over the polytope by alternating coordinate
// scaling on the convex dual: fixing y, each x_i is driven by monotone 1-D
// root finding so that sum_j x_i y_j / (1 - x_i y_j) = alpha_i, then
// symmetrically for y. Rows/columns with s_k = 0 are removed first. Falls
// back to damped gradient descent on the dual if the scaling stalls.
ScalingResult maximize_entropy(const NetflowVector& netflow, const ScalingOptions& opts = {});

// log cpc_{alpha,beta}(Phi'), certified from above by the dual value at the
// final scaling point and from below by the entropy of the repaired flow.
double capacity_log(const NetflowVector& netflow, double tol = 1e-9);

// |capacity_log - H_star| at the converged point.
double duality_gap(const NetflowVector& netflow, double tol = 1e-9);

struct LogProductResult {
    FlowMatrix flow;
    double sup_log_product;  // sum over the support of log a_ij at the flow
    double dual_value;       // volume-capacity dual value
    double gap;              // dual_value - |support| - sup_log_product >= 0
    long sweeps;
};

// Maximizes sum log a_ij over the embedded polytope (stationarity
// a_ij = 1/(u_i + v_j), same alternating scheme). Requires all s_k > 0.
LogProductResult maximize_log_product(const NetflowVector& netflow,
                                      const ScalingOptions& opts = {});

// |log cpc(prod -1/log(x_i y_j)) - (C(n,2)+2n-1) - sup sum log a_ij|.
double volume_duality_check(const NetflowVector& netflow, double tol = 1e-9);

}  // namespace kostant

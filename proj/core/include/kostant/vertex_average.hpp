#pragma once

#include <vector>

#include "kostant/exact_count.hpp"
#include "kostant/flow_matrix.hpp"
#include "kostant/netflow.hpp"

namespace kostant {

// Closed-form uniform vertex average for all-positive netflow: every row i
// of the embedding is constant c_{n-i} with c_k = N_{n-k}/(k+1) +
// s_{n-k}/(k(k+1)) and subdiagonal b_k = k s_{n-k-1}/(k+1). Exact rationals.
FlowMatrix average_positive(const NetflowVector& netflow);

// Closed-form uniform vertex average for (t,0,...,0,-t): t times the
// powers-of-two matrix.
FlowMatrix average_cry(int n, long long t);

// Heuristic interior point for t*2rho: all-ones upper block scaled by t with
// subdiagonal t*k(n-k). Not a vertex average, but feasible, so bounds
// evaluated at it stay certified.
FlowMatrix midpoint_2rho(int n, long long t);

// Complete duplicate-free vertex list. All-positive netflow uses the
// one-nonzero-per-row characterization (n! vertices, n <= 8); CRY uses
// binary subdiagonal strings (2^{n-1} vertices, n <= 8); anything else falls
// back to integral-point enumeration with an acyclic-support test (n <= 5).
std::vector<FlowMatrix> enumerate_vertices(const NetflowVector& netflow,
                                           const ResourceLimits& limits = {});

// Exact rational mean of a nonempty list of flows.
FlowMatrix mean_flow(const NetflowVector& netflow, const std::vector<FlowMatrix>& flows);

}  // namespace kostant

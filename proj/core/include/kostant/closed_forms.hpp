#pragma once

#include <functional>
#include <utility>

#include "kostant/entropy.hpp"
#include "kostant/netflow.hpp"
#include "kostant/numbers.hpp"

namespace kostant {

BigInt catalan(long long n);

// C_1 C_2 ... C_{n-1}; the unit volume of the unit-netflow polytope and the
// Catalan factor of the staircase product formula.
BigInt catalan_product(int n);

// F(t,n) = prod_{1<=i<j<=n} (2t+i+j-1)/(i+j-1), the boxed plane partition
// count, as an exact rational.
BigRat big_f(long long t, int n);

// K_n(t, t+1, ..., t+n-1, -nt-C(n,2)) = catalan_product(n) * F(t,n);
// integrality is asserted.
BigInt staircase_count(long long t, int n);

struct FBoundCheck {
    double log_f = 0.0;
    double approx = 0.0;  // (n+t)^2 f(t/(n+t))
    bool ok = false;      // 0 >= log F - approx >= -2(t+n)
};

// Checks the two-sided approximation of log F(t,n) by the scaled entropy
// function f(x) = x^2 log x - (1-x)^2 log(1-x)/2 - (1+x)^2 log(1+x)/2
// + 2x log 2.
FBoundCheck f_bound_check(long long t, int n);

// Leading term of the certified-in-the-limit lower bounds for the named
// families, evaluated numerically (natural logs). These carry unspecified
// O-constants, so the report is never certified: the numbers are
// comparators, not guarantees.
BoundReport asymptotic_bound(const NamedFamily& fam, double n);

// Prior bounds for comparison tables.
double oneill_two_rho_log_lower(long long n, long long t);  // odd n = 2k+1
std::pair<double, double> oneill_tesler_log_bounds(long long n);  // (lower, upper)

// Correction-plus-entropy lower bound for the dilated Tesler family
// evaluated from the closed forms of the vertex average, accumulating cells
// in the embedding's row-major order so the result is bit-identical to
// lower_bound_at(average_positive(.)).
double tesler_entropy_product_log(int n, long long t = 1);

// A smooth function together with caller-supplied analytic derivatives and
// integrals; no symbolic or automatic differentiation happens here.
struct SmoothFunction {
    std::function<double(double)> value;
    std::function<double(int, double)> derivative;          // order >= 1
    std::function<double(double, double)> integral;         // of f over [a,b]
    std::function<double(int, double, double)> abs_deriv_integral;  // >= int |f^(p)|
};

struct EulerMaclaurin {
    double approx = 0.0;
    double remainder_bound = 0.0;
};

// Euler-Maclaurin approximation of sum_{k=a}^b f(k) with the explicit
// remainder bound 2 zeta(p) / (2 pi)^p * int |f^(p)|; p odd, p >= 3.
EulerMaclaurin euler_maclaurin(const SmoothFunction& f, long long a, long long b, int p);

// Ready-made handle for f(t) = t log(c t + d) with exact derivatives and
// integrals; the workhorse of the k log k estimates.
SmoothFunction t_log_linear_handle(double c, double d);

struct KlogkApprox {
    double value = 0.0;        // the closed-form main terms
    double error_bound = 0.0;  // explicit bound on |sum - value|
};

// Main terms of sum_{k=a}^b k log(ck+d) with the explicit error bound from
// the p=3 Euler-Maclaurin remainder.
KlogkApprox klogk_approx(long long a, long long b, double c, double d);

// Main terms of sum_{k=1}^n k log((n^2 - xi^2 k^2)/k^2); xi in [0,1), with
// the xi -> 0 limit of the quadratic coefficient handled.
double quadratic_klogk(double xi, long long n);
double quadratic_klogk_coefficient(double xi);  // (1/xi^2 - 1) log(1/(1-xi^2))

// int_a^b f - max_[a,b] f, a certified lower bound for sums of unimodal
// functions over the integer points of (a,b).
double unimodal_sum_lb(const std::function<double(double)>& f, double a, double b);

// Verifies e(t+1/2) >= e^{h(t)} >= max{e(t+1/2-1/(24t)), (e/t)^t} and
// e^{h(t)} >= et+1, all in natural logs.
bool entropy_ineq_check(double t);

// (n!)^2, cross-checked against the matrix-tree determinant of the bipartite
// support graph for n <= 7.
BigInt spanning_trees_staircase(int n);

// Matrix-tree spanning tree count of the bipartite graph with parts of size
// n and edges (i, j) for i+j <= n.
BigInt matrix_tree_support_trees(int n);

}  // namespace kostant

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "kostant/entropy.hpp"
#include "kostant/exact_count.hpp"
#include "kostant/scaling.hpp"
#include "test_util.hpp"

using namespace kostant;

TEST_CASE("single-cell instance solves in closed form") {
    // n = 1: the only support cell carries a = t, H = h(t), and the capacity
    // is (t+1)^{t+1}/t^t.
    for (long long t : {1LL, 2LL, 5LL}) {
        const NetflowVector v = make_netflow({t, -t});
        const ScalingResult res = maximize_entropy(v);
        CHECK(res.h_star == doctest::Approx(h(static_cast<double>(t))).epsilon(1e-12));
        CHECK(res.gap <= 1e-9);
        CHECK(res.flow.f(0, 1) == BigRat(t));
        CHECK(capacity_log(v) == doctest::Approx(h(static_cast<double>(t))).epsilon(1e-9));
    }
}

TEST_CASE("zero netflow reduces away completely") {
    const NetflowVector v = make_netflow({0, 0, 0, 0});
    const ScalingResult res = maximize_entropy(v);
    CHECK(res.h_star == 0.0);
    CHECK(res.dual_value == 0.0);
    CHECK(res.gap == 0.0);
    CHECK(capacity_log(v) == 0.0);
}

TEST_CASE("entropy supremum sandwiches the exact count") {
    const NetflowVector v = make_netflow({1, 1, -2});
    const ScalingResult res = maximize_entropy(v);
    const double ln_k = big_log(count_exact(v));
    CHECK(res.h_star + res.gap >= ln_k - 1e-9);
    CHECK(res.h_star >= ln_k + correction_log(v) - 1e-9);
}

TEST_CASE("capacity certifies the count from above") {
    const NetflowVector v = make_netflow({1, 0, 0, -1});
    const double cap = capacity_log(v);
    CHECK(cap >= std::log(4.0) - 1e-9);
    CHECK(std::log(4.0) >= correction_log(v) + cap - 1e-6);
}

TEST_CASE("duality gap vanishes on random instances") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);  // up to 8
        const NetflowVector v = testutil::random_netflow_positive_cuts(rng, n, 3);
        CHECK(duality_gap(v) <= 1e-6);
    }
    CHECK(duality_gap(make_netflow({1, 1, -2})) <= 1e-6);
}

TEST_CASE("palindromic instances produce transpose-symmetric optimizers") {
    // Reversing the vertex order maps f_{ij} to f_{n-j,n-i}, which is the
    // transpose of the embedded matrix. It fixes the instance exactly when
    // the cut vector s is palindromic (CRY and 2rho netflows), and the
    // unique entropy maximizer inherits the symmetry.
    for (const NetflowVector& v :
         {family({FamilyTag::cry, 2}, 4), family({FamilyTag::two_rho, 1}, 4)}) {
        const int n = v.n();
        for (int k = 0; k < n; ++k) REQUIRE(v.s(k) == v.s(n - 1 - k));
        const ScalingResult res = maximize_entropy(v);
        const DenseMatrix a = embed(res.flow, v);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!on_support(n, i, j)) continue;
                CHECK(to_double(a.at(i, j)) ==
                      doctest::Approx(to_double(a.at(j, i))).epsilon(1e-6));
            }
    }
}

TEST_CASE("gauge rescaling leaves the dual objective unchanged") {
    const NetflowVector v = family({FamilyTag::tesler, 1}, 5);
    const ScalingResult res = maximize_entropy(v);
    // D(x,y) with the scaling point, recomputed directly.
    auto dual_at = [&](double c) {
        KahanSum s;
        for (int i = 0; i < v.n(); ++i) {
            const double xi = res.point.x[static_cast<size_t>(i)] * c;
            if (xi <= 0.0) continue;
            for (int j = 0; j < v.n(); ++j) {
                const double yj = res.point.y[static_cast<size_t>(j)] / c;
                if (yj <= 0.0 || !on_support(v.n(), i, j)) continue;
                s.add(-std::log1p(-(xi * yj)));
            }
        }
        for (int i = 0; i < v.n(); ++i) {
            const double xi = res.point.x[static_cast<size_t>(i)] * c;
            if (xi > 0.0)
                s.add(-static_cast<double>(v.alpha()[static_cast<size_t>(i)]) * std::log(xi));
        }
        for (int j = 0; j < v.n(); ++j) {
            const double yj = res.point.y[static_cast<size_t>(j)] / c;
            if (yj > 0.0)
                s.add(-static_cast<double>(v.beta()[static_cast<size_t>(j)]) * std::log(yj));
        }
        return s.value();
    };
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> cdist(0.25, 4.0);
    const double base = dual_at(1.0);
    CHECK(base == doctest::Approx(res.dual_value).epsilon(1e-9));
    for (int trial = 0; trial < 10; ++trial)
        CHECK(dual_at(cdist(rng)) == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("scaling point is feasible and the flow strictly positive") {
    const NetflowVector v = family({FamilyTag::tesler, 1}, 5);
    const ScalingResult res = maximize_entropy(v);
    for (int i = 0; i < v.n(); ++i)
        for (int j = 0; j < v.n(); ++j)
            if (on_support(v.n(), i, j))
                CHECK(res.point.x[static_cast<size_t>(i)] * res.point.y[static_cast<size_t>(j)] <
                      1.0);
    const DenseMatrix a = embed(res.flow, v);
    for (int i = 0; i < v.n(); ++i)
        for (int j = 0; j < v.n(); ++j)
            if (on_support(v.n(), i, j)) CHECK(a.at(i, j) > 0);
}

TEST_CASE("trace emits one CSV row per sweep") {
    std::ostringstream trace;
    ScalingOptions opts;
    opts.trace = &trace;
    (void)maximize_entropy(family({FamilyTag::tesler, 1}, 3), opts);
    const std::string text = trace.str();
    CHECK(text.rfind("iteration,residual,dual\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') >= 2);
}

TEST_CASE("log product maximization matches 1x1 closed form") {
    const NetflowVector v = make_netflow({3, -3});
    const LogProductResult res = maximize_log_product(v);
    CHECK(res.sup_log_product == doctest::Approx(std::log(3.0)).epsilon(1e-9));
    CHECK(res.gap <= 1e-8);
}

TEST_CASE("volume duality holds on small instances") {
    CHECK(volume_duality_check(make_netflow({1, 1, -2})) <= 1e-5);
    CHECK(volume_duality_check(make_netflow({1, 1, 1, -3})) <= 1e-5);
    CHECK(volume_duality_check(make_netflow({2, 1, 2, -5})) <= 1e-5);
}

TEST_CASE("volume path requires positive marginals") {
    CHECK_THROWS_AS((void)maximize_log_product(make_netflow({0, 1, -1})), Error);
}

TEST_CASE("zero cuts reduce away and the sandwich still holds") {
    // Vectors with interior zero partial sums force whole rows, columns,
    // and individual cells to zero; the optimizer must still converge and
    // certify.  (The count side is checked against the DP.)
    std::mt19937_64 rng(4711);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const NetflowVector v = testutil::random_netflow(rng, n, 2);
        const ScalingResult res = maximize_entropy(v);
        const double ln_k = big_log(count_exact(v));
        CHECK(res.gap <= 1e-6);
        CHECK(ln_k <= res.h_star + 1e-6);
        CHECK(correction_log(v) + res.h_star <= ln_k + 1e-9);
    }
    const NetflowVector hard = make_netflow({1, -1, 1, -1, 2, -2, 0, 0});
    const ScalingResult res = maximize_entropy(hard);
    CHECK(res.gap <= 1e-9);
    CHECK(big_log(count_exact(hard)) <= res.h_star + 1e-6);
}

TEST_CASE("an exhausted sweep budget raises NoConvergence") {
    ScalingOptions opts;
    opts.max_sweeps = 1;
    try {
        (void)maximize_entropy(family({FamilyTag::tesler, 1}, 6), opts);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoConvergence);
    }
}

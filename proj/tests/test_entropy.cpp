#include <doctest.h>

#include <cmath>
#include <random>

#include "kostant/entropy.hpp"
#include "kostant/exact_count.hpp"
#include "kostant/scaling.hpp"
#include "kostant/vertex_average.hpp"
#include "test_util.hpp"

using namespace kostant;
using testutil::flow_from_cells;

namespace {
const double kLn2 = std::log(2.0);
}

TEST_CASE("h matches its closed form") {
    CHECK(h(0.0) == 0.0);
    CHECK(h(1.0) == doctest::Approx(2.0 * kLn2).epsilon(1e-14));
    CHECK(h(3.0) == doctest::Approx(4.0 * std::log(4.0) - 3.0 * std::log(3.0)).epsilon(1e-14));
    CHECK(h(3.0) == doctest::Approx(2.249341).epsilon(1e-6));
    CHECK_THROWS_AS((void)h(-0.1), Error);
}

TEST_CASE("flow entropy of worked examples") {
    const NetflowVector zero = make_netflow({0, 0, 0});
    const FlowMatrix zf =
        FlowMatrix::from_upper(zero, std::vector<BigRat>(FlowMatrix::upper_size(2)));
    CHECK(flow_entropy(zf, zero) == 0.0);

    // Any CRY vertex carries three unit entries.
    const NetflowVector cry = make_netflow({1, 0, 0, -1});
    const FlowMatrix vert = flow_from_cells(cry, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(flow_entropy(vert, cry) == doctest::Approx(6.0 * kLn2).epsilon(1e-13));

    // Tesler average: three cells 1/3, three cells 2/3, one 2, one 1.
    const NetflowVector tes = make_netflow({1, 1, 1, -3});
    const FlowMatrix avg = average_positive(tes);
    const double expected =
        3.0 * h(1.0 / 3.0) + 3.0 * h(2.0 / 3.0) + h(2.0) + h(1.0);
    CHECK(flow_entropy(avg, tes) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("correction_log closed forms") {
    CHECK(correction_log(make_netflow({0, 0, 0})) == 0.0);
    CHECK(correction_log(make_netflow({1, 0, 0, -1})) ==
          doctest::Approx(-10.0 * kLn2).epsilon(1e-13));
    const double expected = h(2.0) - 2.0 * (h(1.0) + h(2.0));
    CHECK(correction_log(make_netflow({1, 1, -2})) == doctest::Approx(expected).epsilon(1e-13));
    // Always nonpositive.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(correction_log(testutil::random_netflow(rng, 2 + static_cast<int>(rng() % 5), 3)) <=
              0.0);
}

TEST_CASE("lower_bound_at sandwiches the exact count") {
    const NetflowVector zero = make_netflow({0, 0, 0});
    const FlowMatrix zf =
        FlowMatrix::from_upper(zero, std::vector<BigRat>(FlowMatrix::upper_size(2)));
    CHECK(lower_bound_at(zf, zero).log_lower == 0.0);  // K = 1

    const NetflowVector tes = make_netflow({1, 1, 1, -3});
    const BoundReport tb = lower_bound_at(average_positive(tes), tes);
    CHECK(tb.certified);
    CHECK(tb.log_lower <= std::log(7.0));

    const NetflowVector cry4 = make_netflow({1, 0, 0, 0, -1});
    const BoundReport cb = lower_bound_at(average_cry(4, 1), cry4);
    CHECK(cb.log_lower <= 3.0 * kLn2);  // K = 8
}

TEST_CASE("upper_bound_at reports a certified two-sided pair") {
    const NetflowVector tes = make_netflow({1, 1, 1, -3});
    const ScalingResult opt = maximize_entropy(tes);
    const BoundReport rb = upper_bound_at(opt.flow, tes, opt.gap);
    REQUIRE(rb.log_upper.has_value());
    CHECK(rb.certified);
    CHECK(rb.log_lower <= std::log(7.0));
    CHECK(*rb.log_upper >= std::log(7.0) - 1e-9);

    const NetflowVector cry = make_netflow({1, 0, 0, -1});
    const ScalingResult copt = maximize_entropy(cry);
    CHECK(*upper_bound_at(copt.flow, cry, copt.gap).log_upper >= std::log(4.0) - 1e-9);

    const NetflowVector zero = make_netflow({0, 0, 0});
    const ScalingResult zopt = maximize_entropy(zero);
    CHECK(*upper_bound_at(zopt.flow, zero, zopt.gap).log_upper == 0.0);
}

TEST_CASE("flow entropy is concave along segments") {
    std::mt19937_64 rng(17);
    const NetflowVector v = make_netflow({2, 1, 1, -4});
    const std::vector<FlowMatrix> verts = enumerate_vertices(v);
    std::uniform_int_distribution<size_t> pick(0, verts.size() - 1);
    std::uniform_int_distribution<int> lam(0, 16);
    for (int trial = 0; trial < 100; ++trial) {
        const FlowMatrix& a = verts[pick(rng)];
        const FlowMatrix& b = verts[pick(rng)];
        const BigRat lambda = big_rat(lam(rng), 16);
        const FlowMatrix mix = FlowMatrix::blend(v, a, b, lambda);
        const double lhs = flow_entropy(mix, v);
        const double rhs = to_double(lambda) * flow_entropy(a, v) +
                           (1.0 - to_double(lambda)) * flow_entropy(b, v);
        CHECK(lhs >= rhs - 1e-12);
    }
}

TEST_CASE("optimizer entropy beats every vertex strictly") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        const NetflowVector v = testutil::random_netflow_positive_cuts(
            rng, 3 + static_cast<int>(rng() % 2), 3);
        const ScalingResult opt = maximize_entropy(v);
        double best_vertex = -1.0;
        for (const FlowMatrix& vert : enumerate_vertices(v))
            best_vertex = std::max(best_vertex, flow_entropy(vert, v));
        CHECK(opt.h_star > best_vertex);
    }
}

TEST_CASE("volume lower bound stays below the exact segment volume") {
    // For n = 2 the polytope is a segment with s_0 lattice steps, so its
    // relative volume is s_0.
    for (long long n0 = 1; n0 <= 3; ++n0) {
        const NetflowVector v = make_netflow({n0, 1, -n0 - 1});
        const ScalingResult opt = maximize_entropy(v);
        const double bound = volume_lower_bound(opt.flow, v);
        CHECK(bound <= std::log(static_cast<double>(n0)) + 1e-9);
    }

    const NetflowVector tes = make_netflow({1, 1, 1, -3});
    const double finite = volume_lower_bound(average_positive(tes), tes);
    CHECK(std::isfinite(finite));

    // Zero support entries are rejected.
    const NetflowVector cry = make_netflow({1, 0, 0, -1});
    const FlowMatrix vert = flow_from_cells(cry, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK_THROWS_AS((void)volume_lower_bound(vert, cry), Error);
}

TEST_CASE("bound reports serialize to JSON") {
    const NetflowVector tes = make_netflow({1, 1, 1, -3});
    const BoundReport rb = lower_bound_at(average_positive(tes), tes);
    const std::string json = rb.to_json();
    CHECK(json.find("\"log_lower\"") != std::string::npos);
    CHECK(json.find("\"method\":\"entropy_at_flow\"") != std::string::npos);
    CHECK(json.find("\"certified\":true") != std::string::npos);
}

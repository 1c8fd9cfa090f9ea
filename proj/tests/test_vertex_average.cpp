#include <doctest.h>

#include <random>
#include <set>

#include "kostant/exact_count.hpp"
#include "kostant/vertex_average.hpp"
#include "test_util.hpp"

using namespace kostant;

TEST_CASE("average_positive closed forms") {
    const NetflowVector tes = make_netflow({1, 1, 1, -3});
    const FlowMatrix avg = average_positive(tes);
    const DenseMatrix m = embed(avg, tes);
    for (int c = 0; c < 3; ++c) CHECK(m.at(0, c) == big_rat(1, 3));
    for (int c = 0; c < 3; ++c) CHECK(m.at(1, c) == big_rat(2, 3));
    CHECK(m.at(2, 0) == BigRat(2));
    CHECK(m.at(2, 1) == BigRat(1));

    // Dilated Tesler specializes to c_k = t(n+1)/(k(k+1)).
    for (long long t : {1LL, 2LL}) {
        const int n = 4;
        const NetflowVector v = family({FamilyTag::dilated_tesler, t}, n);
        const FlowMatrix a = average_positive(v);
        for (int i = 0; i < n; ++i) {
            const long long k = n - i;
            CHECK(a.f(i, n) == BigRat(BigInt(t * (n + 1)), BigInt(k * (k + 1))));
        }
    }

    // One edge carries everything when n = 1.
    const NetflowVector single = make_netflow({5, -5});
    CHECK(average_positive(single).f(0, 1) == BigRat(5));

    CHECK_THROWS_AS((void)average_positive(make_netflow({1, 0, 0, -1})), Error);
}

TEST_CASE("average_cry matches the powers-of-two matrix") {
    const FlowMatrix a3 = average_cry(3, 1);
    const NetflowVector cry3 = family({FamilyTag::cry, 1}, 3);
    const DenseMatrix m = embed(a3, cry3);
    const std::vector<std::vector<BigRat>> expected = {
        {big_rat(1, 4), big_rat(1, 4), big_rat(1, 2)},
        {big_rat(1, 4), big_rat(1, 4), big_rat(1, 2)},
        {big_rat(1, 2), big_rat(1, 2), BigRat(0)},
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(m.at(i, j) == expected[static_cast<size_t>(i)][static_cast<size_t>(j)]);

    const FlowMatrix a2 = average_cry(2, 1);
    const DenseMatrix m2 = embed(a2, family({FamilyTag::cry, 1}, 2));
    for (const BigRat& v : m2.data) CHECK(v == big_rat(1, 2));

    // Dilation scales the average linearly.
    const FlowMatrix a43 = average_cry(4, 3);
    const FlowMatrix a41 = average_cry(4, 1);
    for (size_t k = 0; k < a43.upper().size(); ++k)
        CHECK(a43.upper()[k] == BigRat(3) * a41.upper()[k]);
}

TEST_CASE("midpoint_2rho is feasible with the stated subdiagonal") {
    const FlowMatrix m3 = midpoint_2rho(3, 1);
    const NetflowVector rho3 = family({FamilyTag::two_rho, 1}, 3);
    const DenseMatrix m = embed(m3, rho3);
    const std::vector<std::vector<long long>> expected = {{1, 1, 1}, {1, 1, 2}, {1, 2, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(m.at(i, j) == BigRat(expected[static_cast<size_t>(i)][static_cast<size_t>(j)]));

    // Low-n case matches the exact average.
    const FlowMatrix m2 = midpoint_2rho(2, 1);
    const NetflowVector rho2 = family({FamilyTag::two_rho, 1}, 2);
    const std::vector<FlowMatrix> verts2 = enumerate_vertices(rho2);
    CHECK(verts2.size() == 2);
    CHECK(mean_flow(rho2, verts2) == m2);

    // Marginals are t(k+1)(n-k) for any n, t.
    for (int n : {3, 5})
        for (long long t : {1LL, 2LL}) {
            const NetflowVector v = family({FamilyTag::two_rho, t}, n);
            (void)midpoint_2rho(n, t);  // from_upper validates feasibility
            for (int k = 0; k < n; ++k)
                CHECK(v.s(k) == t * (k + 1) * (n - k));
        }
}

TEST_CASE("vertex enumeration counts and structure") {
    // Tesler: n! vertices, one nonzero upper entry per row; the n = 3 set
    // matches the six printed matrices exactly.
    const NetflowVector tes = make_netflow({1, 1, 1, -3});
    const std::vector<FlowMatrix> tv = enumerate_vertices(tes);
    CHECK(tv.size() == 6);
    {
        const std::vector<std::vector<std::vector<long long>>> printed = {
            {{0, 0, 1}, {0, 2, 0}, {3, 0, 0}}, {{0, 0, 1}, {2, 0, 0}, {1, 2, 0}},
            {{0, 1, 0}, {0, 1, 1}, {3, 0, 0}}, {{0, 1, 0}, {1, 0, 1}, {2, 1, 0}},
            {{1, 0, 0}, {0, 1, 1}, {2, 1, 0}}, {{1, 0, 0}, {1, 0, 1}, {1, 2, 0}},
        };
        std::set<std::string> expected, got;
        for (const auto& cells : printed)
            expected.insert(testutil::flow_from_cells(tes, cells).to_json());
        for (const FlowMatrix& vert : tv) got.insert(vert.to_json());
        CHECK(expected == got);
    }
    for (const FlowMatrix& vert : tv) {
        for (int i = 0; i < 3; ++i) {
            int nonzero = 0;
            for (int j = i + 1; j <= 3; ++j)
                if (vert.f(i, j) != 0) ++nonzero;
            CHECK(nonzero == 1);
        }
    }

    // CRY: 2^{n-1} vertices, binary subdiagonal.
    const NetflowVector cry = make_netflow({1, 0, 0, -1});
    const std::vector<FlowMatrix> cv = enumerate_vertices(cry);
    CHECK(cv.size() == 4);
    for (const FlowMatrix& vert : cv)
        for (int j = 1; j < 3; ++j) CHECK((vert.g(j) == 0 || vert.g(j) == 1));

    // Duplicate-free.
    std::set<std::string> seen;
    for (const FlowMatrix& vert : cv) seen.insert(vert.to_json());
    CHECK(seen.size() == cv.size());
}

TEST_CASE("positive-family averages equal enumerated means exactly") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);  // up to 5
        const NetflowVector v = testutil::random_netflow(rng, n, 3, /*nonnegative=*/true);
        if (!v.all_interior_positive()) continue;
        const std::vector<FlowMatrix> verts = enumerate_vertices(v);
        CHECK(BigInt(verts.size()) == factorial(n));
        CHECK(mean_flow(v, verts) == average_positive(v));
    }
    const NetflowVector t6 = family({FamilyTag::tesler, 1}, 6);
    CHECK(mean_flow(t6, enumerate_vertices(t6)) == average_positive(t6));
}

TEST_CASE("CRY averages equal enumerated means exactly up to n=8") {
    for (int n : {2, 3, 5, 8}) {
        const NetflowVector v = family({FamilyTag::cry, 1}, n);
        const std::vector<FlowMatrix> verts = enumerate_vertices(v);
        CHECK(verts.size() == (1ULL << (n - 1)));
        CHECK(mean_flow(v, verts) == average_cry(n, 1));
    }
}

TEST_CASE("two_rho vertex counts and the n=3 mean") {
    const std::vector<size_t> expected_counts = {2, 7, 26, 219};
    for (int n = 2; n <= 5; ++n) {
        const NetflowVector v = family({FamilyTag::two_rho, 1}, n);
        const std::vector<FlowMatrix> verts = enumerate_vertices(v);
        CHECK(verts.size() == expected_counts[static_cast<size_t>(n - 2)]);
        // Every reported vertex is a lattice point of the polytope.
        for (const FlowMatrix& vert : verts) CHECK(vert.integral());
    }

    const NetflowVector rho3 = family({FamilyTag::two_rho, 1}, 3);
    const FlowMatrix mean = mean_flow(rho3, enumerate_vertices(rho3));
    const DenseMatrix m = embed(mean, rho3);
    CHECK(m.at(0, 0) == big_rat(5, 7));
    CHECK(m.at(0, 1) == big_rat(8, 7));
    CHECK(m.at(0, 2) == big_rat(8, 7));
    CHECK(m.at(1, 0) == big_rat(8, 7));
    CHECK(m.at(1, 1) == BigRat(1));
    // Row sums force the subdiagonal mean to 13/7 (a 7-vertex mean cannot
    // have denominator 8).
    CHECK(m.at(1, 2) == big_rat(13, 7));
    CHECK(m.at(2, 1) == big_rat(13, 7));
}

TEST_CASE("unsupported vertex enumerations are rejected") {
    // No characterization and too large for generic detection.
    const NetflowVector v = family({FamilyTag::two_rho, 1}, 6);
    CHECK_THROWS_AS((void)enumerate_vertices(v), Error);
    // Characterized families are capped at n = 8.
    try {
        (void)enumerate_vertices(family({FamilyTag::tesler, 1}, 9));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
}

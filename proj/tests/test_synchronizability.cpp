#include <doctest.h>

#include <Eigen/Dense>

#include "clustersync/graph_io.hpp"
#include "clustersync/rng.hpp"
#include "clustersync/simulator.hpp"
#include "clustersync/synchronizability.hpp"
#include "support.hpp"

using namespace clustersync;

namespace {

ClusteredGraph complete_graph(int m) {
    ClusteredGraph graph;
    graph.vertex_count = m;
    graph.clusters = {{}};
    for (int v = 1; v <= m; ++v) graph.clusters[0].push_back(v);
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) graph.edges.push_back({a, b});
    return graph;
}

}  // namespace

TEST_CASE("complete-graph quotient matches the analytic spectrum") {
    for (int m = 3; m <= 10; ++m) {
        const auto graph = complete_graph(m);
        const auto L = build_normalized_laplacian(graph);
        const auto basis = transverse_basis(graph, Eigen::VectorXd::Ones(m));
        CHECK_EQ(cs_fixed_d(L, basis),
                 doctest::Approx(static_cast<double>(m) / (m - 1)).epsilon(1e-9));
    }
}

TEST_CASE("quotient for symmetric Laplacians matches a dense eigen oracle") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto graph = testsupport::random_clustered_graph(rng, 8);
        if (graph.vertex_count == graph.cluster_count()) continue;
        // unit symmetric weights make the general Laplacian symmetric
        EdgeWeights weights;
        for (const auto& pair : directed_edges(graph)) weights[pair] = 1.0;
        const auto G = build_general_laplacian(graph, weights);
        const auto basis =
            transverse_basis(graph, Eigen::VectorXd::Ones(graph.vertex_count));
        const double computed = cs_fixed_d(G, basis);
        // oracle: smallest eigenvalue of -L projected onto the basis
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
            basis.basis.transpose() * (-G.entries) * basis.basis);
        CHECK_EQ(computed, doctest::Approx(eig.eigenvalues()(0)).epsilon(1e-8));
    }
}

TEST_CASE("a cluster spanning two components forces a zero quotient") {
    ClusteredGraph graph{4, {{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}};
    const auto L = build_normalized_laplacian(graph);
    const auto d = left_perron_vector(graph, L);
    const double value = cs_fixed_d(L, transverse_basis(graph, d));
    CHECK_LE(std::abs(value), 1e-9);
}

TEST_CASE("quotient is undefined when every cluster is a singleton") {
    ClusteredGraph graph{2, {{1, 2}}, {{1}, {2}}};
    const auto L = build_normalized_laplacian(graph);
    CHECK_THROWS_AS(cs_fixed_d(L, transverse_basis(graph, Eigen::VectorXd::Ones(2))),
                    std::domain_error);
}

TEST_CASE("quotient scales linearly with the Laplacian") {
    const auto graph = load_graph(testsupport::fixture_path("graph1.json"));
    const auto L = build_normalized_laplacian(graph);
    const auto d = left_perron_vector(graph, L);
    const auto basis = transverse_basis(graph, d);
    const double base = cs_fixed_d(L, basis);
    for (double c : {2.0, 10.0}) {
        WeightedLaplacian scaled{c * L.entries, WeightedLaplacian::Kind::General};
        CHECK_EQ(cs_fixed_d(scaled, basis), doctest::Approx(c * base).epsilon(1e-9));
    }
}

TEST_CASE("quotient lower-bounds random transverse Rayleigh quotients") {
    const auto graph = load_graph(testsupport::fixture_path("graph2.json"));
    const auto L = build_normalized_laplacian(graph);
    const auto d = left_perron_vector(graph, L);
    const auto basis = transverse_basis(graph, d);
    const double computed = cs_fixed_d(L, basis);
    const Eigen::MatrixXd DL = d.asDiagonal() * L.entries;
    const Eigen::MatrixXd sym = 0.5 * (DL + DL.transpose());

    SplitMix64 rng(77);
    double lowest = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 100000; ++trial) {
        Eigen::VectorXd z(basis.dimension());
        for (int i = 0; i < z.size(); ++i) z(i) = rng.uniform(-1.0, 1.0);
        const Eigen::VectorXd u = basis.basis * z;
        const double denom = u.dot(d.asDiagonal() * u);
        if (denom < 1e-12) continue;
        lowest = std::min(lowest, -u.dot(sym * u) / denom);
    }
    CHECK_GE(lowest, computed - 1e-6);
}

TEST_CASE("optimizer does not move away from the symmetric stationary point") {
    const auto graph = complete_graph(5);
    const auto L = build_normalized_laplacian(graph);
    const auto result = cs_optimize(graph, L, 500);
    CHECK_EQ(result.cs_fixed, doctest::Approx(1.25).epsilon(1e-9));
    CHECK_LE(result.cs_best, result.cs_fixed + 1e-6);
    CHECK_GE(result.cs_best, result.cs_fixed - 1e-12);
}

TEST_CASE("optimizer improves or preserves the Perron starting point") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        const auto graph =
            testsupport::random_common_condition_graph(rng, 7, false);
        if (graph.vertex_count == graph.cluster_count()) continue;
        const auto L = build_normalized_laplacian(graph);
        const auto result = cs_optimize(graph, L, 200);
        CHECK_GE(result.cs_best, result.cs_fixed - 1e-12);
        CHECK_EQ(result.d_best.sum(), doctest::Approx(graph.vertex_count));
        CHECK_GT(result.d_best.minCoeff(), 0.0);
    }
}

TEST_CASE("fixture graphs have positive synchronizability") {
    for (const char* name : {"graph1.json", "graph2.json", "graph3.json"}) {
        const auto graph = load_graph(testsupport::fixture_path(name));
        const auto result =
            cs_optimize(graph, build_normalized_laplacian(graph), 300);
        CAPTURE(name);
        CHECK_GT(result.cs_best, 0.0);
    }
}

TEST_CASE("coupling threshold reproduces the documented estimates") {
    CHECK_EQ(coupling_threshold(119.3021, 0.472),
             doctest::Approx(252.7587).epsilon(1e-4));
    CHECK_EQ(coupling_threshold(1.0, 1.0), doctest::Approx(1.0));
    // reference value only; the exact graphs behind it are unpublished
    CHECK_EQ(coupling_threshold(120.9882, 0.178),
             doctest::Approx(679.7088).epsilon(1e-4));
}

TEST_CASE("non-positive quotients cannot certify any coupling strength") {
    CHECK_THROWS_AS(coupling_threshold(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(coupling_threshold(1.0, -0.5), std::domain_error);
}

TEST_CASE("acceptance of couplings brackets the threshold") {
    const auto graph = load_graph(testsupport::fixture_path("graph3.json"));
    const auto L = build_normalized_laplacian(graph);
    const double alpha = 5.0;
    const auto result = cs_optimize(graph, L, 300, alpha);
    REQUIRE(result.c_min);
    const double c_min = *result.c_min;
    CHECK(check_cluster_sync_condition(L, 1.01 * c_min, alpha, result.d_best, graph));
    CHECK_FALSE(
        check_cluster_sync_condition(L, 0.99 * c_min, alpha, result.d_best, graph));
}

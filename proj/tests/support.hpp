#pragma once

// Shared test helpers: fixture paths, random clustered-graph generators, and
// a brute-force classification oracle kept independent of the library path.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "clustersync/graph.hpp"
#include "clustersync/rng.hpp"

#ifndef CLUSTERSYNC_SOURCE_DIR
#define CLUSTERSYNC_SOURCE_DIR "."
#endif

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(CLUSTERSYNC_SOURCE_DIR) + "/data/fixtures/" + name;
}

inline std::string config_path(const std::string& name) {
    return std::string(CLUSTERSYNC_SOURCE_DIR) + "/data/configs/" + name;
}

// Uniformly random simple graph with a random partition into 2 or 3
// non-empty clusters. Makes no attempt to satisfy any structural condition.
inline clustersync::ClusteredGraph random_clustered_graph(clustersync::SplitMix64& rng,
                                                          int max_vertices) {
    clustersync::ClusteredGraph graph;
    const int m = 2 + static_cast<int>(rng.below(max_vertices - 1));
    graph.vertex_count = m;
    const int K = std::min<int>(m, 2 + static_cast<int>(rng.below(2)));
    graph.clusters.assign(K, {});
    // Guarantee non-empty clusters, then scatter the rest.
    std::vector<int> order(m);
    for (int v = 0; v < m; ++v) order[v] = v + 1;
    for (int v = m - 1; v > 0; --v)
        std::swap(order[v], order[rng.below(v + 1)]);
    for (int k = 0; k < K; ++k) graph.clusters[k].push_back(order[k]);
    for (int idx = K; idx < m; ++idx)
        graph.clusters[rng.below(K)].push_back(order[idx]);
    for (auto& members : graph.clusters) std::sort(members.begin(), members.end());
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            if (rng.below(100) < 35) graph.edges.push_back({a, b});
    return graph;
}

// Random graph satisfying the common inter-cluster coupling condition by
// construction: a random cluster-level adjacency pattern realized so that
// every vertex has at least one neighbor in each adjacent foreign cluster.
// With `split`, two disjoint copies over the same pattern share the cluster
// labels, so every cluster spans two components.
inline clustersync::ClusteredGraph random_common_condition_graph(
    clustersync::SplitMix64& rng, int max_vertices, bool split) {
    const int K = 2 + static_cast<int>(rng.below(2));
    const int copies = split ? 2 : 1;
    // per copy, each cluster needs >= 1 vertex
    const int min_m = K * copies;
    int m = min_m + static_cast<int>(rng.below(std::max(1, max_vertices - min_m + 1)));
    if (split && m % 2 != 0) ++m;
    const int per_copy = m / copies;

    clustersync::ClusteredGraph graph;
    graph.vertex_count = m;
    graph.clusters.assign(K, {});

    // cluster-level pattern, connected enough to be interesting
    std::vector<std::pair<int, int>> pattern;
    for (int a = 0; a < K; ++a)
        for (int b = a + 1; b < K; ++b)
            if (rng.below(100) < 70) pattern.push_back({a, b});

    for (int copy = 0; copy < copies; ++copy) {
        const int base = copy * per_copy;
        std::vector<std::vector<int>> members(K);
        for (int k = 0; k < K; ++k) members[k].push_back(base + k + 1);
        for (int v = K; v < per_copy; ++v)
            members[rng.below(K)].push_back(base + v + 1);
        for (int k = 0; k < K; ++k)
            for (int v : members[k]) graph.clusters[k].push_back(v);

        std::set<std::pair<int, int>> edges;
        for (const auto& [a, b] : pattern) {
            // every a-vertex picks a non-empty random subset of b
            for (int va : members[a])
                for (int vb : members[b])
                    if (rng.below(100) < 50) edges.insert(std::minmax(va, vb));
            for (int va : members[a]) {
                bool has = false;
                for (int vb : members[b])
                    if (edges.count(std::minmax(va, vb))) has = true;
                if (!has)
                    edges.insert(std::minmax(va, members[b][rng.below(members[b].size())]));
            }
            for (int vb : members[b]) {
                bool has = false;
                for (int va : members[a])
                    if (edges.count(std::minmax(va, vb))) has = true;
                if (!has)
                    edges.insert(std::minmax(vb, members[a][rng.below(members[a].size())]));
            }
        }
        // intra-cluster edges are unconstrained
        for (int k = 0; k < K; ++k)
            for (size_t i = 0; i < members[k].size(); ++i)
                for (size_t j = i + 1; j < members[k].size(); ++j)
                    if (rng.below(100) < 30)
                        edges.insert(std::minmax(members[k][i], members[k][j]));
        for (const auto& e : edges) graph.edges.push_back(e);
    }
    for (auto& members : graph.clusters) std::sort(members.begin(), members.end());
    return graph;
}

// All-pairs reachability via transitive closure over a boolean matrix;
// deliberately a different algorithm from the library's component labeling.
inline std::vector<std::vector<bool>> closure(int m,
                                              const std::vector<std::vector<bool>>& adj) {
    auto reach = adj;
    for (int v = 0; v < m; ++v) reach[v][v] = true;
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            if (reach[i][k])
                for (int j = 0; j < m; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    return reach;
}

// Brute-force taxonomy oracle from all-pairs reachability before and after
// removing the cluster's intra edges.
inline clustersync::ClusterClass oracle_classify(const clustersync::ClusteredGraph& graph,
                                                 int cluster_index) {
    const int m = graph.vertex_count;
    const auto& members = graph.clusters[cluster_index];
    std::vector<bool> in_cluster(m + 1, false);
    for (int v : members) in_cluster[v] = true;

    std::vector<std::vector<bool>> intra(m, std::vector<bool>(m, false));
    std::vector<std::vector<bool>> removed(m, std::vector<bool>(m, false));
    for (const auto& [a, b] : graph.edges) {
        if (in_cluster[a] && in_cluster[b]) {
            intra[a - 1][b - 1] = intra[b - 1][a - 1] = true;
        } else {
            removed[a - 1][b - 1] = removed[b - 1][a - 1] = true;
        }
    }
    const auto reach_intra = closure(m, intra);
    const auto reach_removed = closure(m, removed);
    bool intra_ok = true, inter_ok = true;
    for (int a : members)
        for (int b : members) {
            if (!reach_intra[a - 1][b - 1]) intra_ok = false;
            if (!reach_removed[a - 1][b - 1]) inter_ok = false;
        }
    using C = clustersync::ClusterClass;
    if (intra_ok && inter_ok) return C::Mixed;
    if (intra_ok) return C::SelfOrganized;
    if (inter_ok) return C::Driven;
    return C::Hybrid;
}

}  // namespace testsupport

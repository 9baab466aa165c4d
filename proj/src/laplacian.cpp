#include "clustersync/laplacian.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace clustersync {

WeightedLaplacian build_normalized_laplacian(const ClusteredGraph& graph) {
    const int m = graph.vertex_count;
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(m, m);
    for (int i = 1; i <= m; ++i) {
        for (int k = 0; k < graph.cluster_count(); ++k) {
            const auto nbrs = neighbors_in_cluster(graph, i, k);
            if (nbrs.empty()) continue;
            const double w = 1.0 / static_cast<double>(nbrs.size());
            for (int j : nbrs) L(i - 1, j - 1) = w;
        }
        L(i - 1, i - 1) = -L.row(i - 1).sum();
    }
    return {L, WeightedLaplacian::Kind::Normalized};
}

EdgeWeights normalized_weights(const ClusteredGraph& graph, double c) {
    EdgeWeights weights;
    const auto owner = graph.cluster_of();
    for (int i = 1; i <= graph.vertex_count; ++i) {
        for (int k = 0; k < graph.cluster_count(); ++k) {
            const auto nbrs = neighbors_in_cluster(graph, i, k);
            if (nbrs.empty()) continue;
            const double w = c / static_cast<double>(nbrs.size());
            for (int j : nbrs) weights[{i, j}] = w;
        }
    }
    return weights;
}

WeightedLaplacian build_general_laplacian(const ClusteredGraph& graph,
                                          const EdgeWeights& weights) {
    const int m = graph.vertex_count;
    std::set<std::pair<int, int>> directed;
    for (const auto& [a, b] : graph.edges) {
        directed.insert({a, b});
        directed.insert({b, a});
    }
    for (const auto& [pair, w] : weights) {
        (void)w;
        if (!directed.count(pair))
            throw std::invalid_argument("weight supplied for non-edge (" +
                                        std::to_string(pair.first) + "," +
                                        std::to_string(pair.second) + ")");
    }
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(m, m);
    for (const auto& pair : directed) {
        auto it = weights.find(pair);
        if (it == weights.end())
            throw std::invalid_argument("missing weight for edge (" +
                                        std::to_string(pair.first) + "," +
                                        std::to_string(pair.second) + ")");
        G(pair.first - 1, pair.second - 1) = it->second;
    }
    for (int i = 0; i < m; ++i) {
        G(i, i) = 0.0;
        G(i, i) = -G.row(i).sum();
    }
    return {G, WeightedLaplacian::Kind::General};
}

WeightedInvarianceReport check_weighted_invariance(const ClusteredGraph& graph,
                                                   const EdgeWeights& weights) {
    constexpr double tol = 1e-10;
    WeightedInvarianceReport report;
    auto weight_sum = [&](int i, int k) {
        double sum = 0.0;
        for (int j : neighbors_in_cluster(graph, i, k)) {
            auto it = weights.find({i, j});
            if (it != weights.end()) sum += it->second;
        }
        return sum;
    };
    for (int k = 0; k < graph.cluster_count(); ++k) {
        const auto& members = graph.clusters[k];
        for (int kp = 0; kp < graph.cluster_count(); ++kp) {
            if (kp == k) continue;
            const double ref = weight_sum(members.front(), kp);
            for (size_t idx = 1; idx < members.size(); ++idx) {
                const double sum = weight_sum(members[idx], kp);
                if (std::abs(sum - ref) > tol) {
                    report.ok = false;
                    report.violations.push_back(
                        {k, kp, members.front(), members[idx], ref, sum});
                }
            }
        }
    }
    return report;
}

}  // namespace clustersync

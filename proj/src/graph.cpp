#include "clustersync/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace clustersync {

std::vector<std::vector<int>> ClusteredGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (const auto& [a, b] : edges) {
        adj[a - 1].push_back(b);
        adj[b - 1].push_back(a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::vector<int> ClusteredGraph::cluster_of() const {
    std::vector<int> owner(vertex_count, -1);
    for (int k = 0; k < cluster_count(); ++k)
        for (int v : clusters[k]) owner[v - 1] = k;
    return owner;
}

ValidationReport validate(const ClusteredGraph& graph) {
    ValidationReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    const int m = graph.vertex_count;
    if (m < 1) fail("vertex count must be at least 1");

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : graph.edges) {
        if (a < 1 || a > m || b < 1 || b > m) {
            fail("edge {" + std::to_string(a) + "," + std::to_string(b) +
                 "} has an endpoint outside 1.." + std::to_string(m));
            continue;
        }
        if (a == b) {
            fail("self-loop at vertex " + std::to_string(a));
            continue;
        }
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            fail("duplicate edge {" + std::to_string(key.first) + "," +
                 std::to_string(key.second) + "}");
    }

    if (graph.clusters.empty()) fail("clustering must contain at least one cluster");
    std::vector<int> owner(std::max(m, 0), -1);
    for (int k = 0; k < graph.cluster_count(); ++k) {
        if (graph.clusters[k].empty())
            fail("cluster " + std::to_string(k + 1) + " is empty");
        for (int v : graph.clusters[k]) {
            if (v < 1 || v > m) {
                fail("cluster " + std::to_string(k + 1) + " lists vertex " +
                     std::to_string(v) + " outside 1.." + std::to_string(m));
                continue;
            }
            if (owner[v - 1] >= 0)
                fail("vertex " + std::to_string(v) + " in two clusters (" +
                     std::to_string(owner[v - 1] + 1) + " and " +
                     std::to_string(k + 1) + ")");
            else
                owner[v - 1] = k;
        }
    }
    for (int v = 1; v <= m; ++v)
        if (owner[v - 1] < 0) fail("vertex " + std::to_string(v) + " not in any cluster");

    return report;
}

namespace {

void require_vertex(const ClusteredGraph& graph, int vertex) {
    if (vertex < 1 || vertex > graph.vertex_count)
        throw std::out_of_range("vertex " + std::to_string(vertex) + " outside 1.." +
                                std::to_string(graph.vertex_count));
}

void require_cluster(const ClusteredGraph& graph, int cluster_index) {
    if (cluster_index < 0 || cluster_index >= graph.cluster_count())
        throw std::out_of_range("cluster index " + std::to_string(cluster_index) +
                                " outside 0.." + std::to_string(graph.cluster_count() - 1));
}

// Component label per vertex (vertex-1 indexed) over an arbitrary adjacency.
std::vector<int> component_labels(int m, const std::vector<std::vector<int>>& adj) {
    std::vector<int> label(m, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 1; s <= m; ++s) {
        if (label[s - 1] >= 0) continue;
        label[s - 1] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v - 1]) {
                if (label[w - 1] < 0) {
                    label[w - 1] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

}  // namespace

std::vector<int> neighbors_in_cluster(const ClusteredGraph& graph, int vertex,
                                      int cluster_index) {
    require_vertex(graph, vertex);
    require_cluster(graph, cluster_index);
    std::set<int> members(graph.clusters[cluster_index].begin(),
                          graph.clusters[cluster_index].end());
    std::vector<int> result;
    for (const auto& [a, b] : graph.edges) {
        if (a == vertex && members.count(b)) result.push_back(b);
        if (b == vertex && members.count(a)) result.push_back(a);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<int> inter_cluster_index_set(const ClusteredGraph& graph, int vertex) {
    require_vertex(graph, vertex);
    const auto owner = graph.cluster_of();
    const int own = owner[vertex - 1];
    std::set<int> foreign;
    for (const auto& [a, b] : graph.edges) {
        int other = -1;
        if (a == vertex) other = b;
        if (b == vertex) other = a;
        if (other > 0 && owner[other - 1] != own) foreign.insert(owner[other - 1]);
    }
    return {foreign.begin(), foreign.end()};
}

CommonInterClusterReport check_common_inter_cluster(const ClusteredGraph& graph) {
    CommonInterClusterReport report;
    for (int k = 0; k < graph.cluster_count(); ++k) {
        const auto& members = graph.clusters[k];
        if (members.size() < 2) continue;
        std::vector<std::vector<int>> sets;
        sets.reserve(members.size());
        for (int v : members) sets.push_back(inter_cluster_index_set(graph, v));
        const auto& ref = sets.front();
        for (size_t idx = 1; idx < members.size(); ++idx) {
            if (sets[idx] == ref) continue;
            report.ok = false;
            // Report every foreign cluster present on one side only.
            std::set<int> a(ref.begin(), ref.end());
            std::set<int> b(sets[idx].begin(), sets[idx].end());
            std::set<int> diff;
            for (int x : a)
                if (!b.count(x)) diff.insert(x);
            for (int x : b)
                if (!a.count(x)) diff.insert(x);
            for (int kp : diff)
                report.violations.push_back(
                    {k, members.front(), members[idx], kp});
        }
    }
    return report;
}

std::vector<std::vector<int>> connected_components(const ClusteredGraph& graph) {
    const auto labels = component_labels(graph.vertex_count, graph.adjacency());
    int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<int>> comps(count);
    for (int v = 1; v <= graph.vertex_count; ++v) comps[labels[v - 1]].push_back(v);
    // Labels are assigned in order of smallest contained vertex already;
    // each component list is ascending by construction.
    return comps;
}

SameComponentReport check_same_component(const ClusteredGraph& graph) {
    SameComponentReport report;
    const auto labels = component_labels(graph.vertex_count, graph.adjacency());
    for (const auto& members : graph.clusters) {
        bool same = true;
        for (int v : members)
            if (labels[v - 1] != labels[members.front() - 1]) same = false;
        report.per_cluster.push_back(same);
        if (!same) report.all_ok = false;
    }
    return report;
}

const char* to_string(ClusterClass c) {
    switch (c) {
        case ClusterClass::SelfOrganized: return "self-organized";
        case ClusterClass::Driven: return "driven";
        case ClusterClass::Mixed: return "mixed";
        case ClusterClass::Hybrid: return "hybrid";
    }
    return "unknown";
}

ClusterClass classify_cluster(const ClusteredGraph& graph, int cluster_index) {
    require_cluster(graph, cluster_index);
    const auto& members = graph.clusters[cluster_index];
    const int m = graph.vertex_count;
    std::vector<bool> in_cluster(m + 1, false);
    for (int v : members) in_cluster[v] = true;

    // Induced subgraph on the cluster.
    std::vector<std::vector<int>> intra(m);
    // Whole graph minus this cluster's intra-cluster edges.
    std::vector<std::vector<int>> removed(m);
    for (const auto& [a, b] : graph.edges) {
        const bool intra_edge = in_cluster[a] && in_cluster[b];
        if (intra_edge) {
            intra[a - 1].push_back(b);
            intra[b - 1].push_back(a);
        } else {
            removed[a - 1].push_back(b);
            removed[b - 1].push_back(a);
        }
    }

    auto all_members_together = [&](const std::vector<std::vector<int>>& adj) {
        const auto labels = component_labels(m, adj);
        for (int v : members)
            if (labels[v - 1] != labels[members.front() - 1]) return false;
        return true;
    };

    const bool intra_connected = all_members_together(intra);
    const bool inter_connected = all_members_together(removed);
    if (intra_connected && inter_connected) return ClusterClass::Mixed;
    if (intra_connected) return ClusterClass::SelfOrganized;
    if (inter_connected) return ClusterClass::Driven;
    return ClusterClass::Hybrid;
}

std::vector<ClusterClass> classify_clusters(const ClusteredGraph& graph) {
    std::vector<ClusterClass> classes;
    classes.reserve(graph.cluster_count());
    for (int k = 0; k < graph.cluster_count(); ++k)
        classes.push_back(classify_cluster(graph, k));
    return classes;
}

namespace {

bool forbidden_pair(ClusterClass a, ClusterClass b) {
    using C = ClusterClass;
    if (a > b) std::swap(a, b);
    if (a == C::SelfOrganized)
        return b == C::SelfOrganized || b == C::Mixed || b == C::Hybrid;
    return (a == C::Mixed && b == C::Hybrid) || (a == C::Hybrid && b == C::Mixed);
}

}  // namespace

CoexistenceReport check_coexistence(const std::vector<ClusterClass>& classes,
                                    const ClusteredGraph& graph) {
    CoexistenceReport report;
    if (connected_components(graph).size() != 1) {
        report.applicable = false;
        return report;
    }
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (forbidden_pair(classes[i], classes[j]))
                report.flagged_pairs.emplace_back(static_cast<int>(i),
                                                  static_cast<int>(j));
    return report;
}

}  // namespace clustersync

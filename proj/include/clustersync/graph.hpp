#pragma once

#include <string>
#include <utility>
#include <vector>

namespace clustersync {

/// Simple bi-directed graph together with a disjoint division of its
/// vertices into clusters. Vertex ids are 1-based and contiguous (1..m),
/// matching the on-disk format; cluster indices are 0-based in the API.
struct ClusteredGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;     // unordered pairs, stored (min,max)
    std::vector<std::vector<int>> clusters;     // C_1..C_K, disjoint, covering 1..m

    bool operator==(const ClusteredGraph&) const = default;

    int cluster_count() const { return static_cast<int>(clusters.size()); }

    /// Neighbor lists indexed by vertex-1, each sorted ascending.
    /// Requires a valid graph (in-range endpoints).
    std::vector<std::vector<int>> adjacency() const;

    /// Cluster index of each vertex, indexed by vertex-1.
    /// Requires a valid graph (every vertex in exactly one cluster).
    std::vector<int> cluster_of() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Diagnoses every violated ClusteredGraph invariant; never throws.
ValidationReport validate(const ClusteredGraph& graph);

/// N_{k'}(i): neighbors of `vertex` inside cluster `cluster_index`, sorted.
/// Throws std::out_of_range for an out-of-range vertex or cluster.
std::vector<int> neighbors_in_cluster(const ClusteredGraph& graph, int vertex,
                                      int cluster_index);

/// L^i_k: sorted indices of foreign clusters adjacent to `vertex`.
std::vector<int> inter_cluster_index_set(const ClusteredGraph& graph, int vertex);

struct CommonInterClusterViolation {
    int cluster;            // k: cluster whose members disagree
    int vertex_a;           // i
    int vertex_b;           // i'
    int differing_cluster;  // k': foreign cluster present for one but not the other
};

struct CommonInterClusterReport {
    bool ok = true;
    std::vector<CommonInterClusterViolation> violations;
};

/// Common inter-cluster coupling condition: within each cluster, every
/// vertex must link to the same set of foreign clusters.
CommonInterClusterReport check_common_inter_cluster(const ClusteredGraph& graph);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const ClusteredGraph& graph);

struct SameComponentReport {
    bool all_ok = true;
    std::vector<bool> per_cluster;
};

/// True per cluster iff all of its vertices lie in one connected component.
SameComponentReport check_same_component(const ClusteredGraph& graph);

enum class ClusterClass { SelfOrganized, Driven, Mixed, Hybrid };

const char* to_string(ClusterClass c);

/// Classifies a cluster by two communicability tests:
///   intra: is the induced subgraph on the cluster connected?
///   inter: do the cluster's vertices stay mutually reachable after removing
///          the cluster's own intra-cluster edges?
/// (intra, inter) -> (yes,no) SelfOrganized, (no,yes) Driven,
/// (yes,yes) Mixed, (no,no) Hybrid. Singleton clusters are Mixed.
ClusterClass classify_cluster(const ClusteredGraph& graph, int cluster_index);

std::vector<ClusterClass> classify_clusters(const ClusteredGraph& graph);

struct CoexistenceReport {
    bool applicable = true;  // false when the graph is disconnected
    std::vector<std::pair<int, int>> flagged_pairs;  // cluster index pairs, i < j
    bool consistent() const { return applicable && flagged_pairs.empty(); }
};

/// Advisory check of which class combinations can share a connected graph.
/// Flags every pair whose combination is impossible: SelfOrganized with
/// SelfOrganized, Hybrid or Mixed, and Hybrid with Mixed.
CoexistenceReport check_coexistence(const std::vector<ClusterClass>& classes,
                                    const ClusteredGraph& graph);

}  // namespace clustersync

#include "clustersync/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace clustersync {

Eigen::VectorXd left_perron_vector(const ClusteredGraph& graph,
                                   const WeightedLaplacian& laplacian) {
    const int m = graph.vertex_count;
    if (laplacian.size() != m)
        throw std::invalid_argument("Laplacian dimension does not match graph");
    Eigen::VectorXd d = Eigen::VectorXd::Zero(m);

    for (const auto& comp : connected_components(graph)) {
        const int s = static_cast<int>(comp.size());
        Eigen::MatrixXd sub(s, s);
        for (int r = 0; r < s; ++r)
            for (int c = 0; c < s; ++c)
                sub(r, c) = laplacian.entries(comp[r] - 1, comp[c] - 1);

        // Left null vector of the component block via SVD of L^T.
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub.transpose(), Eigen::ComputeFullV);
        Eigen::VectorXd v = svd.matrixV().col(s - 1);
        if (s > 1 && svd.singularValues()(s - 2) < 1e-12)
            throw std::runtime_error("left null space of Laplacian component is degenerate");
        if (v.cwiseAbs().maxCoeff() == 0.0)
            throw std::runtime_error("left Perron computation returned a zero vector");
        if (v.sum() < 0) v = -v;
        if (v.minCoeff() <= 0.0)
            throw std::runtime_error("left null vector of Laplacian is not sign-definite");

        v *= static_cast<double>(s) / v.sum();
        for (int r = 0; r < s; ++r) d(comp[r] - 1) = v(r);
    }

    const double residual = (d.transpose() * laplacian.entries).norm();
    if (residual > 1e-10)
        throw std::runtime_error("left Perron vector residual " +
                                 std::to_string(residual) + " exceeds 1e-10");
    return d;
}

TransverseBasis transverse_basis(const ClusteredGraph& graph,
                                 const Eigen::VectorXd& d) {
    const int m = graph.vertex_count;
    const int K = graph.cluster_count();
    if (d.size() != m) throw std::invalid_argument("d has wrong length");
    if (d.minCoeff() <= 0.0) throw std::invalid_argument("d must be positive");

    // The transverse space is the orthogonal complement of the d-weighted
    // cluster indicators; a full QR of those indicators yields it exactly.
    Eigen::MatrixXd indicators = Eigen::MatrixXd::Zero(m, K);
    for (int k = 0; k < K; ++k)
        for (int v : graph.clusters[k]) indicators(v - 1, k) = d(v - 1);

    Eigen::HouseholderQR<Eigen::MatrixXd> qr(indicators);
    Eigen::MatrixXd Q = qr.householderQ();
    TransverseBasis result;
    result.d = d;
    result.basis = Q.rightCols(m - K);
    return result;
}

const char* to_string(Definiteness v) {
    switch (v) {
        case Definiteness::NegativeDefinite: return "negative-definite";
        case Definiteness::NegativeSemidefinite: return "negative-semidefinite";
        case Definiteness::Indefinite: return "indefinite";
    }
    return "unknown";
}

DefinitenessResult check_restricted_definiteness(const Eigen::MatrixXd& M,
                                                 const TransverseBasis& basis,
                                                 double tol) {
    if (basis.dimension() == 0)
        return {Definiteness::NegativeDefinite,
                -std::numeric_limits<double>::infinity()};
    const Eigen::MatrixXd sym = 0.5 * (M + M.transpose());
    const Eigen::MatrixXd projected =
        basis.basis.transpose() * sym * basis.basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(projected);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("eigen decomposition failed");
    const double lambda = eig.eigenvalues().maxCoeff();
    DefinitenessResult result;
    result.lambda_max = lambda;
    if (lambda < -tol)
        result.verdict = Definiteness::NegativeDefinite;
    else if (lambda <= tol)
        result.verdict = Definiteness::NegativeSemidefinite;
    else
        result.verdict = Definiteness::Indefinite;
    return result;
}

bool check_cluster_sync_condition(const WeightedLaplacian& laplacian, double c,
                                  double alpha, const Eigen::VectorXd& d,
                                  const ClusteredGraph& graph, double tol) {
    const int m = graph.vertex_count;
    const Eigen::MatrixXd M =
        d.asDiagonal() *
        (c * laplacian.entries + alpha * Eigen::MatrixXd::Identity(m, m));
    const auto basis = transverse_basis(graph, d);
    const auto result = check_restricted_definiteness(M, basis, tol);
    return result.verdict != Definiteness::Indefinite;
}

namespace {

// Foreign clusters adjacent to cluster k (0-based), identical for every
// member under the common inter-cluster coupling condition.
std::set<int> cluster_neighborhood(const ClusteredGraph& graph, int k) {
    std::set<int> nbrs;
    for (int v : graph.clusters[k])
        for (int kp : inter_cluster_index_set(graph, v)) nbrs.insert(kp);
    return nbrs;
}

}  // namespace

TransverseWitness appendix_witness(const ClusteredGraph& graph,
                                   const Eigen::VectorXd& d) {
    const int m = graph.vertex_count;
    if (d.size() != m || d.minCoeff() <= 0.0)
        throw std::invalid_argument("d must be a positive vector of length m");

    const auto comps = connected_components(graph);
    std::vector<int> comp_of(m + 1, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

    // First cluster spanning at least two components.
    int split_cluster = -1;
    for (int k = 0; k < graph.cluster_count() && split_cluster < 0; ++k) {
        const auto& members = graph.clusters[k];
        for (int v : members)
            if (comp_of[v] != comp_of[members.front()]) {
                split_cluster = k;
                break;
            }
    }
    if (split_cluster < 0)
        throw std::invalid_argument(
            "appendix witness requires a cluster spanning two or more components");

    const auto& members = graph.clusters[split_cluster];
    const int comp1 = comp_of[members.front()];
    int comp2 = -1;
    for (int v : members)
        if (comp_of[v] != comp1) comp2 = comp_of[v];

    Eigen::VectorXd u = Eigen::VectorXd::Zero(m);
    const bool isolated = cluster_neighborhood(graph, split_cluster).empty();

    if (isolated) {
        // Two-level construction: u = alpha on the component-1 part of the
        // cluster, beta on the component-2 part, zero elsewhere, with
        // a*alpha + b*beta = 0.
        double a = 0.0, b = 0.0;
        for (int v : members) {
            if (comp_of[v] == comp1) a += d(v - 1);
            if (comp_of[v] == comp2) b += d(v - 1);
        }
        const double alpha = 1.0;
        const double beta = -a / b;
        for (int v : members) {
            if (comp_of[v] == comp1) u(v - 1) = alpha;
            if (comp_of[v] == comp2) u(v - 1) = beta;
        }
    } else {
        // Reduced construction: constant per (cluster, component half),
        // driven by the null vector of the cluster-level Laplacian.
        // Clusters present in either half coincide under the common
        // inter-cluster coupling condition.
        const auto owner = graph.cluster_of();
        auto clusters_in = [&](int comp) {
            std::set<int> present;
            for (int v : comps[comp]) present.insert(owner[v - 1]);
            return present;
        };
        const std::set<int> s1 = clusters_in(comp1);
        const std::set<int> s2 = clusters_in(comp2);
        if (s1 != s2)
            throw std::runtime_error(
                "witness construction needs the common inter-cluster coupling "
                "condition: the two components host different cluster sets");
        const std::vector<int> involved(s1.begin(), s1.end());
        const int K = static_cast<int>(involved.size());
        std::vector<int> slot(graph.cluster_count(), -1);
        for (int idx = 0; idx < K; ++idx) slot[involved[idx]] = idx;

        Eigen::VectorXd d1 = Eigen::VectorXd::Zero(K);
        Eigen::VectorXd d2 = Eigen::VectorXd::Zero(K);
        for (int idx = 0; idx < K; ++idx) {
            for (int v : graph.clusters[involved[idx]]) {
                if (comp_of[v] == comp1) d1(idx) += d(v - 1);
                if (comp_of[v] == comp2) d2(idx) += d(v - 1);
            }
            if (d1(idx) <= 0.0 || d2(idx) <= 0.0)
                throw std::runtime_error(
                    "witness construction expects every involved cluster to "
                    "intersect both components");
        }

        // v = (D1^-1 + D2^-1)^-1 e annihilates the cluster-level Laplacian,
        // making the reduced quadratic form vanish identically.
        Eigen::VectorXd v(K);
        for (int idx = 0; idx < K; ++idx)
            v(idx) = 1.0 / (1.0 / d1(idx) + 1.0 / d2(idx));
        const Eigen::VectorXd alpha_k = d1.cwiseInverse().cwiseProduct(v);
        const Eigen::VectorXd beta_k = -d2.cwiseInverse().cwiseProduct(v);

        for (int idx = 0; idx < K; ++idx) {
            for (int vtx : graph.clusters[involved[idx]]) {
                if (comp_of[vtx] == comp1) u(vtx - 1) = alpha_k(idx);
                if (comp_of[vtx] == comp2) u(vtx - 1) = beta_k(idx);
            }
        }
    }

    u.normalize();
    const auto laplacian = build_normalized_laplacian(graph);
    TransverseWitness witness;
    witness.u = u;
    witness.residual =
        std::abs(u.dot(d.asDiagonal() * (laplacian.entries * u)));

    // Transversality holds by construction; verify anyway.
    for (const auto& cluster : graph.clusters) {
        double sum = 0.0;
        for (int v : cluster) sum += d(v - 1) * u(v - 1);
        if (std::abs(sum) > 1e-9)
            throw std::runtime_error("witness construction produced a non-transverse vector");
    }
    if (witness.residual > 1e-9)
        throw std::runtime_error(
            "witness residual " + std::to_string(witness.residual) +
            " exceeds 1e-9; the reduction needs the common inter-cluster "
            "coupling condition");
    return witness;
}

}  // namespace clustersync

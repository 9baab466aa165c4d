#include "clustersync/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "clustersync/rng.hpp"

namespace clustersync {

namespace {

constexpr double kDivergenceBound = 1e6;

struct SampleRecorder {
    SimulationRun run;
    int m, n, weight_count;

    void record(double t, const Eigen::VectorXd& y) {
        run.times.push_back(t);
        Eigen::MatrixXd X(m, n);
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < n; ++c) X(i, c) = y(i * n + c);
        run.states.push_back(std::move(X));
        if (weight_count > 0) run.weights.push_back(y.tail(weight_count));
    }
};

bool within_bounds(const Eigen::VectorXd& y) {
    return y.allFinite() && y.cwiseAbs().maxCoeff() <= kDivergenceBound;
}

template <typename Deriv>
SimulationRun integrate(Deriv&& deriv, Eigen::VectorXd y, double T, double h,
                        int sample_every, int m, int n, int weight_count) {
    if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
    if (!(h > 0.0)) throw std::invalid_argument("h must be positive");
    if (sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");

    SampleRecorder rec{{}, m, n, weight_count};
    rec.run.step = h;
    rec.run.adaptive = weight_count > 0;

    const long steps = std::lround(T / h);
    Eigen::VectorXd k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size());
    Eigen::VectorXd scratch(y.size());

    rec.record(0.0, y);
    for (long s = 1; s <= steps; ++s) {
        deriv(y, k1);
        scratch = y + (0.5 * h) * k1;
        deriv(scratch, k2);
        scratch = y + (0.5 * h) * k2;
        deriv(scratch, k3);
        scratch = y + h * k3;
        deriv(scratch, k4);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double t = static_cast<double>(s) * h;
        if (!within_bounds(y)) {
            rec.run.status = RunStatus::Diverged;
            rec.run.diverged_at = t;
            return std::move(rec.run);
        }
        if (s % sample_every == 0) rec.record(t, y);
    }
    return std::move(rec.run);
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& X) {
    Eigen::VectorXd y(X.rows() * X.cols());
    for (int i = 0; i < X.rows(); ++i)
        for (int c = 0; c < X.cols(); ++c) y(i * X.cols() + c) = X(i, c);
    return y;
}

}  // namespace

std::vector<std::pair<int, int>> directed_edges(const ClusteredGraph& graph) {
    std::vector<std::pair<int, int>> out;
    out.reserve(2 * graph.edges.size());
    for (const auto& [a, b] : graph.edges) {
        out.emplace_back(a, b);
        out.emplace_back(b, a);
    }
    return out;
}

Eigen::MatrixXd cluster_average(const Eigen::MatrixXd& states,
                                const ClusteredGraph& graph,
                                const Eigen::VectorXd& d) {
    if (d.minCoeff() <= 0.0) throw std::invalid_argument("d must be positive");
    const int K = graph.cluster_count();
    Eigen::MatrixXd averages = Eigen::MatrixXd::Zero(K, states.cols());
    for (int k = 0; k < K; ++k) {
        double total = 0.0;
        for (int v : graph.clusters[k]) {
            averages.row(k) += d(v - 1) * states.row(v - 1);
            total += d(v - 1);
        }
        averages.row(k) /= total;
    }
    return averages;
}

SimulationRun simulate_fixed(const CoupledSystem& system, const Eigen::MatrixXd& x0,
                             double T, double h, int sample_every) {
    const auto* coupling = std::get_if<FixedCoupling>(&system.coupling);
    if (!coupling)
        throw std::invalid_argument("simulate_fixed needs a FixedCoupling system");
    const int m = system.graph.vertex_count;
    const int n = system.dynamics.dimension;
    if (x0.rows() != m || x0.cols() != n)
        throw std::invalid_argument("x0 must be m x n");
    if (coupling->laplacian.size() != m)
        throw std::invalid_argument("Laplacian dimension does not match graph");
    if (!x0.allFinite()) throw std::invalid_argument("x0 must be finite");

    const auto owner = system.graph.cluster_of();
    const Eigen::MatrixXd& L = coupling->laplacian.entries;
    const Eigen::MatrixXd& gamma = system.dynamics.gamma;
    const double c = coupling->c;

    Eigen::MatrixXd X(m, n), D(m, n);
    Eigen::VectorXd node(n), dnode(n);
    auto deriv = [&](const Eigen::VectorXd& y, Eigen::VectorXd& dy) {
        for (int i = 0; i < m; ++i)
            for (int col = 0; col < n; ++col) X(i, col) = y(i * n + col);
        for (int i = 0; i < m; ++i) {
            node = X.row(i).transpose();
            system.dynamics.fields[owner[i]](node, dnode);
            D.row(i) = dnode.transpose();
        }
        D.noalias() += c * (L * X) * gamma;
        for (int i = 0; i < m; ++i)
            for (int col = 0; col < n; ++col) dy(i * n + col) = D(i, col);
    };

    auto run = integrate(deriv, flatten(x0), T, h, sample_every, m, n, 0);
    return run;
}

SimulationRun simulate_adaptive(const CoupledSystem& system,
                                const Eigen::MatrixXd& x0,
                                const Eigen::VectorXd& w0, double T, double h,
                                int sample_every) {
    const auto* coupling = std::get_if<AdaptiveCoupling>(&system.coupling);
    if (!coupling)
        throw std::invalid_argument("simulate_adaptive needs an AdaptiveCoupling system");
    const int m = system.graph.vertex_count;
    const int n = system.dynamics.dimension;
    const auto edges = directed_edges(system.graph);
    const int ne = static_cast<int>(edges.size());
    if (x0.rows() != m || x0.cols() != n)
        throw std::invalid_argument("x0 must be m x n");
    if (w0.size() != ne)
        throw std::invalid_argument("w0 must have one entry per directed edge");
    if (coupling->rho.size() != ne)
        throw std::invalid_argument("rho must have one entry per directed edge");
    if (coupling->rho.minCoeff() <= 0.0)
        throw std::invalid_argument("adaptive gains must be positive");
    if (coupling->d.size() != m || coupling->d.minCoeff() <= 0.0)
        throw std::invalid_argument("d must be a positive vector of length m");

    const auto owner = system.graph.cluster_of();
    const Eigen::MatrixXd& gamma = system.dynamics.gamma;
    const Eigen::VectorXd& d = coupling->d;
    const Eigen::VectorXd& rho = coupling->rho;

    // Cluster-sum weights for the d-weighted averages.
    const int K = system.graph.cluster_count();
    Eigen::VectorXd cluster_total = Eigen::VectorXd::Zero(K);
    for (int i = 0; i < m; ++i) cluster_total(owner[i]) += d(i);

    Eigen::MatrixXd X(m, n), D(m, n), avg(K, n);
    Eigen::VectorXd node(n), dnode(n), diff(n), gdiff(n), trans(n);
    auto deriv = [&](const Eigen::VectorXd& y, Eigen::VectorXd& dy) {
        for (int i = 0; i < m; ++i)
            for (int col = 0; col < n; ++col) X(i, col) = y(i * n + col);

        // The average is an algebraic function of the state, so it is
        // re-evaluated inside every stage.
        avg.setZero();
        for (int i = 0; i < m; ++i) avg.row(owner[i]) += d(i) * X.row(i);
        for (int k = 0; k < K; ++k) avg.row(k) /= cluster_total(k);

        for (int i = 0; i < m; ++i) {
            node = X.row(i).transpose();
            system.dynamics.fields[owner[i]](node, dnode);
            D.row(i) = dnode.transpose();
        }
        for (int e = 0; e < ne; ++e) {
            const int i = edges[e].first - 1;
            const int j = edges[e].second - 1;
            const double w = y(m * n + e);
            diff = (X.row(i) - X.row(j)).transpose();
            gdiff.noalias() = gamma * diff;
            D.row(i) -= w * gdiff.transpose();
            trans = (X.row(i) - avg.row(owner[i])).transpose();
            dy(m * n + e) = rho(e) * d(i) * trans.dot(gdiff);
        }
        for (int i = 0; i < m; ++i)
            for (int col = 0; col < n; ++col) dy(i * n + col) = D(i, col);
    };

    Eigen::VectorXd y0(m * n + ne);
    y0.head(m * n) = flatten(x0);
    y0.tail(ne) = w0;
    auto run = integrate(deriv, y0, T, h, sample_every, m, n, ne);
    run.edge_order = edges;
    return run;
}

Box attractor_box(const SimulationRun& run, double pad_frac) {
    if (run.states.empty()) throw std::invalid_argument("run has no samples");
    const int n = static_cast<int>(run.states.front().cols());
    Box box;
    box.lo = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
    box.hi = Eigen::VectorXd::Constant(n, -std::numeric_limits<double>::infinity());
    for (const auto& X : run.states) {
        for (int c = 0; c < n; ++c) {
            box.lo(c) = std::min(box.lo(c), X.col(c).minCoeff());
            box.hi(c) = std::max(box.hi(c), X.col(c).maxCoeff());
        }
    }
    return box.padded(pad_frac);
}

Eigen::MatrixXd random_states(int m, int n, double lo, double hi, std::uint64_t seed) {
    SplitMix64 rng = substream(seed, 0);
    Eigen::MatrixXd X(m, n);
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < n; ++c) X(i, c) = rng.uniform(lo, hi);
    return X;
}

Eigen::VectorXd random_weights(int count, double lo, double hi, std::uint64_t seed) {
    SplitMix64 rng = substream(seed, 1);
    Eigen::VectorXd w(count);
    for (int e = 0; e < count; ++e) w(e) = rng.uniform(lo, hi);
    return w;
}

}  // namespace clustersync

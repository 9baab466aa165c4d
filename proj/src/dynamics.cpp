#include "clustersync/dynamics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "clustersync/rng.hpp"

namespace clustersync {

void eval_lorenz(double b, const Eigen::VectorXd& u, Eigen::VectorXd& out) {
    out.resize(3);
    out(0) = 10.0 * (u(1) - u(0));
    out(1) = (8.0 / 3.0) * u(0) - u(1) - u(0) * u(2);
    out(2) = u(0) * u(1) - b * u(2);
}

VectorField lorenz_field(double b) {
    return [b](const Eigen::VectorXd& u, Eigen::VectorXd& out) {
        eval_lorenz(b, u, out);
    };
}

namespace {

std::map<std::string, FieldFactory>& field_registry() {
    static std::map<std::string, FieldFactory> registry = {
        {"lorenz", [](const std::vector<double>& params) {
             if (params.size() != 1)
                 throw std::invalid_argument("lorenz field expects one parameter b");
             if (params[0] <= 0.0)
                 throw std::invalid_argument("lorenz parameter b must be positive");
             return lorenz_field(params[0]);
         }}};
    return registry;
}

}  // namespace

void register_field_type(const std::string& name, FieldFactory factory) {
    field_registry()[name] = std::move(factory);
}

VectorField make_field(const std::string& name, const std::vector<double>& params) {
    auto it = field_registry().find(name);
    if (it == field_registry().end())
        throw std::invalid_argument("unknown field type '" + name + "'");
    return it->second(params);
}

NodeDynamics lorenz_dynamics(const std::vector<double>& b_values,
                             const Eigen::VectorXd& gamma_diag) {
    NodeDynamics dynamics;
    dynamics.dimension = 3;
    for (double b : b_values) dynamics.fields.push_back(make_field("lorenz", {b}));
    dynamics.gamma = gamma_diag.asDiagonal();
    return dynamics;
}

ValidationReport validate_dynamics(const NodeDynamics& dynamics, int cluster_count) {
    ValidationReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    if (static_cast<int>(dynamics.fields.size()) != cluster_count)
        fail("expected one field per cluster (" + std::to_string(cluster_count) +
             "), got " + std::to_string(dynamics.fields.size()));
    if (dynamics.gamma.rows() != dynamics.dimension ||
        dynamics.gamma.cols() != dynamics.dimension)
        fail("gamma must be n x n with n = " + std::to_string(dynamics.dimension));
    else {
        if ((dynamics.gamma - dynamics.gamma.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            fail("gamma is not symmetric");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
            0.5 * (dynamics.gamma + dynamics.gamma.transpose()));
        if (eig.eigenvalues().minCoeff() < -1e-12)
            fail("gamma has a negative eigenvalue: " +
                 std::to_string(eig.eigenvalues().minCoeff()));
    }
    return report;
}

Box Box::padded(double frac) const {
    Box out = *this;
    for (int c = 0; c < dimension(); ++c) {
        const double width = hi(c) - lo(c);
        out.lo(c) -= frac * width;
        out.hi(c) += frac * width;
    }
    return out;
}

Box default_lorenz_box() {
    Box box;
    box.lo = Eigen::VectorXd::Constant(3, -60.0);
    box.hi = Eigen::VectorXd::Constant(3, 60.0);
    return box;
}

namespace {

Eigen::VectorXd uniform_point(SplitMix64& rng, const Box& box) {
    Eigen::VectorXd p(box.dimension());
    for (int c = 0; c < box.dimension(); ++c) p(c) = rng.uniform(box.lo(c), box.hi(c));
    return p;
}

Eigen::VectorXd clamp_to(const Eigen::VectorXd& p, const Box& box) {
    return p.cwiseMax(box.lo).cwiseMin(box.hi);
}

// Direction on the unit sphere via normalized Gaussian coordinates
// (Box-Muller on SplitMix64 uniforms).
Eigen::VectorXd random_direction(SplitMix64& rng, int n) {
    Eigen::VectorXd dir(n);
    for (int c = 0; c < n; ++c) {
        const double u1 = rng.uniform(1e-12, 1.0);
        const double u2 = rng.uniform(0.0, 1.0);
        dir(c) = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    const double norm = dir.norm();
    return norm > 0 ? Eigen::VectorXd(dir / norm) : Eigen::VectorXd::Unit(n, 0);
}

struct PairScan {
    double worst_ratio = -std::numeric_limits<double>::infinity();
    int violations = 0;  // pairs breaking the condition at a fixed alpha
};

// Visits sampled (xi, zeta) pairs and folds in the ratio
//   [ (xi-zeta)^T (f(xi)-f(zeta)) + delta |xi-zeta|^2 ] / (xi-zeta)^T Gamma (xi-zeta)
// for every cluster field, i.e. the smallest alpha valid for that pair.
// Pairs separated along a Gamma-null direction get no help from alpha, so
// those are probed explicitly and must pass on their own.
PairScan scan_pairs(const NodeDynamics& dynamics, const Box& region, double delta,
                    int sample_count, std::uint64_t seed, double alpha_check,
                    bool counting) {
    PairScan scan;
    const int n = region.dimension();
    SplitMix64 bulk = substream(seed, 0);
    SplitMix64 close = substream(seed, 1);
    SplitMix64 nulls = substream(seed, 2);
    Eigen::VectorXd fxi(n), fzeta(n);

    auto fold_pair = [&](const Eigen::VectorXd& xi, const Eigen::VectorXd& zeta) {
        const Eigen::VectorXd e = xi - zeta;
        const double ee = e.squaredNorm();
        if (ee == 0.0) return;
        const double gamma_quad = e.dot(dynamics.gamma * e);
        for (const auto& field : dynamics.fields) {
            field(xi, fxi);
            field(zeta, fzeta);
            const double numerator = e.dot(fxi - fzeta) + delta * ee;
            if (gamma_quad > 1e-12 * ee) {
                const double ratio = numerator / gamma_quad;
                scan.worst_ratio = std::max(scan.worst_ratio, ratio);
                if (counting && numerator - alpha_check * gamma_quad > 1e-9 * ee)
                    ++scan.violations;
            } else if (numerator > 1e-9 * ee) {
                if (counting)
                    ++scan.violations;
                else {
                    std::ostringstream msg;
                    msg << "decreasing condition is unbounded along a "
                           "Gamma-null direction: numerator "
                        << numerator << " at separation " << std::sqrt(ee);
                    throw std::runtime_error(msg.str());
                }
            }
        }
    };

    for (int s = 0; s < sample_count; ++s) {
        if (s % 2 == 0) {
            fold_pair(uniform_point(bulk, region), uniform_point(bulk, region));
        } else {
            // Pairs concentrated at small separations, where the quotient is
            // governed by the local Jacobian.
            const Eigen::VectorXd zeta = uniform_point(close, region);
            const double radius =
                std::exp(close.uniform(std::log(1e-3), std::log(1.0)));
            fold_pair(clamp_to(zeta + radius * random_direction(close, n), region),
                      zeta);
        }
    }

    // Null directions of Gamma, probed without clamping so the separation
    // stays exactly in the null space.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gamma_eig(
        0.5 * (dynamics.gamma + dynamics.gamma.transpose()));
    for (int col = 0; col < n; ++col) {
        if (std::abs(gamma_eig.eigenvalues()(col)) > 1e-12) continue;
        const Eigen::VectorXd direction = gamma_eig.eigenvectors().col(col);
        const int probes = std::max(100, sample_count / 20);
        for (int s = 0; s < probes; ++s) {
            const Eigen::VectorXd zeta = uniform_point(nulls, region);
            double radius =
                std::exp(nulls.uniform(std::log(1e-3), std::log(1.0)));
            for (int c = 0; c < n; ++c) {
                if (direction(c) > 1e-15)
                    radius = std::min(radius, (region.hi(c) - zeta(c)) / direction(c));
                if (direction(c) < -1e-15)
                    radius = std::min(radius, (region.lo(c) - zeta(c)) / direction(c));
            }
            if (radius <= 0.0) continue;
            fold_pair(zeta + radius * direction, zeta);
        }
    }
    return scan;
}

}  // namespace

DecreasingEstimate estimate_alpha(const NodeDynamics& dynamics, const Box& region,
                                  int sample_count, std::uint64_t seed,
                                  double delta) {
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
    if (dynamics.fields.empty())
        throw std::invalid_argument("dynamics must define at least one field");
    const auto scan =
        scan_pairs(dynamics, region, delta, sample_count, seed, 0.0, false);

    DecreasingEstimate estimate;
    if (!std::isfinite(scan.worst_ratio)) {
        // Every sampled pair fell in a Gamma-null direction and passed; any
        // alpha works.
        estimate.alpha = estimate.alpha_raw = 0.0;
        estimate.delta = delta;
        estimate.region = region;
        return estimate;
    }
    estimate.alpha_raw = scan.worst_ratio;
    // Safety margin: push the estimate 10% further to the safe (larger) side.
    estimate.alpha = scan.worst_ratio >= 0.0 ? 1.1 * scan.worst_ratio
                                             : 0.9 * scan.worst_ratio;
    estimate.delta = delta;
    estimate.region = region;
    return estimate;
}

int count_decreasing_violations(const NodeDynamics& dynamics, const Box& region,
                                double alpha, double delta, int sample_count,
                                std::uint64_t seed) {
    return scan_pairs(dynamics, region, delta, sample_count, seed, alpha, true)
        .violations;
}

Eigen::VectorXd rk4_step(const DerivFn& field, const Eigen::VectorXd& x, double h) {
    Eigen::VectorXd k1(x.size()), k2(x.size()), k3(x.size()), k4(x.size());
    field(x, k1);
    field(x + (0.5 * h) * k1, k2);
    field(x + (0.5 * h) * k2, k3);
    field(x + h * k3, k4);
    Eigen::VectorXd next = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.allFinite())
        throw std::runtime_error("non-finite values in derivative evaluation");
    return next;
}

}  // namespace clustersync

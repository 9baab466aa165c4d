#include "clustersync/report.hpp"

#include <json.hpp>

#include <sstream>

namespace clustersync {

using nlohmann::json;

namespace {

json to_json(const RunSummary& run) {
    json j;
    j["mode"] = run.mode;
    j["seed"] = run.seed;
    j["c"] = run.c;
    j["rho"] = run.rho;
    j["status"] = run.status;
    j["diverged_at"] = run.diverged_at;
    if (run.var) j["var"] = *run.var;
    if (run.final_k) j["final_k"] = *run.final_k;
    if (run.min_dis) j["min_dis"] = *run.min_dis;
    if (run.intra_weights_converged)
        j["intra_weights_converged"] = *run.intra_weights_converged;
    return j;
}

RunSummary run_from_json(const json& j) {
    RunSummary run;
    run.mode = j.at("mode").get<std::string>();
    run.seed = j.at("seed").get<std::uint64_t>();
    run.c = j.at("c").get<double>();
    run.rho = j.at("rho").get<double>();
    run.status = j.at("status").get<std::string>();
    run.diverged_at = j.at("diverged_at").get<double>();
    if (j.contains("var")) run.var = j["var"].get<double>();
    if (j.contains("final_k")) run.final_k = j["final_k"].get<double>();
    if (j.contains("min_dis")) run.min_dis = j["min_dis"].get<double>();
    if (j.contains("intra_weights_converged"))
        run.intra_weights_converged = j["intra_weights_converged"].get<bool>();
    return run;
}

}  // namespace

std::string to_json_string(const SyncReport& report) {
    json j;
    j["graph_path"] = report.graph_path;
    j["vertex_count"] = report.vertex_count;
    j["cluster_count"] = report.cluster_count;
    j["valid"] = report.valid;
    j["validation_violations"] = report.validation_violations;
    j["common_inter_cluster"] = report.common_inter_cluster;
    j["same_component"] = report.same_component;
    j["same_component_per_cluster"] = report.same_component_per_cluster;
    j["cluster_classes"] = report.cluster_classes;
    j["coexistence_applicable"] = report.coexistence_applicable;
    json flags = json::array();
    for (const auto& [a, b] : report.coexistence_flags) flags.push_back({a, b});
    j["coexistence_flags"] = flags;
    if (report.cs_fixed) j["cs_fixed"] = *report.cs_fixed;
    if (report.cs_best) j["cs_best"] = *report.cs_best;
    if (report.alpha) j["alpha"] = *report.alpha;
    if (report.c_min) j["c_min"] = *report.c_min;
    if (!report.d_best.empty()) j["d_best"] = report.d_best;
    json runs = json::array();
    for (const auto& run : report.runs) runs.push_back(to_json(run));
    j["runs"] = runs;
    return j.dump(2) + "\n";
}

SyncReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    SyncReport report;
    report.graph_path = j.at("graph_path").get<std::string>();
    report.vertex_count = j.at("vertex_count").get<int>();
    report.cluster_count = j.at("cluster_count").get<int>();
    report.valid = j.at("valid").get<bool>();
    report.validation_violations =
        j.at("validation_violations").get<std::vector<std::string>>();
    report.common_inter_cluster = j.at("common_inter_cluster").get<bool>();
    report.same_component = j.at("same_component").get<bool>();
    report.same_component_per_cluster =
        j.at("same_component_per_cluster").get<std::vector<bool>>();
    report.cluster_classes = j.at("cluster_classes").get<std::vector<std::string>>();
    report.coexistence_applicable = j.at("coexistence_applicable").get<bool>();
    for (const auto& pair : j.at("coexistence_flags"))
        report.coexistence_flags.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    if (j.contains("cs_fixed")) report.cs_fixed = j["cs_fixed"].get<double>();
    if (j.contains("cs_best")) report.cs_best = j["cs_best"].get<double>();
    if (j.contains("alpha")) report.alpha = j["alpha"].get<double>();
    if (j.contains("c_min")) report.c_min = j["c_min"].get<double>();
    if (j.contains("d_best")) report.d_best = j["d_best"].get<std::vector<double>>();
    for (const auto& run : j.at("runs")) report.runs.push_back(run_from_json(run));
    return report;
}

std::string to_text(const SyncReport& report) {
    std::ostringstream out;
    out << "graph: " << report.graph_path << " (m=" << report.vertex_count
        << ", K=" << report.cluster_count << ")\n";
    if (!report.valid) {
        out << "INVALID GRAPH:\n";
        for (const auto& v : report.validation_violations) out << "  - " << v << "\n";
        return out.str();
    }
    out << "common inter-cluster coupling condition: "
        << (report.common_inter_cluster ? "satisfied" : "VIOLATED") << "\n";
    out << "clusters confined to one component: "
        << (report.same_component ? "yes" : "NO");
    if (!report.same_component) {
        out << " (failing:";
        for (size_t k = 0; k < report.same_component_per_cluster.size(); ++k)
            if (!report.same_component_per_cluster[k]) out << " " << k + 1;
        out << ")";
    }
    out << "\n";
    for (size_t k = 0; k < report.cluster_classes.size(); ++k)
        out << "cluster " << k + 1 << ": " << report.cluster_classes[k] << "\n";
    if (!report.coexistence_applicable)
        out << "coexistence table: not applicable (graph disconnected)\n";
    else if (report.coexistence_flags.empty())
        out << "coexistence table: consistent\n";
    else {
        out << "coexistence table: flagged pairs";
        for (const auto& [a, b] : report.coexistence_flags)
            out << " (" << a << "," << b << ")";
        out << "\n";
    }
    if (report.cs_fixed) out << "cs_fixed: " << *report.cs_fixed << "\n";
    if (report.cs_best) out << "cs_best:  " << *report.cs_best << "\n";
    if (report.alpha) out << "alpha:    " << *report.alpha << "\n";
    if (report.c_min) out << "c_min:    " << *report.c_min << "\n";
    for (const auto& run : report.runs) {
        out << "run[" << run.mode << ", seed=" << run.seed;
        if (run.mode == "fixed") out << ", c=" << run.c;
        if (run.mode == "adaptive") out << ", rho=" << run.rho;
        out << "]: " << run.status;
        if (run.var) out << ", var=" << *run.var;
        if (run.final_k) out << ", K(end)=" << *run.final_k;
        if (run.min_dis) out << ", min dis=" << *run.min_dis;
        if (run.intra_weights_converged)
            out << ", intra weights "
                << (*run.intra_weights_converged ? "converged" : "NOT converged");
        out << "\n";
    }
    return out.str();
}

}  // namespace clustersync

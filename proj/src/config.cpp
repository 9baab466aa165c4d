#include "clustersync/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "clustersync/graph_io.hpp"

namespace clustersync {

using nlohmann::json;

RunConfig parse_run_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("config: ") + err.what());
    }
    if (!doc.is_object()) throw ParseError("config: top level must be an object");

    RunConfig config;
    try {
        if (!doc.contains("graph")) throw ParseError("field 'graph': missing");
        config.graph_path = doc["graph"].get<std::string>();
        if (doc.contains("dynamics")) {
            const auto& dyn = doc["dynamics"];
            if (dyn.contains("type")) config.dynamics_type = dyn["type"].get<std::string>();
            if (dyn.contains("b")) config.b = dyn["b"].get<std::vector<double>>();
        }
        if (doc.contains("gamma") && doc["gamma"].contains("diag"))
            config.gamma_diag = doc["gamma"]["diag"].get<std::vector<double>>();
        if (doc.contains("mode")) config.mode = doc["mode"].get<std::string>();
        if (doc.contains("c")) config.c = doc["c"].get<double>();
        if (doc.contains("rho")) config.rho = doc["rho"].get<double>();
        if (doc.contains("x0_range"))
            config.x0_range = doc["x0_range"].get<std::array<double, 2>>();
        if (doc.contains("w0_range"))
            config.w0_range = doc["w0_range"].get<std::array<double, 2>>();
        if (doc.contains("T")) config.T = doc["T"].get<double>();
        if (doc.contains("h")) config.h = doc["h"].get<double>();
        if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("sample_every"))
            config.sample_every = doc["sample_every"].get<int>();
        if (doc.contains("out")) config.out_dir = doc["out"].get<std::string>();
    } catch (const json::exception& err) {
        throw ParseError(std::string("config: ") + err.what());
    }

    if (config.mode != "fixed" && config.mode != "adaptive")
        throw ParseError("field 'mode': must be \"fixed\" or \"adaptive\"");
    if (config.mode == "fixed" && !config.c)
        throw ParseError("field 'c': required in fixed mode");
    if (!(config.T > 0.0)) throw ParseError("field 'T': must be positive");
    if (!(config.h > 0.0)) throw ParseError("field 'h': must be positive");
    if (config.sample_every < 1)
        throw ParseError("field 'sample_every': must be at least 1");
    if (!(config.rho > 0.0)) throw ParseError("field 'rho': must be positive");
    return config;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_run_config(buffer.str());
    } catch (const ParseError& err) {
        throw ParseError(path + ": " + err.what());
    }
}

std::string serialize_run_config(const RunConfig& config) {
    json doc;
    doc["graph"] = config.graph_path;
    doc["dynamics"] = {{"type", config.dynamics_type}, {"b", config.b}};
    doc["gamma"] = {{"diag", config.gamma_diag}};
    doc["mode"] = config.mode;
    if (config.c) doc["c"] = *config.c;
    doc["rho"] = config.rho;
    doc["x0_range"] = config.x0_range;
    doc["w0_range"] = config.w0_range;
    doc["T"] = config.T;
    doc["h"] = config.h;
    doc["seed"] = config.seed;
    doc["sample_every"] = config.sample_every;
    if (!config.out_dir.empty()) doc["out"] = config.out_dir;
    return doc.dump(2) + "\n";
}

}  // namespace clustersync

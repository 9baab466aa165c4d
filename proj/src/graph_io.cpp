#include "clustersync/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace clustersync {

using nlohmann::json;

namespace {

int line_of_byte(const std::string& text, size_t byte) {
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

int require_int(const json& value, const std::string& field) {
    if (!value.is_number_integer())
        throw ParseError("field '" + field + "': expected an integer, got " +
                         std::string(value.type_name()));
    return value.get<int>();
}

}  // namespace

ClusteredGraph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError("line " + std::to_string(line_of_byte(text, err.byte)) +
                         ": " + err.what());
    }
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    for (const auto& field : {"m", "edges", "clusters"})
        if (!doc.contains(field))
            throw ParseError(std::string("field '") + field + "': missing");

    ClusteredGraph graph;
    graph.vertex_count = require_int(doc["m"], "m");

    const json& edges = doc["edges"];
    if (!edges.is_array()) throw ParseError("field 'edges': expected a list");
    for (size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 2)
            throw ParseError("field '" + where + "': expected a pair of integers");
        int a = require_int(e[0], where);
        int b = require_int(e[1], where);
        graph.edges.push_back(std::minmax(a, b));
    }

    const json& clusters = doc["clusters"];
    if (!clusters.is_array()) throw ParseError("field 'clusters': expected a list");
    for (size_t k = 0; k < clusters.size(); ++k) {
        const std::string where = "clusters[" + std::to_string(k) + "]";
        const json& c = clusters[k];
        if (!c.is_array())
            throw ParseError("field '" + where + "': expected a list of integers");
        std::vector<int> members;
        for (size_t i = 0; i < c.size(); ++i)
            members.push_back(require_int(c[i], where + "[" + std::to_string(i) + "]"));
        graph.clusters.push_back(std::move(members));
    }
    return graph;
}

ClusteredGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_graph(buffer.str());
    } catch (const ParseError& err) {
        throw ParseError(path + ": " + err.what());
    }
}

std::string serialize_graph(const ClusteredGraph& graph) {
    json doc;
    doc["m"] = graph.vertex_count;
    json edges = json::array();
    for (const auto& [a, b] : graph.edges) edges.push_back({a, b});
    doc["edges"] = edges;
    json clusters = json::array();
    for (const auto& members : graph.clusters) clusters.push_back(members);
    doc["clusters"] = clusters;
    return doc.dump(2) + "\n";
}

void save_graph(const ClusteredGraph& graph, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << serialize_graph(graph);
}

}  // namespace clustersync

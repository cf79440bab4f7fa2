#include "kempe/io.hpp"

#include <ostream>

#include "kempe/error.hpp"

namespace kempe::io {

namespace {

int require_int(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
        throw InputError(std::string("expected integer field \"") + key + "\"");
    }
    return j.at(key).get<int>();
}

} // namespace

json colouring_to_json(const Colouring& c)
{
    json colours = json::array();
    for (Colour x : c.colours()) {
        colours.push_back(x + 1);
    }
    return {{"k", c.k()}, {"colours", colours}};
}

Colouring colouring_from_json(const json& j)
{
    const int k = require_int(j, "k");
    if (!j.contains("colours") || !j.at("colours").is_array()) {
        throw InputError("expected array field \"colours\"");
    }
    std::vector<Colour> colours;
    for (const json& entry : j.at("colours")) {
        if (!entry.is_number_integer()) {
            throw InputError("colours must be integers");
        }
        const int c = entry.get<int>();
        if (c < 1 || c > k) {
            throw InputError("colour " + std::to_string(c) + " outside 1.." + std::to_string(k));
        }
        colours.push_back(c - 1);
    }
    return Colouring(k, std::move(colours));
}

json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"n", g.order()}, {"edges", edges}};
}

json graph_file_to_json(const GraphFile& file)
{
    json j = graph_to_json(file.graph);
    if (!file.colourings.empty()) {
        json named = json::object();
        for (const auto& [name, c] : file.colourings) {
            named[name] = colouring_to_json(c);
        }
        j["colourings"] = named;
    }
    return j;
}

GraphFile graph_file_from_json(const json& j)
{
    const int n = require_int(j, "n");
    if (n < 1) {
        throw InputError("a graph file needs n >= 1");
    }
    if (!j.contains("edges") || !j.at("edges").is_array()) {
        throw InputError("expected array field \"edges\"");
    }
    std::vector<Edge> edges;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InputError("each edge must be a pair of integers");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    GraphFile file{Graph(n, edges), {}};
    if (j.contains("colourings")) {
        if (!j.at("colourings").is_object()) {
            throw InputError("\"colourings\" must be an object");
        }
        for (const auto& [name, value] : j.at("colourings").items()) {
            Colouring c = colouring_from_json(value);
            if (c.size() != static_cast<std::size_t>(n)) {
                throw InputError("colouring \"" + name + "\" has the wrong length");
            }
            file.colourings.emplace(name, std::move(c));
        }
    }
    return file;
}

GraphFile family_to_graph_file(const FamilyInstance& family)
{
    GraphFile file{family.graph, {}};
    for (const auto& [name, c] : family.colourings) {
        file.colourings.emplace(name, c);
    }
    return file;
}

json report_to_json(const KempeClassReport& report)
{
    json classes = json::array();
    for (const KempeClass& cls : report.classes) {
        classes.push_back({{"size", cls.size}, {"representative", colouring_to_json(cls.representative)}});
    }
    return {{"k", report.k},
            {"total_colourings", report.total_colourings},
            {"class_count", report.classes.size()},
            {"classes", classes},
            {"cap_hit", report.cap_hit}};
}

json checks_to_json(const CertificateChecks& checks)
{
    return {{"same_k", checks.same_k},
            {"frozen_proper", checks.frozen_proper},
            {"witness_proper", checks.witness_proper},
            {"frozen_kempe_frozen", checks.frozen_is_kempe_frozen},
            {"partitions_differ", checks.partitions_differ}};
}

json certificate_to_json(const NotKempeClassCertificate& cert)
{
    return {{"k", cert.k},
            {"frozen", colouring_to_json(cert.frozen_colouring)},
            {"witness", colouring_to_json(cert.witness_colouring)},
            {"checks", checks_to_json(cert.checks)}};
}

json census_to_json(const CensusReport& report)
{
    json members = json::array();
    for (const Graph& g : report.group3_members) {
        members.push_back(graph_to_json(g));
    }
    return {{"n", report.n},
            {"total", report.total_classes},
            {"group1", report.group1},
            {"group2", report.group2},
            {"group3", report.group3},
            {"group3_members", members}};
}

json op2k2_result_to_json(const Op2K2Result& result)
{
    json j = graph_to_json(result.graph);
    j["case"] = static_cast<int>(result.which);
    j["colourings"] = {{"beta_prime", colouring_to_json(result.beta_prime)},
                       {"gamma_prime", colouring_to_json(result.gamma_prime)}};
    return j;
}

json candidate_to_json(const Op2K2Candidate& candidate)
{
    return {{"x", candidate.x},
            {"y", candidate.y},
            {"case", static_cast<int>(candidate.which)},
            {"no_anticomplete_edge", candidate.no_anticomplete_edge},
            {"preserves_2k2_free", candidate.preserves_2k2_free}};
}

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

void write_dot(std::ostream& out, const Graph& g, const Colouring* colouring, const std::string& name)
{
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (colouring != nullptr) {
            out << " [label=\"" << v << ":" << (*colouring)[v] + 1 << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
}

} // namespace kempe::io

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "kempe/colouring.hpp"
#include "kempe/families.hpp"
#include "kempe/frozen.hpp"
#include "kempe/graph.hpp"
#include "kempe/hereditary.hpp"
#include "kempe/kempe.hpp"

namespace kempe::io {

using nlohmann::json;

/// {"n": int, "edges": [[u, v], ...]} plus an optional "colourings" map.
struct GraphFile {
    Graph graph;
    std::map<std::string, Colouring> colourings;
};

/// Colours are written 1-based: {"k": 3, "colours": [1, 2, 3]}.
json colouring_to_json(const Colouring& c);
/// Throws InputError on a malformed object or a colour outside 1..k.
Colouring colouring_from_json(const json& j);

json graph_to_json(const Graph& g);
json graph_file_to_json(const GraphFile& file);
/// Rejects n < 1, out-of-range endpoints, loops and duplicate edges.
GraphFile graph_file_from_json(const json& j);

GraphFile family_to_graph_file(const FamilyInstance& family);

json report_to_json(const KempeClassReport& report);
json certificate_to_json(const NotKempeClassCertificate& cert);
json checks_to_json(const CertificateChecks& checks);
json census_to_json(const CensusReport& report);
json op2k2_result_to_json(const Op2K2Result& result);
json candidate_to_json(const Op2K2Candidate& candidate);

/// Parses JSON text, mapping syntax errors to InputError.
json parse(const std::string& text);

/// Undirected DOT. When a colouring is given, vertices are labelled "v:c" with 1-based c.
void write_dot(std::ostream& out, const Graph& g, const Colouring* colouring = nullptr,
               const std::string& name = "G");

} // namespace kempe::io

#ifndef CIRCGRAPH_IO_HPP
#define CIRCGRAPH_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "circgraph/axioms.hpp"
#include "circgraph/constructions.hpp"
#include "circgraph/enumerate.hpp"
#include "circgraph/graph.hpp"
#include "circgraph/isomorphism.hpp"
#include "json.hpp"

namespace circgraph {

inline constexpr std::string_view kToolName = "circgraph";
inline constexpr std::string_view kToolVersion = "1.0.0";

inline constexpr std::string_view kBigraphFormat = "bigraph-v1";
inline constexpr std::string_view kGraphFormat = "graph-v1";
inline constexpr std::string_view kDesignFormat = "design-v1";

/// A parsed input file: one of the three JSON graph formats.
using GraphDocument = std::variant<BipartiteGraph, SimpleGraph, Design>;

/// Parses bigraph-v1, graph-v1 or design-v1 JSON. Errors name the JSON
/// line/column or the offending field. DOT text is recognised and rejected
/// as export-only.
GraphDocument parse_document(std::string_view text);

/// bigraph-v1 as is, design-v1 through from_design(); graph-v1 throws.
BipartiteGraph to_bipartite(const GraphDocument& doc);
/// Any document viewed as a simple graph (partition kept for bigraphs).
SimpleGraph to_simple(const GraphDocument& doc);

/// Parts in declared order, edges sorted by label.
nlohmann::json to_json(const BipartiteGraph& g);
/// Vertices in declared order, edges sorted by label.
nlohmann::json to_json(const SimpleGraph& g);
nlohmann::json to_json(const Design& d);
nlohmann::json to_json(const GraphDocument& doc);

/// Two-space indented JSON with sorted keys and a trailing newline.
std::string dump(const nlohmann::json& j);

/// U vertices as boxes then W vertices as circles (each in label order),
/// then edges in label order. Graphs without a partition use ellipses.
std::string export_dot(const BipartiteGraph& g);
std::string export_dot(const SimpleGraph& g);

nlohmann::json to_json(const CircularClassification& c);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const CensusEntry& e);
nlohmann::json to_json(const IsoCertificate& c);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Report skeleton: tool, version, command, digest of `input`.
nlohmann::json report_header(std::string_view command, const nlohmann::json& input);

}  // namespace circgraph

#endif  // CIRCGRAPH_IO_HPP

#include "circgraph/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace circgraph {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<Label> label_list(const json& value, const std::string& where) {
  if (!value.is_array()) throw InputError("field '" + where + "': expected an array of strings");
  std::vector<Label> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      throw InputError("field '" + where + "[" + std::to_string(i) + "]': expected a string");
    }
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

std::vector<LabelEdge> edge_list(const json& value) {
  if (!value.is_array()) throw InputError("field 'edges': expected an array of [label, label] pairs");
  std::vector<LabelEdge> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto& e = value[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw InputError("field 'edges[" + std::to_string(i) + "]': expected [label, label]");
    }
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

void reject_unknown_fields(const json& doc, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : doc.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw InputError("unexpected field '" + key + "'");
    }
  }
}

bool looks_like_dot(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  const auto rest = text.substr(i);
  for (std::string_view kw : {"graph", "digraph", "strict"}) {
    if (rest.substr(0, kw.size()) == kw) return true;
  }
  return false;
}

std::string dot_id(std::string_view label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::pair<Label, Label>> sorted_label_edges(const SimpleGraph& g) {
  std::vector<std::pair<Label, Label>> out;
  for (auto [a, b] : g.edge_list()) out.emplace_back(g.label(a), g.label(b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
  if (looks_like_dot(text)) throw InputError("DOT input is not supported; DOT is export-only, use JSON");
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level: expected a JSON object");
  const auto& format = field(doc, "format");
  if (!format.is_string()) throw InputError("field 'format': expected a string");
  const auto tag = format.get<std::string>();

  if (tag == kBigraphFormat) {
    reject_unknown_fields(doc, {"format", "u", "w", "edges"});
    auto u = label_list(field(doc, "u"), "u");
    auto w = label_list(field(doc, "w"), "w");
    auto result = validate_bipartite(u, w, edge_list(field(doc, "edges")));
    if (!result.ok()) {
      std::string msg = "invalid bigraph-v1 document:";
      for (const auto& p : result.problems) msg += "\n  " + p;
      throw InputError(msg);
    }
    return std::move(*result.graph);
  }
  if (tag == kGraphFormat) {
    reject_unknown_fields(doc, {"format", "vertices", "edges"});
    return SimpleGraph(label_list(field(doc, "vertices"), "vertices"), edge_list(field(doc, "edges")));
  }
  if (tag == kDesignFormat) {
    reject_unknown_fields(doc, {"format", "points", "blocks"});
    Design d;
    d.points = label_list(field(doc, "points"), "points");
    const auto& blocks = field(doc, "blocks");
    if (!blocks.is_array()) throw InputError("field 'blocks': expected an array of blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      d.blocks.push_back(label_list(blocks[i], "blocks[" + std::to_string(i) + "]"));
    }
    // Validate C1 and point references now so errors surface at load time.
    (void)from_design(d);
    return d;
  }
  throw InputError("field 'format': unknown format '" + tag + "'");
}

BipartiteGraph to_bipartite(const GraphDocument& doc) {
  if (const auto* b = std::get_if<BipartiteGraph>(&doc)) return *b;
  if (const auto* d = std::get_if<Design>(&doc)) return from_design(*d);
  throw InputError("expected a bipartite graph (bigraph-v1 or design-v1), got graph-v1");
}

SimpleGraph to_simple(const GraphDocument& doc) {
  if (const auto* g = std::get_if<SimpleGraph>(&doc)) return *g;
  return to_bipartite(doc).graph();
}

json to_json(const BipartiteGraph& g) {
  json j;
  j["format"] = kBigraphFormat;
  j["u"] = std::vector<Label>(g.part_u().begin(), g.part_u().end());
  j["w"] = std::vector<Label>(g.part_w().begin(), g.part_w().end());
  j["edges"] = json::array();
  for (const auto& [u, w] : g.labeled_edges()) j["edges"].push_back({u, w});
  return j;
}

json to_json(const SimpleGraph& g) {
  json j;
  j["format"] = kGraphFormat;
  j["vertices"] = g.labels();
  j["edges"] = json::array();
  for (const auto& [a, b] : sorted_label_edges(g)) j["edges"].push_back({a, b});
  return j;
}

json to_json(const Design& d) {
  json j;
  j["format"] = kDesignFormat;
  j["points"] = d.points;
  j["blocks"] = d.blocks;
  return j;
}

json to_json(const GraphDocument& doc) {
  return std::visit([](const auto& x) { return to_json(x); }, doc);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string export_dot(const BipartiteGraph& g) {
  std::vector<Label> us(g.part_u().begin(), g.part_u().end());
  std::vector<Label> ws(g.part_w().begin(), g.part_w().end());
  std::sort(us.begin(), us.end());
  std::sort(ws.begin(), ws.end());
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& u : us) out << "  " << dot_id(u) << " [shape=box];\n";
  for (const auto& w : ws) out << "  " << dot_id(w) << " [shape=circle];\n";
  for (const auto& [u, w] : g.labeled_edges()) out << "  " << dot_id(u) << " -- " << dot_id(w) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const SimpleGraph& g) {
  if (g.has_bipartition()) return export_dot(as_bipartite(g));
  std::vector<Label> vs = g.labels();
  std::sort(vs.begin(), vs.end());
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : vs) out << "  " << dot_id(v) << " [shape=ellipse];\n";
  for (const auto& [a, b] : sorted_label_edges(g)) out << "  " << dot_id(a) << " -- " << dot_id(b) << ";\n";
  out << "}\n";
  return out.str();
}

json to_json(const CircularClassification& c) {
  json j;
  j["verdict"] = to_string(c.verdict);
  j["triple_axiom_vacuous"] = c.triple_axiom_vacuous;
  j["notes"] = c.notes;
  if (c.witness) {
    j["witness"] = {{"kind", to_string(c.witness->kind)},
                    {"vertices", c.witness->vertices},
                    {"observed", c.witness->observed},
                    {"message", c.witness->message}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const TheoremReport& r) {
  json j;
  j["theorem"] = to_string(r.id);
  j["status"] = to_string(r.status);
  j["evidence"] = r.evidence;
  j["counterexample"] = r.counterexample;
  j["reason"] = r.reason;
  return j;
}

json to_json(const CensusEntry& e) {
  json j;
  j["canonical"] = e.canonical.code();
  j["u_size"] = e.u_size;
  j["w_size"] = e.w_size;
  j["verdict"] = to_string(e.verdict);
  j["diameter"] = distance_json(e.diameter);
  j["radius"] = distance_json(e.radius);
  j["u_degrees"] = e.u_degrees;
  j["w_degrees"] = e.w_degrees;
  j["graph"] = to_json(e.graph);
  return j;
}

json to_json(const IsoCertificate& c) {
  json j;
  j["isomorphic"] = c.isomorphic;
  j["mapping"] = c.mapping ? json(*c.mapping) : json(nullptr);
  return j;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

json report_header(std::string_view command, const json& input) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["input_digest"] = "sha256:" + sha256_hex(input.dump());
  return j;
}

}  // namespace circgraph

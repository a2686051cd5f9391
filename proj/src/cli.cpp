#include "circgraph/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "circgraph/io.hpp"
#include "circgraph/suite.hpp"

namespace circgraph::cli {

namespace {

using nlohmann::json;

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

GraphDocument load(const std::string& path, std::istream& in) {
  try {
    return parse_document(read_source(path, in));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Holds everything the subcommand callbacks write into.
struct Session {
  std::istream& in;
  std::ostringstream out;
  int exit_code = kSuccess;
};

void cmd_build(Session& s, const std::string& kind, int n) {
  const auto g = kind == "star" ? star(n) : triangular(n);
  s.out << dump(to_json(g));
}

json classification_report(const std::string& command, const BipartiteGraph& g,
                           const CircularClassification& c) {
  auto report = report_header(command, to_json(g));
  report["classification"] = to_json(c);
  report["u_size"] = g.u_count();
  report["w_size"] = g.w_count();
  return report;
}

void cmd_check(Session& s, const std::string& path) {
  const auto g = to_bipartite(load(path, s.in));
  const auto c = classify(g);
  s.out << dump(classification_report("check", g, c));
  s.exit_code = c.circular() ? kSuccess : kNegative;
}

void cmd_verify(Session& s, const std::string& path) {
  const auto g = to_bipartite(load(path, s.in));
  const auto c = classify(g);
  auto report = classification_report("verify", g, c);
  report["theorems"] = json::array();
  bool failed = false;
  for (const auto& r : theorem_suite(g)) {
    report["theorems"].push_back(to_json(r));
    failed = failed || r.status == Status::Fail;
  }
  s.out << dump(report);
  s.exit_code = c.circular() && !failed ? kSuccess : kNegative;
}

void cmd_derive(Session& s, const std::string& kind, const std::string& path, const std::string& pivot) {
  const auto doc = load(path, s.in);
  if (kind == "neighborhood") {
    s.out << dump(to_json(as_bipartite(neighborhood_graph(to_simple(doc)))));
    return;
  }
  if (pivot.empty()) throw InputError("derive linear requires --pivot LABEL");
  s.out << dump(to_json(derive_linear(to_bipartite(doc), pivot)));
}

void cmd_iso(Session& s, const std::string& first, const std::string& second, bool respect_parts) {
  const auto g1 = to_simple(load(first, s.in));
  const auto g2 = to_simple(load(second, s.in));
  const auto mode = respect_parts ? IsoMode::PartRespecting : IsoMode::Abstract;
  if (respect_parts && (!g1.has_bipartition() || !g2.has_bipartition())) {
    throw InputError("--respect-parts needs two bipartite inputs");
  }
  const auto cert = are_isomorphic(g1, g2, mode);
  auto report = report_header("iso", json::array({to_json(g1), to_json(g2)}));
  report["mode"] = respect_parts ? "part-respecting" : "abstract";
  report["certificate"] = to_json(cert);
  s.out << dump(report);
  s.exit_code = cert.isomorphic ? kSuccess : kNegative;
}

void cmd_enum(Session& s, const std::string& kind, int u_size, int max_n, unsigned workers) {
  json params;
  std::vector<CensusEntry> census;
  if (kind == "circular") {
    if (u_size < 0) throw InputError("enum circular requires --u N");
    params = {{"u", u_size}};
    census = enumerate_circular(u_size, workers);
  } else {
    if (max_n < 0) throw InputError("enum trees requires --max N");
    params = {{"max", max_n}};
    census = enumerate_circular_trees(max_n);
  }
  auto report = report_header("enum " + kind, params);
  report["parameters"] = params;
  report["count"] = census.size();
  report["census"] = json::array();
  for (const auto& e : census) report["census"].push_back(to_json(e));
  s.out << dump(report);
}

void cmd_export(Session& s, const std::string& format, const std::string& path) {
  const auto doc = load(path, s.in);
  if (format == "json") {
    s.out << dump(to_json(doc));
  } else if (const auto* simple = std::get_if<SimpleGraph>(&doc)) {
    s.out << export_dot(*simple);
  } else {
    s.out << export_dot(to_bipartite(doc));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, recognise and verify circular graphs", "circgraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Session session{in, {}, kSuccess};
  std::function<void()> action;

  std::string kind, path, path2, pivot, format;
  int number = 0, u_size = -1, max_n = -1;
  unsigned workers = 1;
  bool respect_parts = false;

  auto* build = app.add_subcommand("build", "Emit a named graph as bigraph-v1 JSON");
  build->add_option("kind", kind, "star | triangular")->required()->check(CLI::IsMember({"star", "triangular"}));
  build->add_option("n", number, "Order parameter")->required();
  build->callback([&] { action = [&] { cmd_build(session, kind, number); }; });

  auto* check = app.add_subcommand("check", "Classify a bipartite graph or design");
  check->add_option("file", path, "Input file, - for stdin")->required();
  check->callback([&] { action = [&] { cmd_check(session, path); }; });

  auto* verify = app.add_subcommand("verify", "Classify and run every applicable theorem check");
  verify->add_option("file", path, "Input file, - for stdin")->required();
  verify->callback([&] { action = [&] { cmd_verify(session, path); }; });

  auto* derive = app.add_subcommand("derive", "Build a derived graph");
  derive->add_option("kind", kind, "neighborhood | linear")->required()->check(CLI::IsMember({"neighborhood", "linear"}));
  derive->add_option("file", path, "Input file, - for stdin")->required();
  derive->add_option("--pivot", pivot, "Point deleted by the linear derivation");
  derive->callback([&] { action = [&] { cmd_derive(session, kind, path, pivot); }; });

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two graphs");
  iso->add_option("file1", path, "First input")->required();
  iso->add_option("file2", path2, "Second input")->required();
  iso->add_flag("--respect-parts", respect_parts, "Only part-preserving isomorphisms");
  iso->callback([&] { action = [&] { cmd_iso(session, path, path2, respect_parts); }; });

  auto* enumerate = app.add_subcommand("enum", "Exhaustive census");
  enumerate->add_option("kind", kind, "circular | trees")->required()->check(CLI::IsMember({"circular", "trees"}));
  enumerate->add_option("--u", u_size, "Number of points (circular)");
  enumerate->add_option("--max", max_n, "Maximum tree order (trees)");
  enumerate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->callback([&] { action = [&] { cmd_enum(session, kind, u_size, max_n, workers); }; });

  auto* exporter = app.add_subcommand("export", "Re-emit a graph as canonical JSON or DOT");
  exporter->add_option("--format", format, "json | dot")->required()->check(CLI::IsMember({"json", "dot"}));
  exporter->add_option("file", path, "Input file, - for stdin")->required();
  exporter->callback([&] { action = [&] { cmd_export(session, format, path); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  out << session.out.str();
  return session.exit_code;
}

}  // namespace circgraph::cli

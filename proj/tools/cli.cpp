#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spexlab/bounds.hpp"
#include "spexlab/embed.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/error.hpp"
#include "spexlab/family.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/lemma_lab.hpp"
#include "spexlab/spectra.hpp"

#ifndef SPEXLAB_VERSION
#define SPEXLAB_VERSION "0.0.0"
#endif

namespace spexlab::cli {

namespace {

using nlohmann::json;

// Unreadable input files count as parse failures.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Run {
 public:
  Run(std::ostream& out, std::istream& in) : out_(out), in_(in) {}

  void begin(const CLI::App& sub) {
    command_ = sub.get_name();
    for (const CLI::Option* opt : sub.get_options()) {
      if (opt->get_lnames().empty()) continue;
      const std::string& key = opt->get_lnames().front();
      // The worker count never changes output, so it stays out of the record.
      if (key == "help" || key == "workers") continue;
      if (opt->count() > 0) {
        const auto& res = opt->results();
        parameters_[key] = res.size() == 1 ? json(res.front()) : json(res);
      } else if (!opt->get_default_str().empty()) {
        parameters_[key] = opt->get_default_str();
      }
    }
    solver_ = SolverSettings::from_environment();
  }

  const SolverSettings& solver() const { return solver_; }

  json manifest() const {
    return {{"command", command_},
            {"parameters", parameters_},
            {"artifact_version", SPEXLAB_VERSION},
            {"solver_settings", {{"tolerance", solver_.tolerance}, {"max_iterations", solver_.max_iterations}}},
            {"timestamp", timestamp_},
            {"input_digests", digests_}};
  }

  std::string read_input(const std::string& path) {
    std::string bytes;
    if (path == "-") {
      bytes.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw InputError("cannot read '" + path + "'");
      bytes.assign(std::istreambuf_iterator<char>(f), {});
    }
    digests_[path] = fnv1a64(bytes);
    return bytes;
  }

  std::vector<Graph> read_graphs(const std::string& path) {
    std::istringstream s(read_input(path));
    try {
      return read_graph6_stream(s);
    } catch (const SpexError& e) {
      throw SpexError(e.kind(), path + ": " + e.detail());
    }
  }

  /// Queues a document; nothing is written until commit().
  void document(const std::string& path, std::string body, bool sidecar) {
    pending_.push_back({path, std::move(body), sidecar});
  }

  void commit() {
    for (const auto& p : pending_) {
      if (p.path == "-") {
        out_ << p.body;
        continue;
      }
      write_file(p.path, p.body);
      if (p.sidecar) write_file(p.path + ".manifest.json", manifest().dump(2) + "\n");
    }
    out_.flush();
  }

 private:
  struct Pending {
    std::string path;
    std::string body;
    bool sidecar;
  };

  static void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw OutputError("cannot write '" + path + "'");
    f << body;
    if (!f) throw OutputError("write to '" + path + "' failed");
  }

  std::ostream& out_;
  std::istream& in_;
  std::string command_;
  json parameters_ = json::object();
  json digests_ = json::object();
  SolverSettings solver_;
  std::string timestamp_ = utc_timestamp();
  std::vector<Pending> pending_;
};

// A JSON stream: the manifest on the first line, one record per line after.
std::string json_lines(const json& manifest, const std::vector<json>& records) {
  std::string s = json{{"manifest", manifest}}.dump() + "\n";
  for (const auto& r : records) s += r.dump() + "\n";
  return s;
}

std::string json_document(const json& manifest, json body) {
  body["manifest"] = manifest;
  return body.dump(2) + "\n";
}

Graph decode_argument(const std::string& text, const char* what) {
  try {
    return graph6_decode(text);
  } catch (const SpexError& e) {
    throw SpexError(e.kind(), std::string(what) + ": " + e.detail());
  }
}

// Family spec when the text has a colon, plain graph6 otherwise.
Graph pattern_from(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto spec = parse_family(text);
    validate(spec);
    return build(spec);
  }
  return decode_argument(text, "--f");
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream s(text);
  std::string field;
  while (std::getline(s, field, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != field.size()) throw SpexError(ErrorKind::InvalidParameter, "bad number '" + field + "'");
    out.push_back(v);
  }
  return out;
}

json status_json(const ContainmentResult& r) {
  switch (r.status) {
    case Containment::Found: return "found";
    case Containment::Absent: return "absent";
    case Containment::Unknown: return "unknown";
  }
  return nullptr;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedGraph6: return kParse;
    case ErrorKind::CapacityExceeded:
    case ErrorKind::ConvergenceFailure: return kCapacity;
    case ErrorKind::InternalAssertion:
    case ErrorKind::EmptyFeasibleSet: return kInternal;
    default: return kUsage;
  }
}

struct Options {
  std::string family, out = "-", in = "-", matrix = "adj", check = "all", z, g, h, f, objective = "edges", stream,
                      witness_out, target, chain = "adj", csv, corollary_case;
  bool json_flag = false, with_vector = false, witness = false, dense = false;
  int n = 0, a = 0, b = 0, emax = -1, workers = 1, delta_f = 0, exhaustive_max_n = 9;
  double eps = kDefaultEpsilon;
};

void cmd_construct(Run& run, const Options& o) {
  const auto spec = parse_family(o.family);
  validate(spec);
  run.document(o.out, graph6_encode(build(spec)) + "\n", true);
}

void cmd_spectra(Run& run, const Options& o) {
  const auto graphs = run.read_graphs(o.in);
  const auto kind = parse_matrix_kind(o.matrix);
  std::vector<json> records;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto r = dominant_eigenpair(graphs[i], kind, run.solver());
    json rec = {{"index", i},
                {"graph6", graph6_encode(graphs[i])},
                {"matrix", kind.name()},
                {"value", r.value},
                {"residual", r.residual},
                {"iterations", r.iterations}};
    if (o.with_vector) rec["vector"] = r.vector;
    records.push_back(std::move(rec));
  }
  run.document(o.out, json_lines(run.manifest(), records), false);
}

void cmd_bounds(Run& run, const Options& o) {
  static const std::vector<std::string> kAll = {"hong", "wilf", "fengyu", "ms", "cv"};
  std::vector<std::string> checks;
  if (o.check == "all") {
    checks = kAll;
  } else {
    checks = {o.check};
  }
  const auto graphs = run.read_graphs(o.in);
  const auto z_given = o.z.empty() ? std::vector<double>{} : parse_reals(o.z);
  std::vector<json> records;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    for (const auto& c : checks) {
      json rec;
      try {
        if (c == "hong") {
          rec = hong_nikiforov_bound(g, run.solver());
        } else if (c == "wilf") {
          rec = wilf_bound(g, run.solver());
        } else if (c == "fengyu") {
          rec = feng_yu_bound(g, run.solver());
        } else if (c == "ms") {
          auto z = z_given.empty() ? std::vector<double>(g.order(), 1.0 / g.order()) : z_given;
          rec = motzkin_straus_check(g, z);
        } else {
          rec = clique_vector_check(g, run.solver());
        }
      } catch (const SpexError& e) {
        // With --check all, a bound outside its domain is skipped, not fatal.
        const bool skippable = e.kind() == ErrorKind::DegenerateOrder || e.kind() == ErrorKind::CapacityExceeded;
        if (o.check != "all" || !skippable) throw;
        rec = {{"bound_name", c}, {"skipped", e.what()}};
      }
      rec["index"] = i;
      records.push_back(std::move(rec));
    }
  }
  run.document(o.out, json_lines(run.manifest(), records), false);
}

void cmd_identity(Run& run, const Options& o) {
  const Graph g = decode_argument(o.g, "--g");
  const Graph h = decode_argument(o.h, "--h");
  SolverSettings solver = identity_solver_settings();
  solver.max_iterations = run.solver().max_iterations;
  json body = double_eigenvector_identity(g, h, solver);
  body["g"] = o.g;
  body["h"] = o.h;
  run.document(o.out, json_document(run.manifest(), body), false);
}

bool cmd_contains(Run& run, const Options& o) {
  const auto hosts = run.read_graphs(o.g);
  const Graph pattern = pattern_from(o.f);
  bool undecided = false;
  std::vector<json> records;
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    const auto r = contains_spanning(hosts[i], pattern);
    json rec = {{"index", i}, {"graph6", graph6_encode(hosts[i])}, {"status", status_json(r)}};
    rec["contains"] = r.status == Containment::Unknown ? json(nullptr) : json(r.found());
    if (o.witness && r.witness) rec["witness"] = r.witness->mapping;
    undecided = undecided || r.status == Containment::Unknown;
    records.push_back(std::move(rec));
  }
  run.document(o.out, json_lines(run.manifest(), records), false);
  return !undecided;
}

void cmd_factor(Run& run, const Options& o) {
  const auto graphs = run.read_graphs(o.in);
  std::vector<json> records;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    records.push_back({{"index", i},
                       {"graph6", graph6_encode(graphs[i])},
                       {"has_factor", has_factor(graphs[i], FactorQuery{o.a, o.b})}});
  }
  run.document(o.out, json_lines(run.manifest(), records), false);
}

void cmd_search(Run& run, const Options& o) {
  const auto family = parse_family(o.family);
  validate(family);
  const auto objective = parse_objective(o.objective);
  SearchOptions so;
  so.dense_mode = o.dense;
  so.max_missing_edges = o.emax;
  so.workers = o.workers;
  so.solver = run.solver();
  SearchOutcome outcome;
  if (!o.stream.empty()) {
    const auto graphs = run.read_graphs(o.stream);
    for (const auto& g : graphs) {
      if (g.order() != o.n) throw SpexError(ErrorKind::OrderMismatch, "stream graph order differs from --n");
    }
    outcome = search_extremal_in(graphs, family, objective, so);
  } else {
    outcome = search_extremal(o.n, family, objective, so);
  }
  json body = {{"n", outcome.n},
               {"family", to_string(outcome.family)},
               {"objective", to_string(outcome.objective)},
               {"best_value", outcome.best_value},
               {"witnesses", outcome.witnesses},
               {"graphs_examined", outcome.graphs_examined},
               {"graphs_pruned", outcome.graphs_pruned},
               {"tie_tolerance", outcome.tie_tolerance}};
  run.document(o.out, json_document(run.manifest(), body), false);
  std::string witness_path = o.witness_out;
  if (witness_path.empty() && o.out != "-") witness_path = o.out + ".witnesses.g6";
  if (!witness_path.empty()) {
    std::string lines;
    for (const auto& w : outcome.witnesses) lines += w + "\n";
    run.document(witness_path, lines, true);
  }
}

void cmd_lemmas(Run& run, const Options& o) {
  const auto colon = o.target.find(':');
  if (colon == std::string::npos) throw SpexError(ErrorKind::InvalidParameter, "--target needs h:<n>,<delta> or graph6:<s>");
  const std::string kind = o.target.substr(0, colon);
  const std::string body = o.target.substr(colon + 1);
  Graph g(1);
  int delta_f = o.delta_f;
  if (kind == "h") {
    const auto spec = parse_family("h:" + body);
    validate(spec);
    g = build(spec);
    if (delta_f == 0) delta_f = std::get<ExtremalH>(spec).k;
  } else if (kind == "graph6" || kind == "g6") {
    g = decode_argument(body, "--target");
    if (delta_f == 0) throw SpexError(ErrorKind::InvalidParameter, "--deltaF is required for graph6 targets");
  } else {
    throw SpexError(ErrorKind::InvalidParameter, "unknown target kind '" + kind + "'");
  }

  json doc = {{"target", o.target}, {"chain", o.chain}};
  // Degree -> vertex count; the only view onto the "at most one low-degree vertex" remark.
  std::map<int, int> histogram;
  for (int v = 0; v < g.order(); ++v) ++histogram[g.degree(v)];
  doc["degree_histogram"] = json::array();
  for (auto [d, count] : histogram) doc["degree_histogram"].push_back({{"degree", d}, {"count", count}});
  std::vector<LemmaReport> reports;
  if (o.chain == "adj") {
    reports = check_adjacency_chain(g, delta_f, run.solver());
  } else if (o.chain == "q") {
    auto r = check_q_chain(g, delta_f, o.eps, run.solver());
    doc["partition"] = r.partition;
    doc["entries"] = r.entries;
    reports = std::move(r.reports);
    if (kind == "h") reports.push_back(q_test_vector_bound(g.order(), std::get<ExtremalH>(parse_family("h:" + body)).k));
  } else {
    throw SpexError(ErrorKind::InvalidParameter, "--chain must be adj or q");
  }
  doc["reports"] = reports;
  run.document(o.out, json_document(run.manifest(), doc), false);
  std::string csv_path = o.csv;
  if (csv_path.empty() && o.out != "-") csv_path = o.out + ".csv";
  if (!csv_path.empty()) run.document(csv_path, lemma_csv(reports), true);
}

void cmd_corollary(Run& run, const Options& o) {
  const auto c = parse_corollary_case(o.corollary_case);
  CorollaryOptions co;
  co.exhaustive_max_n = o.exhaustive_max_n;
  co.workers = o.workers;
  co.solver = run.solver();
  json doc = {{"case", to_string(c)}, {"reports", verify_corollary(c, co)}};
  run.document(o.out, json_document(run.manifest(), doc), false);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal graph laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SPEXLAB_VERSION);
  Options o;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output path, - for stdout")->capture_default_str(); };

  auto* construct = app.add_subcommand("construct", "emit a family member as graph6");
  construct->add_option("--family", o.family, "family spec")->required();
  add_out(construct);

  auto* spectra = app.add_subcommand("spectra", "dominant eigenpair of each input graph");
  spectra->add_option("--in", o.in, "graph6 file, - for stdin")->capture_default_str();
  spectra->add_option("--matrix", o.matrix, "adj | q | alpha:<a>")->capture_default_str();
  spectra->add_flag("--json", o.json_flag, "JSON records (the only format)");
  spectra->add_flag("--with-vector", o.with_vector, "include the eigenvector");
  add_out(spectra);

  auto* bounds = app.add_subcommand("bounds", "check spectral bounds on each input graph");
  bounds->add_option("--in", o.in, "graph6 file, - for stdin")->capture_default_str();
  bounds->add_option("--check", o.check, "hong | wilf | fengyu | ms | cv | all")
      ->capture_default_str()
      ->check(CLI::IsMember({"hong", "wilf", "fengyu", "ms", "cv", "all"}));
  bounds->add_option("--z", o.z, "comma-separated distribution for ms (default uniform)");
  add_out(bounds);

  auto* identity = app.add_subcommand("identity", "double-eigenvector identities for two graphs");
  identity->set_help_flag("--help", "print this help");
  identity->add_option("--g", o.g, "graph6 string")->required();
  identity->add_option("--h", o.h, "graph6 string")->required();
  add_out(identity);

  auto* contains = app.add_subcommand("contains", "spanning containment of a pattern in each input graph");
  contains->add_option("--g", o.g, "graph6 file of hosts, - for stdin")->required();
  contains->add_option("--f", o.f, "family spec or graph6 pattern")->required();
  contains->add_flag("--witness", o.witness, "include the embedding");
  add_out(contains);

  auto* factor = app.add_subcommand("factor", "[a,b]-factor existence for each input graph");
  factor->add_option("--in", o.in, "graph6 file, - for stdin")->capture_default_str();
  factor->add_option("--a", o.a, "lower degree")->required();
  factor->add_option("--b", o.b, "upper degree")->required();
  add_out(factor);

  auto* search = app.add_subcommand("search", "extremal search over F-free graphs");
  search->add_option("--n", o.n, "order")->required();
  search->add_option("--family", o.family, "forbidden family spec")->required();
  search->add_option("--objective", o.objective, "edges | lambda | q")->capture_default_str();
  search->add_flag("--dense", o.dense, "only graphs with at most --emax missing edges");
  search->add_option("--emax", o.emax, "missing-edge budget in dense mode (default 2n)");
  search->add_option("--workers", o.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--stream", o.stream, "search a graph6 file instead of generating");
  search->add_option("--witness-out", o.witness_out, "graph6 file of witnesses (default <out>.witnesses.g6)");
  add_out(search);

  auto* lemmas = app.add_subcommand("lemmas", "proof-chain diagnostics on one graph");
  lemmas->add_option("--target", o.target, "h:<n>,<delta> | graph6:<s>")->required();
  lemmas->add_option("--chain", o.chain, "adj | q")->capture_default_str()->check(CLI::IsMember({"adj", "q"}));
  lemmas->add_option("--eps", o.eps, "partition parameter in (0, 1/7)")->capture_default_str();
  lemmas->add_option("--deltaF", o.delta_f, "minimum degree of F (default delta for h targets)");
  lemmas->add_option("--csv", o.csv, "CSV summary path (default <out>.csv)");
  add_out(lemmas);

  auto* corollary = app.add_subcommand("corollary", "check a corollary construction");
  corollary->add_option("--case", o.corollary_case, "cyclepower:n,k | factor:n,a,b | cliquefactor:n,r")->required();
  corollary->add_option("--exhaustive-max-n", o.exhaustive_max_n, "largest n for the exhaustive cross-check")
      ->capture_default_str();
  corollary->add_option("--workers", o.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  add_out(corollary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Run run(out, std::cin);
  try {
    run.begin(*sub);
    bool decided = true;
    if (sub == construct) cmd_construct(run, o);
    else if (sub == spectra) cmd_spectra(run, o);
    else if (sub == bounds) cmd_bounds(run, o);
    else if (sub == identity) cmd_identity(run, o);
    else if (sub == contains) decided = cmd_contains(run, o);
    else if (sub == factor) cmd_factor(run, o);
    else if (sub == search) cmd_search(run, o);
    else if (sub == lemmas) cmd_lemmas(run, o);
    else cmd_corollary(run, o);
    run.commit();
    if (!decided) {
      err << "error: some containment queries exceeded the expansion cap\n";
      return kCapacity;
    }
    return kOk;
  } catch (const SpexError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace spexlab::cli

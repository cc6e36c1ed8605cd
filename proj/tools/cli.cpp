#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "polycirc/coset_graph.hpp"
#include "polycirc/corpus.hpp"
#include "polycirc/engine.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/families.hpp"
#include "polycirc/graph_ops.hpp"
#include "polycirc/group_ops.hpp"
#include "polycirc/io.hpp"
#include "polycirc/report.hpp"

namespace polycirc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

Graph load_graph(const std::string& path) { return read_graph(read_file(path)); }
PermGroup load_group(const std::string& path) { return parse_generators(read_file(path)); }

std::map<std::string, std::uint64_t> parse_params(const std::string& text) {
  std::map<std::string, std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + item + "' is not key=value");
    try {
      std::size_t used = 0;
      out[item.substr(0, eq)] = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("parameter '" + item + "' has a non-numeric value");
    }
  }
  return out;
}

std::uint64_t param(const std::map<std::string, std::uint64_t>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError("missing parameter " + key);
  return it->second;
}

std::vector<Vertex> parse_vertices(const std::string& text, std::size_t n) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t column = 1;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1 || v > n)
      throw ParseError("bad vertex '" + item + "'", 1, column);
    out.push_back(static_cast<Vertex>(v - 1));
    column += item.size() + 1;
  }
  if (out.empty()) throw ParseError("empty vertex list", 1, 1);
  return out;
}

std::vector<Method> parse_routes(const std::string& text) {
  std::vector<Method> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto m = method_from_string(item);
    if (!m || *m == Method::kExhaustedNone) throw UsageError("unknown route '" + item + "'");
    out.push_back(*m);
  }
  return out;
}

std::string vertex_list(const std::vector<Vertex>& vs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i] + 1);
  }
  return out;
}

std::string encode(const Graph& g, bool sparse) { return sparse ? write_sparse6(g) : write_graph6(g); }

CertificateDocument document_for(const Graph& g, const PermGroup& group, const Certificate& c,
                                 std::uint64_t bound) {
  CertificateDocument doc;
  doc.certificate = c;
  doc.n = g.order();
  doc.valency = g.valency().value_or(0);
  doc.verified = verify_certificate(g, group, c, bound).ok;
  doc.tool_version = std::string(tool_version());
  return doc;
}

CorpusConfig load_corpus_config(const std::string& path) {
  CorpusConfig config;
  if (path.empty()) return config;
  nlohmann::json j = nlohmann::json::parse(read_file(path), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ParseError("config is not a JSON object", 1, 1);
  for (const auto& [key, value] : j.items()) {
    auto need_uint = [&] {
      if (!value.is_number_unsigned()) throw ParseError("config key '" + key + "' must be a non-negative integer", 1, 1);
      return value.get<std::uint64_t>();
    };
    auto need_bool = [&] {
      if (!value.is_boolean()) throw ParseError("config key '" + key + "' must be a boolean", 1, 1);
      return value.get<bool>();
    };
    if (key == "primes") {
      if (!value.is_array()) throw ParseError("config key 'primes' must be an array", 1, 1);
      config.primes.clear();
      for (const auto& p : value) {
        if (!p.is_number_unsigned() || !is_prime(p.get<std::uint64_t>()))
          throw ParseError("config key 'primes' must list primes", 1, 1);
        config.primes.push_back(p.get<std::uint64_t>());
      }
    } else if (key == "r_min") config.r_min = need_uint();
    else if (key == "r_max") config.r_max = need_uint();
    else if (key == "s_max") config.s_max = need_uint();
    else if (key == "max_vertices") config.max_vertices = need_uint();
    else if (key == "double_covers") config.double_covers = need_bool();
    else if (key == "quotients") config.quotients = need_bool();
    else if (key == "coset_search") config.coset_search = need_bool();
    else if (key == "coset_group_bound") config.coset_group_bound = need_uint();
    else if (key == "seed") config.seed = need_uint();
    else throw ParseError("unknown config key '" + key + "'", 1, 1);
  }
  if (config.r_min < 3) throw PreconditionError("r_min must be at least 3");
  return config;
}

struct Options {
  std::string graph, group, certificate, config, out, family, params, subgroup, element, id;
  std::string partition_group, seed_set, routes, m_group, p_group;
  std::uint64_t bound = kDefaultBound;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 4000;
  std::size_t jobs = 1;
  std::size_t arc_samples = 100;
  std::size_t max_s = 4;
  bool sparse = false;
};

int cmd_construct(const Options& o, std::ostream& out) {
  auto params = parse_params(o.params);
  CorpusInstance inst{"", o.family, o.params, Graph(), PermGroup::trivial(1), "", o.seed};
  if (o.family == "px") {
    PXParams px{param(params, "p"), param(params, "r"), param(params, "s")};
    inst.id = "px-" + std::to_string(px.p) + "-" + std::to_string(px.r) + "-" + std::to_string(px.s);
    inst.graph = praeger_xu(px).graph;
    inst.group = praeger_xu_group(px);
  } else if (o.family == "lemma33") {
    auto p = param(params, "p"), s = param(params, "s");
    auto l = lemma33_instance(p, s);
    inst.id = "lemma33-" + std::to_string(p) + "-" + std::to_string(s);
    inst.graph = l.bundle.graph();
    inst.group = l.bundle.acting_group();
    inst.note = "small-p analogue";
  } else if (o.family == "k12m11") {
    auto k = k12_m11();
    inst.id = "k12-m11";
    inst.graph = k.graph;
    inst.group = k.group;
  } else if (o.family == "coset") {
    if (o.group.empty() || o.subgroup.empty() || o.element.empty())
      throw UsageError("coset needs --group, --subgroup and --element");
    PermGroup g = load_group(o.group);
    PermGroup h = load_group(o.subgroup);
    Permutation x = parse_cycles(o.element, g.degree());
    auto b = coset_graph(g, h, x, o.bound);
    inst.id = "coset";
    inst.graph = b.graph();
    inst.group = b.acting_group();
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  if (!o.id.empty()) inst.id = o.id;
  nlohmann::json manifest = manifest_entry(inst);
  if (!o.out.empty()) {
    write_file(o.out + (o.sparse ? ".s6" : ".g6"), encode(inst.graph, o.sparse) + "\n");
    write_file(o.out + ".gens", write_generators(inst.group));
  } else {
    out << encode(inst.graph, o.sparse) << "\n" << write_generators(inst.group);
  }
  out << manifest.dump() << "\n";
  return kOk;
}

int emit_graph(const Options& o, const Graph& g, std::ostream& out) {
  if (!o.out.empty()) write_file(o.out, encode(g, o.sparse) + "\n");
  else out << encode(g, o.sparse) << "\n";
  return kOk;
}

int cmd_quotient(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph);
  PermGroup n = load_group(o.partition_group);
  if (n.degree() != g.order()) throw PreconditionError("group degree differs from vertex count");
  auto q = quotient_graph(g, orbit_partition(n));
  if (q.intra_class_edges)
    err << "warning: " << q.intra_class_edges << " edges inside classes were dropped\n";
  return emit_graph(o, q.graph, out);
}

int cmd_dense(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  auto seeds = parse_vertices(o.seed_set, g.order());
  auto r = density_closure(g, seeds);
  out << "closure " << vertex_list(r.closure, ' ') << "\n";
  out << "dense " << (r.dense ? "true" : "false") << "\n";
  return kOk;
}

int cmd_triangle(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  if (auto t = find_triangle(g)) out << vertex_list({(*t)[0], (*t)[1], (*t)[2]}, ' ') << "\n";
  else out << "none\n";
  return kOk;
}

SearchConfig search_config(const Options& o) {
  SearchConfig c;
  if (!o.routes.empty()) c.routes = parse_routes(o.routes);
  c.bound = o.bound;
  c.seed = o.seed;
  c.samples = o.samples;
  c.graph_id = o.id.empty() ? o.graph : o.id;
  return c;
}

int cmd_find(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  PermGroup group = load_group(o.group);
  Certificate c = find_semiregular(g, group, search_config(o));
  out << certificate_to_json(document_for(g, group, c, o.bound)).dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  PermGroup group = load_group(o.group);
  CertificateDocument doc = parse_certificate(read_file(o.certificate));
  Verdict v;
  if (doc.n != g.order()) v = {false, "certificate is for " + std::to_string(doc.n) + " vertices"};
  else v = verify_certificate(g, group, doc.certificate, o.bound);
  if (v) out << "valid\n";
  else out << "invalid: " << v.reason << "\n";
  return v ? kOk : kInvalid;
}

int cmd_corpus(const Options& o, std::ostream& out, std::ostream& err) {
  CorpusConfig config = load_corpus_config(o.config);
  Corpus corpus = corpus_generate(config);
  for (const auto& line : corpus.skipped) err << "skipped " << line << "\n";

  const auto& items = corpus.instances;
  std::vector<std::string> certs(items.size()), errors(items.size());
  std::vector<int> codes(items.size(), kOk);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) {
      try {
        SearchConfig sc = search_config(o);
        sc.graph_id = items[i].id;
        sc.seed = config.seed;
        Certificate c = find_semiregular(items[i].graph, items[i].group, sc);
        certs[i] = certificate_to_json(document_for(items[i].graph, items[i].group, c, o.bound)).dump();
      } catch (const InconclusiveError& e) {
        errors[i] = e.what();
        codes[i] = kInconclusive;
      } catch (const BoundExceededError& e) {
        errors[i] = e.what();
        codes[i] = kInconclusive;
      } catch (const std::exception& e) {
        errors[i] = e.what();
        codes[i] = kInvalid;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < std::max<std::size_t>(o.jobs, 1); ++t) pool.emplace_back(worker);
    worker();
  }

  std::ostringstream manifest;
  int code = kOk;
  for (std::size_t i = 0; i < items.size(); ++i) {
    manifest << manifest_entry(items[i]).dump() << "\n";
    if (codes[i] != kOk) {
      err << items[i].id << ": " << errors[i] << "\n";
      code = std::max(code, codes[i]);
      continue;
    }
    if (!o.out.empty()) {
      const std::string base = o.out + "/" + items[i].id;
      write_file(base + ".g6", write_graph6(items[i].graph) + "\n");
      write_file(base + ".gens", write_generators(items[i].group));
      write_file(base + ".cert.json", certs[i] + "\n");
    }
  }
  if (!o.out.empty()) {
    write_file(o.out + "/manifest.jsonl", manifest.str());
    out << items.size() << " instances written to " << o.out << "\n";
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) {
      nlohmann::json line = manifest_entry(items[i]);
      if (codes[i] == kOk) line["certificate"] = nlohmann::json::parse(certs[i]);
      out << line.dump() << "\n";
    }
  }
  return code;
}

int cmd_report(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph);
  PermGroup group = load_group(o.group);
  ReportConfig rc;
  rc.bound = o.bound;
  rc.seed = o.seed;
  rc.arc_samples = o.arc_samples;
  rc.max_s = o.max_s;
  if (!o.m_group.empty()) rc.m = load_group(o.m_group);
  if (!o.p_group.empty()) rc.p = load_group(o.p_group);
  out << report_to_json(proof_invariant_report(g, group, rc)).dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiregular automorphisms of arc-transitive graphs", "polycirc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));
  Options o;

  auto graph_opt = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "graph6 or sparse6 file")->required();
  };
  auto group_opt = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--group", o.group, "generator file (1-based cycles)");
    if (required) opt->required();
  };
  auto bound_seed = [&](CLI::App* c) {
    c->add_option("--bound", o.bound, "element bound for exhaustive work");
    c->add_option("--seed", o.seed, "random seed");
  };

  auto* construct = app.add_subcommand("construct", "build a family instance");
  construct->add_option("--family", o.family, "px | lemma33 | k12m11 | coset")->required();
  construct->add_option("--params", o.params, "comma-separated key=value");
  construct->add_option("--out", o.out, "output prefix for .g6/.gens files");
  construct->add_option("--id", o.id, "instance id");
  construct->add_option("--subgroup", o.subgroup, "coset: generator file of H");
  construct->add_option("--element", o.element, "coset: g in cycle notation");
  construct->add_flag("--sparse6", o.sparse, "write sparse6");
  group_opt(construct, false);
  bound_seed(construct);

  auto* quotient = app.add_subcommand("quotient", "normal quotient by a group's orbits");
  graph_opt(quotient);
  quotient->add_option("--partition-from-group", o.partition_group, "generator file")->required();
  quotient->add_option("--out", o.out, "output file");
  quotient->add_flag("--sparse6", o.sparse, "write sparse6");

  auto* cover = app.add_subcommand("cover", "standard double cover");
  graph_opt(cover);
  cover->add_option("--out", o.out, "output file");
  cover->add_flag("--sparse6", o.sparse, "write sparse6");

  auto* dense = app.add_subcommand("dense", "density closure of a seed set");
  graph_opt(dense);
  dense->add_option("--seed-set", o.seed_set, "1-based vertices, comma-separated")->required();

  auto* triangle = app.add_subcommand("triangle", "find a triangle");
  graph_opt(triangle);

  auto* find = app.add_subcommand("find", "find a semiregular automorphism");
  graph_opt(find);
  group_opt(find, true);
  find->add_option("--routes", o.routes, "comma-separated route tags");
  find->add_option("--samples", o.samples, "random elements tried above the bound");
  find->add_option("--id", o.id, "graph id recorded in the certificate");
  bound_seed(find);

  auto* verify = app.add_subcommand("verify", "check a certificate");
  graph_opt(verify);
  group_opt(verify, true);
  verify->add_option("--certificate", o.certificate, "certificate JSON")->required();
  verify->add_option("--bound", o.bound, "element bound for exhausted-none");

  auto* corpus = app.add_subcommand("corpus", "generate and certify the corpus");
  corpus->add_option("--config", o.config, "corpus config JSON");
  corpus->add_option("--out", o.out, "output directory");
  corpus->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
  corpus->add_option("--bound", o.bound, "element bound");

  auto* report = app.add_subcommand("report", "proof invariant report");
  graph_opt(report);
  group_opt(report, true);
  report->add_option("--m", o.m_group, "generator file of M");
  report->add_option("--p", o.p_group, "generator file of P");
  report->add_option("--arc-samples", o.arc_samples, "s-arcs sampled per s");
  report->add_option("--max-s", o.max_s, "largest s");
  bound_seed(report);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "construct") return cmd_construct(o, out);
    if (name == "quotient") return cmd_quotient(o, out, err);
    if (name == "cover") return emit_graph(o, standard_double_cover(load_graph(o.graph)), out);
    if (name == "dense") return cmd_dense(o, out);
    if (name == "triangle") return cmd_triangle(o, out);
    if (name == "find") return cmd_find(o, out);
    if (name == "verify") return cmd_verify(o, out);
    if (name == "corpus") return cmd_corpus(o, out, err);
    if (name == "report") return cmd_report(o, out);
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const BoundExceededError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace polycirc::cli

// powerph: persistent homology of graph power filtrations.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage/input error,
// 3 resource budget exceeded (or rows left unverified).

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "powerph/error.hpp"
#include "powerph/generators.hpp"
#include "powerph/geometry.hpp"
#include "powerph/io.hpp"
#include "powerph/verify.hpp"

using namespace powerph;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3;

struct Config {
  std::string input;
  std::string gen;
  int max_dim = 3;
  int max_scale = 0;
  std::string format = "json";
  std::size_t budget = kDefaultNormBudget;
  std::size_t width_budget = kDefaultWidthBudget;
  std::size_t simplex_budget = FiltrationOptions{}.simplex_budget;
  std::string seeds;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string suite;
  std::string cls;
  int m = 1;
  std::string metric = "ambient";
  std::string output;

  json echo() const {
    return {{"input", input},           {"gen", gen},
            {"max_dim", max_dim},       {"max_scale", max_scale},
            {"format", format},         {"budget", budget},
            {"width_budget", width_budget}, {"simplex_budget", simplex_budget},
            {"seeds", seeds},           {"seed", seed},
            {"threads", threads},       {"suite", suite},
            {"class", cls},             {"m", m},
            {"metric", metric}};
  }
  SliceMetric slice_metric() const {
    if (metric == "ambient") return SliceMetric::ambient;
    if (metric == "skeleton") return SliceMetric::skeleton;
    throw InputError("metric must be 'ambient' or 'skeleton'");
  }
  BoundOptions bound_options() const {
    BoundOptions b;
    b.norm_budget = budget;
    b.width_budget = width_budget;
    b.metric = slice_metric();
    return b;
  }
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// "a..b" or "a"
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InputError("bad range '" + text + "' (expected a..b)");
  }
}

struct Input {
  std::string name;
  Graph graph;
  json info;
};

std::vector<Input> load_inputs(const Config& cfg) {
  if (cfg.input.empty() == cfg.gen.empty()) throw InputError("give exactly one of --input or --gen");
  std::vector<Input> out;
  if (!cfg.input.empty()) {
    auto parsed = read_graph_file(cfg.input);
    json info = {{"path", cfg.input}, {"vertices", parsed.graph.num_vertices()}, {"edges", parsed.graph.num_edges()}};
    if (parsed.remapped()) info["original_ids"] = parsed.original_ids;
    out.push_back({cfg.input, std::move(parsed.graph), std::move(info)});
    return out;
  }
  auto spec = FamilySpec::parse(cfg.gen);
  std::vector<std::uint64_t> seeds{cfg.seed};
  if (!cfg.seeds.empty()) {
    auto [lo, hi] = parse_range(cfg.seeds);
    seeds.clear();
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  for (auto s : seeds) {
    Graph g = generate(spec, s);
    json info = {{"gen", spec.to_string()}, {"seed", s}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
    out.push_back({spec.to_string() + (seeds.size() > 1 ? "#" + std::to_string(s) : ""), std::move(g), info});
  }
  return out;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_pd(const Config& cfg) {
  Timer timer;
  auto inputs = load_inputs(cfg);
  if (inputs.size() != 1) throw InputError("pd takes a single graph");
  auto dm = shortest_paths(inputs[0].graph);
  Scale scale = cfg.max_scale > 0 ? cfg.max_scale : std::max(dm.diameter(), 1);
  auto fc = build_filtration(dm, cfg.max_dim, scale, {cfg.simplex_budget});
  ReductionOptions ro;
  ro.representatives = false;
  auto pd = compute_pd(fc, ro);
  Sink sink(cfg.output);
  if (cfg.format == "csv") {
    write_pd_csv(pd, sink.out());
  } else if (cfg.format == "svg") {
    write_pd_svg(pd, sink.out());
  } else {
    json j = to_json(pd);
    j["graph"] = inputs[0].info;
    j["meta"] = metadata(cfg.echo(), timer.seconds());
    j["meta"]["vertices"] = inputs[0].graph.num_vertices();
    j["meta"]["edges"] = inputs[0].graph.num_edges();
    j["meta"]["max_dim"] = cfg.max_dim;
    j["meta"]["max_scale"] = scale;
    j["meta"]["simplices"] = fc.size();
    sink.out() << j.dump(2) << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg) {
  Timer timer;
  json graphs = json::array();
  json facts = json::array();
  std::size_t mismatches = 0, violations = 0, unverified = 0;

  auto run = [&](const std::string& name, const Graph& g, int max_dim, json info) {
    auto pd1 = verify_pd1(g);
    json entry = {{"name", name}, {"graph", std::move(info)}, {"pd1", to_json(pd1)}};
    if (!pd1.ok) ++mismatches;
    if (max_dim >= 2) {
      auto dm = shortest_paths(g);
      Scale scale = cfg.max_scale > 0 ? cfg.max_scale : std::max(dm.diameter(), 1);
      auto fc = build_filtration(dm, max_dim, scale, {cfg.simplex_budget});
      auto bounds = verify_bounds(fc, compute_pd(fc), dm, cfg.bound_options());
      violations += bounds.violations();
      unverified += bounds.unverified();
      entry["bounds"] = to_json(bounds);
    }
    graphs.push_back(std::move(entry));
  };

  if (!cfg.suite.empty()) {
    if (cfg.suite != "worked-examples") throw InputError("unknown suite '" + cfg.suite + "'");
    auto [lo, hi] = cfg.seeds.empty() ? std::pair<std::uint64_t, std::uint64_t>{1, 100} : parse_range(cfg.seeds);
    for (auto& ng : example_corpus(lo, hi)) run(ng.name, ng.graph, ng.max_dim, json::object());
    for (auto& f : worked_example_facts()) {
      if (!f.ok) ++mismatches;
      facts.push_back({{"name", f.name}, {"ok", f.ok}, {"detail", f.detail}});
    }
  } else {
    for (auto& in : load_inputs(cfg)) run(in.name, in.graph, cfg.max_dim, in.info);
  }

  json j = {{"graphs", graphs},
            {"facts", facts},
            {"summary", {{"mismatches", mismatches}, {"violations", violations}, {"unverified", unverified}}},
            {"meta", metadata(cfg.echo(), timer.seconds())}};
  Sink sink(cfg.output);
  sink.out() << j.dump(2) << '\n';
  if (mismatches || violations) return kMismatch;
  if (unverified) return kBudget;
  return kOk;
}

int cmd_geom(const Config& cfg) {
  Timer timer;
  auto inputs = load_inputs(cfg);
  if (inputs.size() != 1) throw InputError("geom takes a single graph");
  if (cfg.cls.empty()) throw InputError("geom needs --class dim:index");
  int dim = 0;
  std::size_t index = 0;
  {
    auto colon = cfg.cls.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(cfg.cls);
      dim = std::stoi(cfg.cls.substr(0, colon));
      index = std::stoul(cfg.cls.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("bad class selector '" + cfg.cls + "' (expected dim:index)");
    }
  }
  if (dim < 0) throw InputError("class dimension must be >= 0");
  auto dm = shortest_paths(inputs[0].graph);
  Scale scale = cfg.max_scale > 0 ? cfg.max_scale : std::max(dm.diameter(), 1);
  auto fc = build_filtration(dm, std::max(cfg.max_dim, dim + 1), scale, {cfg.simplex_budget});
  auto pd = compute_pd(fc);
  if (dim >= pd.num_dims() || index >= pd.pairs(dim).size())
    throw InputError("class " + cfg.cls + " does not exist (dimension " + std::to_string(dim) + " has " +
                     (dim < pd.num_dims() ? std::to_string(pd.pairs(dim).size()) : std::string("no")) + " pairs)");
  const auto& pair = pd.pairs(dim)[index];
  const Chain& rep = pair.representative;

  json j = {{"graph", inputs[0].info},
            {"class", {{"dim", dim}, {"index", index}, {"birth", pair.birth}}},
            {"representative", to_json(rep, fc)},
            {"volume", chain_volume(rep)}};
  j["class"]["death"] = pair.death ? json(*pair.death) : json(nullptr);
  if (dim == 1) j["shortest_basis"] = to_json(shortest_h1_basis(inputs[0].graph));
  if (dim >= 1) j["norm"] = to_json(class_norm(fc, rep, pair.birth, cfg.budget));
  if (dim >= 2) {
    auto support = SupportComplex::from_chain(fc, rep, dm, pair.birth);
    auto w = width_of_surface(support, cfg.slice_metric());
    j["width"] = to_json(w);
    j["class_width"] = to_json(width_of_class(fc, rep, pair.birth, dm, cfg.width_budget, cfg.slice_metric()));
    j["sweepout"] = to_json(sweepout(support, w.base_vertex, cfg.slice_metric()));
    if (dim == 2) {
      auto tt = thick_thin(support, cfg.m);
      j["decomposition"] = to_json(tt);
      json rho = json::object();
      for (std::size_t i = 0; i < support.num_vertices(); ++i)
        rho[std::to_string(support.global(i))] = tt.rho[i];
      j["injectivity_radius"] = rho;
    }
  }
  j["meta"] = metadata(cfg.echo(), timer.seconds());
  Sink sink(cfg.output);
  sink.out() << j.dump(2) << '\n';
  return kOk;
}

int cmd_gen(const Config& cfg) {
  auto inputs = load_inputs(cfg);
  Sink sink(cfg.output);
  for (const auto& in : inputs) {
    sink.out() << "# " << in.name << " vertices " << in.graph.num_vertices() << " edges " << in.graph.num_edges()
               << '\n';
    sink.out() << to_edge_list(in.graph);
  }
  return kOk;
}

// "name:a..b[,rest]" expands the first parameter over the range.
std::vector<FamilySpec> expand_family(const std::string& text) {
  auto colon = text.find(':');
  auto dots = text.find("..");
  if (colon == std::string::npos || dots == std::string::npos) return {FamilySpec::parse(text)};
  auto comma = text.find(',', colon);
  std::string first = text.substr(colon + 1, (comma == std::string::npos ? text.size() : comma) - colon - 1);
  std::string rest = comma == std::string::npos ? "" : text.substr(comma);
  auto [lo, hi] = parse_range(first);
  std::vector<FamilySpec> out;
  for (auto p = lo; p <= hi; ++p) out.push_back(FamilySpec::parse(text.substr(0, colon) + ":" + std::to_string(p) + rest));
  return out;
}

int cmd_explore(const Config& cfg) {
  if (cfg.gen.empty()) throw InputError("explore needs --gen family:a..b");
  ExploreOptions opt;
  opt.max_dim = std::max(cfg.max_dim, 3);
  opt.max_scale = cfg.max_scale;
  opt.bounds = cfg.bound_options();
  std::vector<ConjectureRow> rows;
  std::vector<std::uint64_t> seeds{cfg.seed};
  if (!cfg.seeds.empty()) {
    auto [lo, hi] = parse_range(cfg.seeds);
    seeds.clear();
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  auto family = expand_family(cfg.gen);
  for (auto s : seeds) {
    opt.seed = s;
    auto part = explore_conjectures(family, opt);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  Sink sink(cfg.output);
  write_conjecture_csv(rows, sink.out());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistent homology of graph power filtrations"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "key=value configuration file (flags override)");
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("POWERPH_THREADS")) cfg.threads = std::atoi(env);
  app.add_option("--input", cfg.input, "edge-list file (u v per line, # comments)");
  app.add_option("--gen", cfg.gen, "generator spec, e.g. cycle:6, gnp:12,0.3, thin_box:8");
  app.add_option("--max-dim", cfg.max_dim, "largest simplex dimension (diagrams in dims 0..max-dim-1)")
      ->check(CLI::Range(1, 12));
  app.add_option("--max-scale", cfg.max_scale, "largest filtration scale (default: graph diameter)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--budget", cfg.budget, "max boundary rank for exhaustive norm search");
  app.add_option("--width-budget", cfg.width_budget, "max boundary rank for exhaustive class-width search");
  app.add_option("--simplex-budget", cfg.simplex_budget, "max simplices materialized");
  app.add_option("--seeds", cfg.seeds, "seed range a..b for random families");
  app.add_option("--seed", cfg.seed, "seed for random families");
  app.add_option("--threads", cfg.threads, "OpenMP threads (env POWERPH_THREADS)");
  app.add_option("--suite", cfg.suite, "built-in suite (worked-examples)");
  app.add_option("--class", cfg.cls, "class selector dim:index");
  app.add_option("--m", cfg.m, "thick-thin level")->check(CLI::PositiveNumber);
  app.add_option("--metric", cfg.metric, "slice diameter metric")->check(CLI::IsMember({"ambient", "skeleton"}));
  app.add_option("--output,-o", cfg.output, "output file (default stdout)");

  auto* pd = app.add_subcommand("pd", "persistence diagrams");
  auto* verify = app.add_subcommand("verify", "check the PD1 formula and the lifespan bounds");
  auto* geom = app.add_subcommand("geom", "norm, width and decomposition of one class");
  auto* gen = app.add_subcommand("gen", "print a generated graph as an edge list");
  auto* explore = app.add_subcommand("explore", "conjecture exploration CSV");
  for (auto* sub : {pd, verify, geom, gen, explore}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
  try {
    if (*pd) return cmd_pd(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*geom) return cmd_geom(cfg);
    if (*gen) return cmd_gen(cfg);
    if (*explore) return cmd_explore(cfg);
  } catch (const ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

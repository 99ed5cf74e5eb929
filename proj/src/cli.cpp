#include "algeq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algeq/criteria.hpp"
#include "algeq/decision.hpp"
#include "algeq/harness.hpp"
#include "algeq/io.hpp"

namespace algeq {

namespace {

using Record = nlohmann::ordered_json;

struct GlobalOptions {
  std::string prime = "m31";
  std::optional<std::uint64_t> seed;
  std::size_t repeats = 1;
  std::optional<std::string> confidence;
  bool json = false;
};

// key=value lines; nested objects use dotted keys, arrays are comma-joined.
void print_text(const Record& rec, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : rec.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_text(value, name, out);
      continue;
    }
    out << name << "=";
    if (value.is_null()) {
      out << "none";
    } else if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out << ",";
        out << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
      }
    } else {
      out << value.dump();
    }
    out << "\n";
  }
}

void emit(const Record& rec, const GlobalOptions& opts, std::ostream& out) {
  if (opts.json)
    out << rec.dump(2) << "\n";
  else
    print_text(rec, "", out);
}

Record bound_record(const Rational& r) {
  Record b;
  b["numerator"] = r.numerator().str();
  b["denominator"] = r.denominator().str();
  b["fraction"] = r.fraction();
  b["decimal"] = r.scientific();
  return b;
}

MixedGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

// Smallest k with bound^k <= q; 1 when the bound is already 0.
std::size_t repeats_for_confidence(const Rational& bound, const std::string& q_text) {
  const Rational q = Rational::parse_decimal(q_text);
  if (bound.is_zero()) return 1;
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "--confidence must be positive");
  Rational power = bound;
  for (std::size_t k = 1; k <= 4096; ++k) {
    if (power <= q) return k;
    if (bound >= Rational::one())
      break;
    power = power * bound;
  }
  throw Error(ErrorKind::InvalidArgument,
              "single-run bound " + bound.fraction() + " cannot reach confidence " + q_text);
}

class Runner {
 public:
  Runner(const GlobalOptions& opts, std::ostream& out) : opts_(opts), out_(out) {}

  std::uint64_t seed() {
    if (!seed_) {
      if (opts_.seed) {
        seed_ = *opts_.seed;
      } else {
        std::random_device rd;
        seed_ = (std::uint64_t{rd()} << 32) ^ rd();
      }
    }
    return *seed_;
  }

  PrimeModulus prime() const { return PrimeModulus::parse(opts_.prime); }

  std::size_t repeats(const std::optional<Rational>& single_bound) const {
    if (opts_.confidence && single_bound) return repeats_for_confidence(*single_bound, *opts_.confidence);
    return opts_.repeats;
  }

  int decision(const std::string& command, const MixedGraph& names, const DecisionTask& task,
               std::size_t k) {
    const Decision d = decide_with_repeats(task, k, seed());
    Record rec;
    rec["command"] = command;
    rec["verdict"] = d.verdict;
    rec["bound"] = bound_record(d.error_bound);
    rec["repeats"] = d.repeats_used;
    rec["repeats_requested"] = k;
    rec["seed"] = std::to_string(seed());
    rec["prime"] = prime().name();
    Record diag;
    if (d.diagnostics.witness_pair)
      diag["witness"] = {names.name(d.diagnostics.witness_pair->first),
                         names.name(d.diagnostics.witness_pair->second)};
    else
      diag["witness"] = nullptr;
    diag["singular_pivot_seen"] = d.diagnostics.singular_pivot_seen;
    rec["diagnostics"] = diag;
    emit(rec, opts_, out_);
    return d.verdict ? 0 : 1;
  }

  int check_constraint(const std::string& graph_path, const std::string& constraint_path) {
    const MixedGraph g = load_graph(graph_path);
    const Constraint f = parse_constraint(read_file(constraint_path), g);
    const PrimeModulus m = prime();
    const std::size_t k = repeats(error_bound_constraint(g, f, m));
    return decision("check-constraint", g,
                    [&](RandomStream& rng) { return decide_constraint(g, f, m, rng); }, k);
  }

  int check_inclusion(const std::string& g_path, const std::string& gp_path) {
    const MixedGraph g = load_graph(g_path);
    const MixedGraph gp = align_by_name(g, load_graph(gp_path));
    require_acyclic(g, "G");
    require_bap(gp, "G'");
    const PrimeModulus m = prime();
    const std::size_t k = repeats(inclusion_bound(g, gp, m));
    return decision("check-inclusion", g,
                    [&](RandomStream& rng) { return decide_inclusion(g, gp, m, rng); }, k);
  }

  int check_equivalence(const std::string& g_path, const std::string& gp_path) {
    const MixedGraph g = load_graph(g_path);
    const MixedGraph gp = align_by_name(g, load_graph(gp_path));
    require_bap(g, "G");
    require_bap(gp, "G'");
    const PrimeModulus m = prime();
    std::optional<Rational> single;
    if (skeleton(g) == skeleton(gp))
      single = inclusion_bound(g, gp, m);
    else
      single = Rational::zero();
    return decision("check-equivalence", g,
                    [&](RandomStream& rng) { return decide_equivalence(g, gp, m, rng); },
                    repeats(single));
  }

  int classify_graph(const std::string& path) {
    const MixedGraph g = load_graph(path);
    const GraphClassReport r = classify(g);
    Record rec;
    rec["command"] = "classify-graph";
    rec["nodes"] = g.size();
    rec["directed_edges"] = g.directed_edges().size();
    rec["bidirected_edges"] = g.bidirected_edges().size();
    rec["acyclic"] = r.acyclic;
    rec["bow_free"] = r.bow_free;
    rec["bap"] = r.is_bap;
    rec["dag"] = r.is_dag;
    rec["ancestral"] = r.ancestral;
    if (r.acyclic)
      rec["longest_directed_path"] = longest_directed_path(g);
    else
      rec["longest_directed_path"] = nullptr;
    emit(rec, opts_, out_);
    return 0;
  }

  int classify_set(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(dir))
      throw Error(ErrorKind::InvalidArgument, dir + " is not a directory");
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error(ErrorKind::InvalidArgument, dir + " contains no .graph files");

    std::vector<MixedGraph> graphs;
    for (const auto& f : files) {
      MixedGraph g = load_graph(f.string());
      if (!graphs.empty()) {
        try {
          g = align_by_name(graphs.front(), g);
        } catch (const Error& e) {
          throw Error(e.kind(), f.string() + ": " + e.what());
        }
      }
      if (!classify(g).is_bap) throw Error(ErrorKind::NotBAP, f.string() + " must be a BAP");
      graphs.push_back(std::move(g));
    }

    const PrimeModulus m = prime();
    const auto report = partition_classes(graphs, m, opts_.repeats, seed());
    Record rec;
    rec["command"] = "classify-set";
    rec["graphs"] = graphs.size();
    rec["class_count"] = report.classes.size();
    Record classes = Record::object();
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
      std::vector<std::string> members;
      for (const std::size_t i : report.classes[c]) members.push_back(files[i].filename().string());
      classes[std::to_string(c + 1)] = members;
    }
    rec["class"] = classes;
    rec["repeats"] = report.repeats;
    rec["seed"] = std::to_string(seed());
    rec["prime"] = m.name();
    rec["undetermined_pairs"] = report.undetermined_pairs;
    rec["randomized_calls"] = report.randomized_calls;
    rec["consistency_failures"] = report.consistency_failures;
    emit(rec, opts_, out_);
    return 0;
  }

  int error_bound(const std::vector<std::string>& pair, std::optional<std::size_t> generic) {
    const PrimeModulus m = prime();
    Record rec;
    rec["command"] = "error-bound";
    Rational single;
    if (generic) {
      single = error_bound_generic(*generic, m);
      rec["n"] = *generic;
    } else {
      const MixedGraph g = load_graph(pair.at(0));
      const MixedGraph gp = align_by_name(g, load_graph(pair.at(1)));
      require_acyclic(g, "G");
      require_bap(gp, "G'");
      single = error_bound_inclusion(g, gp, m);
      rec["longest_directed_path"] = longest_directed_path(g);
    }
    const std::size_t k = repeats(single);
    Rational bound = single.pow(k);
    if (Rational::one() < bound) bound = Rational::one();
    rec["prime"] = m.name();
    rec["repeats"] = k;
    rec["single_run_bound"] = bound_record(single);
    rec["bound"] = bound_record(bound);
    emit(rec, opts_, out_);
    return 0;
  }

  int enumerate_family(const std::string& family, std::size_t n, bool allow_large,
                       const std::string& out_dir) {
    GraphFamilySpec spec;
    spec.n = n;
    spec.allow_large = allow_large;
    if (family == "baps")
      spec.family = GraphFamily::AllBAPs;
    else if (family == "dags")
      spec.family = GraphFamily::AllDAGs;
    else if (family == "complete-baps")
      spec.family = GraphFamily::CompleteBAPs;
    else if (family == "extremal")
      spec.family = GraphFamily::ExtremalFamily;
    else
      throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
    const auto graphs = enumerate(spec);

    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        char file[32];
        std::snprintf(file, sizeof file, "g%05zu.graph", i);
        std::ofstream f(std::filesystem::path(out_dir) / file);
        f << serialize_graph(graphs[i]);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write to " + out_dir);
      }
    }
    if (opts_.json) {
      Record rec;
      rec["command"] = "enumerate";
      rec["family"] = family;
      rec["n"] = n;
      rec["count"] = graphs.size();
      Record list = Record::array();
      for (const auto& g : graphs) list.push_back(serialize_graph(g));
      rec["graphs"] = list;
      out_ << rec.dump(2) << "\n";
      return 0;
    }
    out_ << "family=" << family << "\nn=" << n << "\ncount=" << graphs.size() << "\n";
    if (out_dir.empty())
      for (std::size_t i = 0; i < graphs.size(); ++i)
        out_ << "# graph " << i << "\n" << serialize_graph(graphs[i]);
    return 0;
  }

  int bench(std::size_t n, std::size_t trials) {
    const PrimeModulus m = prime();
    const Table1Report r = table1_experiment(n, m, trials, seed());
    Record rec;
    rec["command"] = "bench";
    rec["n"] = r.n;
    rec["prime"] = r.prime.name();
    rec["seed"] = std::to_string(seed());
    rec["instances"] = r.instances;
    rec["false_positives"] = r.false_positive_count;
    std::ostringstream ms;
    ms.imbue(std::locale::classic());
    ms.setf(std::ios::fixed);
    ms.precision(4);
    ms << r.mean_time_ms;
    rec["mean_time_ms"] = ms.str();
    rec["bound"] = bound_record(r.theoretical_bound);
    emit(rec, opts_, out_);
    return 0;
  }

 private:
  // Bound for one inclusion run; 0 when gp is complete (no constraints).
  static Rational inclusion_bound(const MixedGraph& g, const MixedGraph& gp, const PrimeModulus& m) {
    try {
      return error_bound_inclusion(g, gp, m);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoNonadjacentPair) return Rational::zero();
      throw;
    }
  }

  const GlobalOptions& opts_;
  std::ostream& out_;
  std::optional<std::uint64_t> seed_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic equivalence and inclusion tests for linear SEMs on mixed graphs", "algeq"};
  app.require_subcommand(1);
  GlobalOptions opts;
  app.add_option("--prime", opts.prime, "m31, p63, m127 or a decimal prime")->capture_default_str();
  app.add_option("--seed", opts.seed, "master seed (default: from entropy)");
  app.add_option("--repeats", opts.repeats, "independent repetitions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--confidence", opts.confidence,
                 "pick the smallest repeat count with bound^k <= q");
  app.add_flag("--json", opts.json, "machine-readable output");

  std::string a, b;
  auto* constraint_cmd = app.add_subcommand("check-constraint", "does G impose the constraint?");
  constraint_cmd->add_option("graph", a)->required();
  constraint_cmd->add_option("constraint", b)->required();

  auto* inclusion_cmd = app.add_subcommand("check-inclusion", "is the model of G inside that of G'?");
  inclusion_cmd->add_option("G", a)->required();
  inclusion_cmd->add_option("Gp", b)->required();

  auto* equivalence_cmd = app.add_subcommand("check-equivalence", "are two BAPs algebraically equivalent?");
  equivalence_cmd->add_option("G", a)->required();
  equivalence_cmd->add_option("Gp", b)->required();

  auto* classify_cmd = app.add_subcommand("classify-graph", "structural report");
  classify_cmd->add_option("graph", a)->required();

  auto* set_cmd = app.add_subcommand("classify-set", "equivalence classes of the .graph files in DIR");
  set_cmd->add_option("dir", a)->required();

  std::vector<std::string> pair;
  std::optional<std::size_t> generic;
  auto* bound_cmd = app.add_subcommand("error-bound", "inclusion error bound");
  auto* pair_opt = bound_cmd->add_option("--pair", pair, "G Gp")->expected(2);
  auto* generic_opt = bound_cmd->add_option("--generic", generic, "node count N");
  pair_opt->excludes(generic_opt);
  bound_cmd->require_option(1);

  std::string family;
  std::size_t n = 0;
  bool allow_large = false;
  std::string out_dir;
  auto* enum_cmd = app.add_subcommand("enumerate", "list a graph family");
  enum_cmd->add_option("--family", family, "baps, dags, complete-baps or extremal")->required();
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_flag("--allow-large", allow_large, "permit n > 6");
  enum_cmd->add_option("--out", out_dir, "write one .graph file per member into this directory");

  std::size_t bench_n = 0, trials = 0;
  auto* bench_cmd = app.add_subcommand("bench", "false-positive and timing experiment on extremal graphs");
  bench_cmd->add_option("--n", bench_n)->required();
  bench_cmd->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Runner runner(opts, out);
    if (*constraint_cmd) return runner.check_constraint(a, b);
    if (*inclusion_cmd) return runner.check_inclusion(a, b);
    if (*equivalence_cmd) return runner.check_equivalence(a, b);
    if (*classify_cmd) return runner.classify_graph(a);
    if (*set_cmd) return runner.classify_set(a);
    if (*bound_cmd) return runner.error_bound(pair, generic);
    if (*enum_cmd) return runner.enumerate_family(family, n, allow_large, out_dir);
    if (*bench_cmd) return runner.bench(bench_n, trials);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace algeq

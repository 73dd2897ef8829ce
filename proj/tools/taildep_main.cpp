// taildep: find groups of variables prone to being simultaneously large.
//
// Subcommands:
//   simulate   draw a benchmark dataset from the noisy asymmetric
//              logistic model together with its planted structure
//   discover   run the CLEF lattice search on a CSV dataset
//   damex      run the DAMEX cone-mass baseline on a CSV dataset
//   benchmark  replicate simulate+discover+score and tabulate the results
//   score      compare a discovered family against a ground-truth file
//
// Exit codes: 0 success, 1 internal error, 2 data error, 3 config error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "taildep/clef.hpp"
#include "taildep/damex.hpp"
#include "taildep/experiments.hpp"
#include "taildep/serialize.hpp"
#include "taildep/simulation.hpp"

namespace {

using namespace taildep;

int default_threads() {
    if (const char* env = std::getenv("TAILDEP_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // resolve to hardware concurrency
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path);
    out << content;
    if (!out) throw DataError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TiePolicy tie_policy_from_name(const std::string& name) {
    if (name == "first" || name == "first-occurrence")
        return TiePolicy::kFirstOccurrence;
    if (name == "jitter") return TiePolicy::kJitter;
    if (name == "forbid") return TiePolicy::kForbid;
    throw ConfigError("unknown tie policy '" + name +
                      "' (expected first, jitter or forbid)");
}

struct SharedDataArgs {
    std::string input_path;
    std::string delimiter = ",";
    bool header = false;
    std::string ties = "first";
    std::uint64_t jitter_seed = 0;
    int k = 0;
    double k_over_n = 0.0;
};

void add_data_options(CLI::App* cmd, SharedDataArgs& args) {
    cmd->add_option("input", args.input_path, "input CSV file")->required();
    cmd->add_option("--delimiter", args.delimiter, "CSV delimiter")
        ->default_val(",");
    cmd->add_flag("--header", args.header, "first CSV row is a header");
    cmd->add_option("--ties", args.ties,
                    "tie policy: first, jitter or forbid")
        ->default_val("first");
    cmd->add_option("--jitter-seed", args.jitter_seed,
                    "seed for the jitter tie policy");
    auto* opt_k = cmd->add_option("--k", args.k,
                                  "number of tail order statistics");
    auto* opt_kn = cmd->add_option("--k-over-n", args.k_over_n,
                                   "tail fraction; k = round(n * k/n)");
    opt_k->excludes(opt_kn);
    opt_kn->excludes(opt_k);
}

RankedData load_ranked(const SharedDataArgs& args) {
    if (args.delimiter.size() != 1)
        throw ConfigError("delimiter must be a single character");
    CsvOptions csv;
    csv.delimiter = args.delimiter[0];
    csv.header = args.header;
    const DataMatrix data = load_csv(args.input_path, csv);
    if (data.d() > FeatureSet::kMaxFeatures)
        throw DataError("dataset has " + std::to_string(data.d()) +
                        " columns; at most " +
                        std::to_string(FeatureSet::kMaxFeatures) +
                        " are supported");
    return compute_ranks(data, tie_policy_from_name(args.ties),
                         args.jitter_seed);
}

TailParams resolve_k(const SharedDataArgs& args, int n) {
    if (args.k <= 0 && args.k_over_n <= 0.0)
        throw ConfigError("exactly one of --k or --k-over-n is required");
    TailParams p;
    p.k = args.k > 0
              ? args.k
              : static_cast<int>(std::lround(args.k_over_n * n));
    p.validate(n);
    return p;
}

int cmd_simulate(int n, int d, int K, double w, int min_size, int max_size,
                 double geom_p, std::uint64_t seed, int threads,
                 const std::string& out_path,
                 const std::string& truth_path) {
    StructureGenConfig cfg;
    cfg.d = d;
    cfg.K = K;
    cfg.min_size = min_size;
    cfg.max_size = max_size;
    cfg.geom_p = geom_p;
    const RngStream stream(seed, 0);
    const SimulatedBenchmark sim =
        simulate_benchmark(n, cfg, w, stream, threads);
    write_csv(out_path, sim.data);
    if (!truth_path.empty())
        write_file(truth_path, structure_json(sim.truth, cfg, seed));
    std::cout << "wrote " << n << "x" << d << " dataset to " << out_path;
    if (!truth_path.empty()) std::cout << ", structure to " << truth_path;
    std::cout << "\n";
    return 0;
}

int cmd_discover(const SharedDataArgs& data_args,
                 const std::string& criterion, const TestConfig& cfg,
                 int threads, const std::string& out_path) {
    const RankedData rd = load_ranked(data_args);
    const TailParams p = resolve_k(data_args, rd.n());
    const CriterionKind kind = criterion_from_name(criterion);

    std::cout << "n = " << rd.n() << ", d = " << rd.d() << ", k = " << p.k
              << " (k/n = " << static_cast<double>(p.k) / rd.n()
              << "), criterion = " << criterion_name(kind) << "\n";
    const auto observer = [](int level, std::size_t candidates,
                             std::size_t kept) {
        std::cerr << "level " << level << ": " << candidates
                  << " candidates, " << kept << " kept\n";
    };
    const DiscoveryReport report =
        run_clef(rd, p, cfg, kind, threads, observer);

    std::cout << "maximal family (" << report.maximal.size() << " sets):\n";
    for (const FeatureSet& s : report.maximal)
        std::cout << "  " << s.to_string() << "\n";
    if (!out_path.empty()) {
        write_file(out_path, discovery_report_json(report));
        std::cout << "report written to " << out_path << "\n";
    }
    return 0;
}

int cmd_damex(const SharedDataArgs& data_args, double epsilon,
              int top_subsets, int threads, const std::string& out_path) {
    const RankedData rd = load_ranked(data_args);
    DamexConfig cfg;
    cfg.epsilon = epsilon;
    cfg.top_k_subsets = top_subsets;
    cfg.p = resolve_k(data_args, rd.n());
    const std::vector<ConeMass> cones = damex_run(rd, cfg, threads);

    std::cout << "n = " << rd.n() << ", d = " << rd.d() << ", k = "
              << cfg.p.k << ", " << cones.size() << " cones\n";
    for (const ConeMass& c : cones)
        std::cout << "  " << c.features.to_string() << "  mass "
                  << c.mass << "\n";
    if (!out_path.empty()) {
        write_file(out_path, cone_masses_json(cones, cfg));
        std::cout << "report written to " << out_path << "\n";
    }
    return 0;
}

int cmd_benchmark(ExperimentConfig cfg, const std::string& algorithms,
                  const std::string& out_path,
                  const std::string& table_path) {
    cfg.algorithms.clear();
    std::stringstream ss(algorithms);
    std::string name;
    while (std::getline(ss, name, ','))
        if (!name.empty()) cfg.algorithms.push_back(algorithm_from_name(name));
    cfg.validate();

    const BenchmarkReport report = run_benchmark(cfg);
    const std::string table = format_table(report);
    std::cout << table;
    if (!out_path.empty()) write_file(out_path, benchmark_report_json(report));
    if (!table_path.empty()) write_file(table_path, table);
    return 0;
}

int cmd_score(const std::string& report_path, const std::string& truth_path,
              const std::string& out_path) {
    const std::vector<FeatureSet> found =
        family_from_json(read_file(report_path));
    const std::vector<FeatureSet> truth =
        family_from_json(read_file(truth_path));
    const Metrics m = score(found, truth);
    const std::string text = metrics_json(m);
    std::cout << text;
    if (!out_path.empty()) write_file(out_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-based discovery of jointly extreme variable groups"};
    app.require_subcommand(1);

    // ---- simulate ----
    auto* sim = app.add_subcommand(
        "simulate", "draw a noisy asymmetric logistic benchmark dataset");
    int sim_n = 50000, sim_d = 100, sim_K = 80;
    int sim_min = 2, sim_max = 8;
    double sim_w = 0.1, sim_geom_p = 0.25;
    std::uint64_t sim_seed = 1;
    std::string sim_out = "data.csv", sim_truth = "truth.json";
    int sim_threads = default_threads();
    sim->add_option("--n", sim_n, "sample size")->default_val(50000);
    sim->add_option("--d", sim_d, "dimension")->default_val(100);
    sim->add_option("--K", sim_K, "number of dependent subsets")
        ->default_val(80);
    sim->add_option("--w", sim_w, "logistic dependence parameter")
        ->default_val(0.1);
    sim->add_option("--min-size", sim_min, "smallest subset size")
        ->default_val(2);
    sim->add_option("--max-size", sim_max, "largest subset size")
        ->default_val(8);
    sim->add_option("--geom-p", sim_geom_p,
                    "truncated geometric size parameter")
        ->default_val(0.25);
    sim->add_option("--seed", sim_seed, "RNG seed")->default_val(1);
    sim->add_option("--threads", sim_threads, "worker threads");
    sim->add_option("--out", sim_out, "output CSV path")
        ->default_val("data.csv");
    sim->add_option("--truth-out", sim_truth,
                    "ground-truth JSON path (empty to skip)")
        ->default_val("truth.json");

    // ---- discover ----
    auto* disc = app.add_subcommand(
        "discover", "run the CLEF lattice search on a CSV dataset");
    SharedDataArgs disc_data;
    add_data_options(disc, disc_data);
    std::string disc_criterion = "hill";
    TestConfig disc_cfg;
    int disc_threads = default_threads();
    std::string disc_out = "report.json";
    disc->add_option("--criterion", disc_criterion,
                     "clef, asymptotic, peng or hill")
        ->default_val("hill");
    disc->add_option("--delta", disc_cfg.delta, "test level")
        ->default_val(0.001);
    disc->add_option("--kappa-min", disc_cfg.kappa_min,
                     "tolerance of the asymptotic criterion")
        ->default_val(0.08);
    disc->add_option("--clef-c", disc_cfg.clef_c,
                     "threshold of the original CLEF criterion")
        ->default_val(0.05);
    disc->add_option("--rho-guard", disc_cfg.rho_guard,
                     "Peng low-mass stopping threshold")
        ->default_val(0.05);
    disc->add_option("--threads", disc_threads, "worker threads");
    disc->add_option("--out", disc_out, "report JSON path (empty to skip)")
        ->default_val("report.json");

    // ---- damex ----
    auto* dmx = app.add_subcommand(
        "damex", "run the DAMEX cone-mass baseline on a CSV dataset");
    SharedDataArgs dmx_data;
    add_data_options(dmx, dmx_data);
    double dmx_epsilon = 0.1;
    int dmx_top = 80;
    int dmx_threads = default_threads();
    std::string dmx_out = "damex.json";
    dmx->add_option("--epsilon", dmx_epsilon, "cone thickening parameter")
        ->default_val(0.1);
    dmx->add_option("--top-subsets", dmx_top, "number of cones retained")
        ->default_val(80);
    dmx->add_option("--threads", dmx_threads, "worker threads");
    dmx->add_option("--out", dmx_out, "report JSON path (empty to skip)")
        ->default_val("damex.json");

    // ---- benchmark ----
    auto* bench = app.add_subcommand(
        "benchmark", "replicated simulate+discover+score comparison");
    ExperimentConfig bench_cfg;
    bench_cfg.threads = default_threads();
    std::string bench_algorithms = "clef,asymptotic,peng,hill,damex";
    std::string bench_out = "benchmark.json", bench_table;
    bench->add_option("--n", bench_cfg.n, "sample size")->default_val(50000);
    bench->add_option("--d", bench_cfg.d, "dimension")->default_val(100);
    bench->add_option("--K", bench_cfg.K, "number of dependent subsets")
        ->default_val(80);
    bench->add_option("--w", bench_cfg.w, "logistic dependence parameter")
        ->default_val(0.1);
    bench->add_option("--geom-p", bench_cfg.geom_p,
                      "truncated geometric size parameter")
        ->default_val(0.25);
    bench->add_option("--min-size", bench_cfg.min_size, "smallest subset")
        ->default_val(2);
    bench->add_option("--max-size", bench_cfg.max_size, "largest subset")
        ->default_val(8);
    bench->add_option("--k-over-n", bench_cfg.k_over_n, "tail fraction")
        ->default_val(0.005);
    bench->add_option("--delta", bench_cfg.delta, "test level")
        ->default_val(0.001);
    bench->add_option("--kappa-min", bench_cfg.kappa_min,
                      "asymptotic criterion tolerance")
        ->default_val(0.08);
    bench->add_option("--clef-c", bench_cfg.clef_c, "original CLEF threshold")
        ->default_val(0.05);
    bench->add_option("--rho-guard", bench_cfg.rho_guard,
                      "Peng low-mass stopping threshold")
        ->default_val(0.05);
    bench->add_option("--damex-epsilon", bench_cfg.damex_epsilon,
                      "DAMEX thickening parameter")
        ->default_val(0.1);
    bench->add_option("--algorithms", bench_algorithms,
                      "comma-separated subset of clef,asymptotic,peng,hill,"
                      "damex")
        ->default_val("clef,asymptotic,peng,hill,damex");
    bench->add_option("--replications", bench_cfg.replications,
                      "number of replications")
        ->default_val(50)
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_cfg.base_seed, "base RNG seed")
        ->default_val(1);
    bench->add_option("--threads", bench_cfg.threads, "worker threads");
    bench->add_option("--out", bench_out, "JSON report path (empty to skip)")
        ->default_val("benchmark.json");
    bench->add_option("--table-out", bench_table,
                      "plain-text table path (empty to skip)");

    // ---- score ----
    auto* sc = app.add_subcommand(
        "score", "compare a discovered family against a ground truth");
    std::string score_report, score_truth, score_out;
    sc->add_option("--report", score_report,
                   "discovery/damex report or plain subsets JSON")
        ->required();
    sc->add_option("--truth", score_truth, "ground-truth JSON")->required();
    sc->add_option("--out", score_out, "metrics JSON path (empty to skip)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;  // help exits 0; bad usage is config
    }

    try {
        if (sim->parsed())
            return cmd_simulate(sim_n, sim_d, sim_K, sim_w, sim_min, sim_max,
                                sim_geom_p, sim_seed, sim_threads, sim_out,
                                sim_truth);
        if (disc->parsed())
            return cmd_discover(disc_data, disc_criterion, disc_cfg,
                                disc_threads, disc_out);
        if (dmx->parsed())
            return cmd_damex(dmx_data, dmx_epsilon, dmx_top, dmx_threads, dmx_out);
        if (bench->parsed())
            return cmd_benchmark(bench_cfg, bench_algorithms, bench_out,
                                 bench_table);
        if (sc->parsed())
            return cmd_score(score_report, score_truth, score_out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

// steiner-ecc: Steiner k-eccentricity toolkit.
//
// Subcommands: ecc (one vertex), all3 (every vertex, k = 3, trees), avg,
// check (randomized cross-validation against the exact oracle), gen (random
// instances), bench (scaling measurements).
//
// Exit codes: 0 ok, 1 check found a mismatch, 2 graph parse error,
// 3 precondition violation, 4 cyclomatic cap exceeded.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner/all_ecc3.hpp"
#include "steiner/block_ecc.hpp"
#include "steiner/errors.hpp"
#include "steiner/general_ecc.hpp"
#include "steiner/generators.hpp"
#include "steiner/graph.hpp"
#include "steiner/graph_io.hpp"
#include "steiner/steiner_oracle.hpp"
#include "steiner/tree_ecc.hpp"

using json = nlohmann::json;
using namespace steiner;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNuCap = 4;

const std::vector<double> kWeightPool{0.5, 1, 2, 3};

int default_nu_cap() {
    if (const char* env = std::getenv("STEINER_ECC_NU_CAP")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw Error("STEINER_ECC_NU_CAP is not an integer");
        }
    }
    return GeneralOptions{}.nu_cap;
}

std::string format_value(double v) {
    if (v == static_cast<double>(static_cast<long long>(v)) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

void require_format(const std::string& format) {
    if (format != "text" && format != "jsonl")
        throw Error("unknown format '" + format + "'");
}

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

enum class Method { automatic, tree, block, general, oracle };

Method parse_method(const std::string& name) {
    if (name == "auto") return Method::automatic;
    if (name == "tree") return Method::tree;
    if (name == "block") return Method::block;
    if (name == "general") return Method::general;
    if (name == "oracle") return Method::oracle;
    throw Error("unknown method '" + name + "'");
}

Method resolve_method(Method m, const Graph& g) {
    if (m != Method::automatic) return m;
    switch (classify(g).graph_class) {
        case GraphClass::tree: return Method::tree;
        case GraphClass::block_graph: return Method::block;
        case GraphClass::general: return Method::general;
    }
    return Method::general;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::tree: return "tree";
        case Method::block: return "block";
        case Method::general: return "general";
        case Method::oracle: return "oracle";
    }
    return "?";
}

EccReport dispatch_ecc(Method m, const Graph& g, VertexId v, int k, int nu_cap,
                       RecursionStats* stats = nullptr) {
    switch (resolve_method(m, g)) {
        case Method::tree: return ecc_k_tree(g, v, k);
        case Method::block: return ecc_k_block(g, v, k);
        case Method::general: return ecc_k_general(g, v, k, {nu_cap}, stats);
        case Method::oracle: return ecc_k_oracle(g, v, k);
        case Method::automatic: break;
    }
    throw Error("unresolved method");
}

struct EccArgs {
    std::string graph_path;
    std::int64_t vertex_label = 0;
    int k = 3;
    std::string method = "auto";
    int nu_cap = 0;
    std::string format = "text";
    bool trace = false;
};

VertexId require_vertex(const ParsedGraph& pg, std::int64_t label) {
    const auto id = pg.id_of_label(label);
    if (!id) throw Error("vertex label " + std::to_string(label) + " not in graph");
    return *id;
}

int cmd_ecc(const EccArgs& args) {
    require_format(args.format);
    const ParsedGraph pg = parse_graph_file(args.graph_path);
    const VertexId v = require_vertex(pg, args.vertex_label);
    const Method method = parse_method(args.method);

    if (args.trace) {
        // one line-delimited record per recursion leaf
        for (const TraceRecord& rec : recursion_trace(pg.graph, v, args.k, {args.nu_cap})) {
            if (args.format == "jsonl") {
                json deleted = json::array();
                for (EdgeId e : rec.deleted_edges)
                    deleted.push_back({pg.label_of(pg.graph.edge(e).u),
                                       pg.label_of(pg.graph.edge(e).v)});
                std::cout << json{{"v", 1},
                                  {"command", "trace"},
                                  {"deleted", deleted},
                                  {"value", rec.value}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << "deleted:";
                for (EdgeId e : rec.deleted_edges)
                    std::cout << ' ' << pg.label_of(pg.graph.edge(e).u) << '-'
                              << pg.label_of(pg.graph.edge(e).v);
                std::cout << " value: " << format_value(rec.value) << '\n';
            }
        }
    }

    const EccReport rep = dispatch_ecc(method, pg.graph, v, args.k, args.nu_cap);

    if (args.format == "jsonl") {
        json record{{"v", 1},
                    {"command", "ecc"},
                    {"vertex", pg.label_of(rep.vertex)},
                    {"k", rep.k},
                    {"method", method_name(resolve_method(method, pg.graph))},
                    {"value", rep.value}};
        json terminals = json::array();
        for (VertexId t : rep.terminals) terminals.push_back(pg.label_of(t));
        json tree = json::array();
        for (const auto& [a, b] : rep.tree_edges)
            tree.push_back({pg.label_of(a), pg.label_of(b)});
        record["terminals"] = terminals;
        record["tree"] = tree;
        std::cout << record.dump() << '\n';
        return kExitOk;
    }

    std::cout << format_value(rep.value) << '\n';
    std::cout << "terminals:";
    for (VertexId t : rep.terminals) std::cout << ' ' << pg.label_of(t);
    std::cout << '\n';
    std::cout << "tree:";
    for (const auto& [a, b] : rep.tree_edges)
        std::cout << ' ' << pg.label_of(a) << '-' << pg.label_of(b);
    std::cout << '\n';
    return kExitOk;
}

struct All3Args {
    std::string graph_path;
    std::string format = "text";
};

int cmd_all3(const All3Args& args) {
    require_format(args.format);
    const ParsedGraph pg = parse_graph_file(args.graph_path);
    const auto ecc = all_ecc3(pg.graph);
    for (VertexId v = 0; v < pg.graph.vertex_count(); ++v) {
        if (args.format == "jsonl") {
            std::cout << json{{"v", 1}, {"vertex", pg.label_of(v)}, {"ecc3", ecc[v]}}.dump()
                      << '\n';
        } else {
            std::cout << pg.label_of(v) << ' ' << fixed9(ecc[v]) << '\n';
        }
    }
    return kExitOk;
}

struct AvgArgs {
    std::string graph_path;
    int k = 3;
    std::string method = "auto";
    int nu_cap = 0;
};

int cmd_avg(const AvgArgs& args) {
    const ParsedGraph pg = parse_graph_file(args.graph_path);
    const Graph& g = pg.graph;
    const Method method = parse_method(args.method);
    double sum = 0.0;
    // all vertices at once is linear on trees for k = 3; any explicit method
    // forces the per-vertex route so the two paths can be cross-checked
    if (args.k == 3 && method == Method::automatic &&
        classify(g).graph_class == GraphClass::tree && g.vertex_count() >= 3) {
        for (double e : all_ecc3(g)) sum += e;
    } else {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            sum += dispatch_ecc(method, g, v, args.k, args.nu_cap).value;
    }
    std::cout << fixed9(sum / g.vertex_count()) << '\n';
    return kExitOk;
}

struct GenArgs {
    std::string family;
    int n = 10;
    int nu = 1;
    std::uint64_t seed = 1;
    bool weighted = false;
    std::string output;
};

Graph generate(const GenArgs& args) {
    Rng rng(args.seed);
    const std::span<const double> pool =
        args.weighted ? std::span<const double>(kWeightPool) : std::span<const double>{};
    if (args.family == "tree") return random_tree(args.n, rng, pool);
    if (args.family == "block") {
        if (args.weighted) throw Error("block family is unweighted");
        return random_block_graph(args.n, rng);
    }
    if (args.family == "nu-bounded") return random_nu_graph(args.n, args.nu, rng, pool);
    throw Error("unknown family '" + args.family + "'");
}

int cmd_gen(const GenArgs& args) {
    const std::string text = serialize({generate(args), {}});
    if (args.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output);
        if (!out) throw Error("cannot write '" + args.output + "'");
        out << text;
    }
    return kExitOk;
}

struct CheckArgs {
    std::string family;
    int count = 100;
    std::uint64_t seed = 1;
    int nu = 2;
    int max_n = 0;  // 0 = family default
    bool weighted = false;
};

void print_counterexample(const Graph& g, VertexId v, int k, double fast, double want) {
    std::cout << "counterexample (v=" << v << ", k=" << k << "): got " << format_value(fast)
              << ", oracle " << format_value(want) << "\n"
              << serialize({g, {}});
}

// Randomized cross-validation of the fast algorithms against the exact
// oracle, one family per run.
int cmd_check(const CheckArgs& args) {
    if (args.max_n != 0 && args.max_n < 3) throw Error("--max-n must be at least 3");
    if (args.family != "all3" && args.max_n > 16)
        throw Error("--max-n above 16 exceeds the oracle table (family " + args.family + ")");
    if (args.count < 1) throw Error("--count must be positive");
    Rng rng(args.seed);
    const std::span<const double> pool =
        args.weighted ? std::span<const double>(kWeightPool) : std::span<const double>{};
    std::uint64_t comparisons = 0;

    for (int iter = 0; iter < args.count; ++iter) {
        if (args.family == "tree") {
            const int n = rng.uniform_int(2, args.max_n > 0 ? args.max_n : 12);
            const Graph t = random_tree(n, rng, pool);
            const SteinerTable table(t);
            for (VertexId v = 0; v < n; ++v)
                for (int k = 2; k <= std::min(6, n); ++k) {
                    const double fast = ecc_k_tree(t, v, k).value;
                    const double want = table.ecc_k(v, k).value;
                    ++comparisons;
                    if (args.weighted ? std::abs(fast - want) > 1e-9 : fast != want) {
                        print_counterexample(t, v, k, fast, want);
                        return kExitCheckFailed;
                    }
                }
        } else if (args.family == "block") {
            const int n = rng.uniform_int(2, args.max_n > 0 ? args.max_n : 12);
            const Graph g = random_block_graph(n, rng);
            const SteinerTable table(g);
            for (VertexId v = 0; v < n; ++v)
                for (int k = 2; k <= std::min(4, n); ++k) {
                    const double fast = ecc_k_block(g, v, k).value;
                    const double want = table.ecc_k(v, k).value;
                    ++comparisons;
                    if (fast != want) {
                        print_counterexample(g, v, k, fast, want);
                        return kExitCheckFailed;
                    }
                }
        } else if (args.family == "general") {
            const int n = rng.uniform_int(3, args.max_n > 0 ? args.max_n : 10);
            const int max_extra = n * (n - 1) / 2 - (n - 1);
            const Graph g = random_nu_graph(n, std::min(args.nu, max_extra), rng, pool);
            const SteinerTable table(g);
            for (VertexId v = 0; v < n; ++v)
                for (int k = 2; k <= std::min(4, n); ++k) {
                    const double fast = ecc_k_general(g, v, k).value;
                    const double want = table.ecc_k(v, k).value;
                    ++comparisons;
                    if (args.weighted ? std::abs(fast - want) > 1e-9 : fast != want) {
                        print_counterexample(g, v, k, fast, want);
                        return kExitCheckFailed;
                    }
                }
        } else if (args.family == "all3") {
            const int n = rng.uniform_int(3, args.max_n > 0 ? args.max_n : 200);
            const Graph t = random_tree(n, rng, pool);
            const auto fast = all_ecc3(t);
            for (VertexId v = 0; v < n; ++v) {
                const double want = ecc_k_tree(t, v, 3).value;
                ++comparisons;
                if (std::abs(fast[v] - want) > 1e-9) {
                    print_counterexample(t, v, 3, fast[v], want);
                    return kExitCheckFailed;
                }
            }
        } else {
            throw Error("unknown family '" + args.family + "'");
        }
    }
    std::cout << "check " << args.family << ": pass (" << args.count << " instances, "
              << comparisons << " comparisons)\n";
    return kExitOk;
}

struct BenchArgs {
    std::string algo;
    std::vector<int> sizes;
    std::vector<int> nus;
    int k = 3;
    std::uint64_t seed = 1;
    int reps = 5;
    int nu_cap = 0;
    std::string format = "text";
};

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

// Wall time of one call, generation excluded.
template <typename F>
double time_ms(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

struct BenchRecord {
    std::string algorithm;
    int n, m, nu, k;
    double ms;
    std::optional<std::uint64_t> leaves;
    double answer;
};

void emit(const BenchRecord& r, const std::string& format) {
    if (format == "jsonl") {
        json j{{"v", 1},      {"algorithm", r.algorithm}, {"n", r.n},   {"m", r.m},
               {"nu", r.nu},  {"k", r.k},                 {"ms", r.ms}, {"answer", r.answer}};
        if (r.leaves) j["leaves"] = *r.leaves;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << r.algorithm << " n=" << r.n << " m=" << r.m << " nu=" << r.nu
                  << " k=" << r.k << " ms=" << fixed9(r.ms);
        if (r.leaves) std::cout << " leaves=" << *r.leaves;
        std::cout << " answer=" << format_value(r.answer) << '\n';
    }
}

int cmd_bench(const BenchArgs& args) {
    require_format(args.format);
    if (args.reps < 1) throw Error("--reps must be positive");
    if (args.algo == "general") {
        for (int nu : args.nus.empty() ? std::vector<int>{1, 2, 3} : args.nus) {
            const int n = args.sizes.empty() ? 12 : args.sizes.front();
            Rng rng(args.seed + nu);
            const Graph g = random_nu_graph(n, nu, rng);
            RecursionStats stats;
            double answer = 0.0;
            std::vector<double> samples;
            for (int r = 0; r < args.reps; ++r)
                samples.push_back(time_ms(
                    [&] { answer = ecc_k_general(g, 0, args.k, {args.nu_cap}, &stats).value; }));
            emit({"general", n, g.edge_count(), nu, args.k, median(samples), stats.leaves,
                  answer},
                 args.format);
        }
        return kExitOk;
    }

    for (int n : args.sizes.empty() ? std::vector<int>{100000, 200000, 400000} : args.sizes) {
        Rng rng(args.seed + static_cast<std::uint64_t>(n));
        double answer = 0.0;
        std::vector<double> samples;
        BenchRecord record;
        if (args.algo == "all3") {
            const Graph t = random_tree(n, rng, kWeightPool);
            for (int r = 0; r < args.reps; ++r)
                samples.push_back(time_ms([&] { answer = all_ecc3(t)[0]; }));
            record = {"all3", n, t.edge_count(), 0, 3, median(samples), std::nullopt, answer};
        } else if (args.algo == "tree") {
            const Graph t = random_tree(n, rng, kWeightPool);
            for (int r = 0; r < args.reps; ++r)
                samples.push_back(time_ms([&] { answer = ecc_k_tree(t, 0, args.k).value; }));
            record = {"tree", n, t.edge_count(), 0, args.k, median(samples), std::nullopt,
                      answer};
        } else if (args.algo == "block") {
            const Graph g = random_block_graph(n, rng);
            for (int r = 0; r < args.reps; ++r)
                samples.push_back(time_ms([&] { answer = ecc_k_block(g, 0, args.k).value; }));
            record = {"block", n, g.edge_count(), classify(g).cyclomatic_number, args.k,
                      median(samples), std::nullopt, answer};
        } else {
            throw Error("unknown algorithm '" + args.algo + "'");
        }
        emit(record, args.format);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner k-eccentricity algorithms"};
    app.require_subcommand(1);

    EccArgs ecc_args;
    auto* ecc = app.add_subcommand("ecc", "Steiner k-eccentricity of one vertex");
    ecc->add_option("-g,--graph", ecc_args.graph_path, "edge-list graph file")->required();
    ecc->add_option("-v,--vertex", ecc_args.vertex_label, "focal vertex label")->required();
    ecc->add_option("-k", ecc_args.k, "terminal count")->required();
    ecc->add_option("-m,--method", ecc_args.method, "auto|tree|block|general|oracle");
    ecc->add_option("--nu-cap", ecc_args.nu_cap, "cyclomatic cap for the general recursion");
    ecc->add_option("-f,--format", ecc_args.format, "text|jsonl");
    ecc->add_flag("--trace", ecc_args.trace,
                  "emit one record per spanning tree reached by the recursion");

    All3Args all3_args;
    auto* all3 = app.add_subcommand("all3", "Steiner 3-eccentricity of every vertex (tree)");
    all3->add_option("-g,--graph", all3_args.graph_path)->required();
    all3->add_option("-f,--format", all3_args.format, "text|jsonl");

    AvgArgs avg_args;
    auto* avg = app.add_subcommand("avg", "average Steiner k-eccentricity");
    avg->add_option("-g,--graph", avg_args.graph_path)->required();
    avg->add_option("-k", avg_args.k)->required();
    avg->add_option("-m,--method", avg_args.method, "auto|tree|block|general|oracle");
    avg->add_option("--nu-cap", avg_args.nu_cap);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "cross-validate against the exact oracle");
    check->add_option("--family", check_args.family, "tree|block|general|all3")->required();
    check->add_option("--count", check_args.count);
    check->add_option("--seed", check_args.seed);
    check->add_option("--nu", check_args.nu);
    check->add_option("--max-n", check_args.max_n);
    check->add_flag("--weighted", check_args.weighted);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--family", gen_args.family, "tree|block|nu-bounded")->required();
    gen->add_option("-n,--n", gen_args.n, "vertex count")->required();
    gen->add_option("--nu", gen_args.nu);
    gen->add_option("--seed", gen_args.seed);
    gen->add_flag("--weighted", gen_args.weighted);
    gen->add_option("-o,--output", gen_args.output, "output path (default stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "timing records");
    bench->add_option("--algo", bench_args.algo, "all3|tree|block|general")->required();
    bench->add_option("-n,--n", bench_args.sizes, "instance sizes");
    bench->add_option("--nu", bench_args.nus, "cyclomatic numbers (general)");
    bench->add_option("-k", bench_args.k);
    bench->add_option("--seed", bench_args.seed);
    bench->add_option("--reps", bench_args.reps, "samples per point (median)");
    bench->add_option("--nu-cap", bench_args.nu_cap);
    bench->add_option("-f,--format", bench_args.format, "text|jsonl");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        const int cap = default_nu_cap();
        if (ecc_args.nu_cap == 0) ecc_args.nu_cap = cap;
        if (avg_args.nu_cap == 0) avg_args.nu_cap = cap;
        if (bench_args.nu_cap == 0) bench_args.nu_cap = cap;

        if (ecc->parsed()) return cmd_ecc(ecc_args);
        if (all3->parsed()) return cmd_all3(all3_args);
        if (avg->parsed()) return cmd_avg(avg_args);
        if (check->parsed()) return cmd_check(check_args);
        if (gen->parsed()) return cmd_gen(gen_args);
        if (bench->parsed()) return cmd_bench(bench_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const CyclomaticCapExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNuCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitOk;
}

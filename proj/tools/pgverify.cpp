#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "proofs/bench.hpp"
#include "proofs/dant.hpp"
#include "proofs/layering.hpp"
#include "proofs/verifier.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitError = 2;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw std::runtime_error("cannot read " + path);
    return buf.str();
}

void writeFile(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << contents;
    if (!out.good()) throw std::runtime_error("cannot write " + path);
}

void warnIfOversubscribed(const std::vector<unsigned>& threadCounts) {
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) return;
    for (unsigned t : threadCounts) {
        if (t > hw) {
            std::cerr << "warning: " << t << " threads exceed the " << hw
                      << " hardware threads available; timings will be oversubscribed\n";
            return;
        }
    }
}

std::vector<proofs::StrategyKind> parseStrategies(const std::vector<std::string>& names) {
    std::vector<proofs::StrategyKind> out;
    for (const std::string& name : names) {
        auto kind = proofs::strategyFromName(name);
        if (!kind) throw CLI::ValidationError("unknown strategy '" + name + "'");
        out.push_back(*kind);
    }
    return out;
}

int cmdVerify(const std::string& path, const std::string& strategyName, unsigned threads,
              bool trace) {
    auto kind = proofs::strategyFromName(strategyName);
    if (!kind) {
        std::cerr << "error: unknown strategy '" << strategyName << "'\n";
        return kExitError;
    }
    proofs::ProofGraph graph;
    try {
        graph = proofs::ProofGraph::load(readFile(path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    warnIfOversubscribed({threads});

    if (trace) {
        const proofs::LayerMap layers = proofs::computeLayers(graph);
        for (std::size_t k = 0; k < layers.layers.size(); ++k) {
            std::cout << "layer " << k << ":";
            for (proofs::NodeId id : layers.layers[k]) std::cout << ' ' << id;
            std::cout << '\n';
        }
    }

    const proofs::Verdict verdict = proofs::verify(graph, proofs::Strategy{*kind, threads});
    std::cout << (verdict.valid ? "valid" : "invalid") << ": " << graph.size() << " nodes, "
              << verdict.stats.layersProcessed << " layers processed, "
              << verdict.stats.nodesVerified << " nodes verified, "
              << verdict.stats.seconds << " s\n";
    for (const proofs::Failure& f : verdict.failures) {
        std::cout << "node " << f.node << ": " << proofs::failureReasonName(f.reason)
                  << " check failed\n";
    }
    return verdict.valid ? kExitValid : kExitInvalid;
}

int cmdGen(const proofs::DantSpec& spec, const std::string& outPath) {
    const proofs::ProofGraph graph = proofs::generate(spec);
    writeFile(outPath, graph.save());
    std::cout << "wrote " << outPath << ": " << proofs::dantName(spec.family) << ' '
              << spec.paramString() << ", " << graph.size() << " nodes\n";
    return kExitValid;
}

int cmdBench(bool strong, proofs::BenchConfig config, const std::string& outPath) {
    warnIfOversubscribed(config.threads);
    const std::vector<proofs::BenchRow> rows =
        strong ? proofs::runStrongScaling(config) : proofs::runProblemScaling(config);
    std::ostringstream csv;
    proofs::writeCsv(csv, rows);
    writeFile(outPath, csv.str());
    proofs::writeMedians(std::cout, proofs::medians(rows));
    std::cout << "wrote " << outPath << ": " << rows.size() << " rows\n";
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Layer-parallel verifier for natural-deduction proof graphs"};
    app.require_subcommand(1);

    // verify
    std::string verifyPath;
    std::string verifyStrategy = "serial";
    unsigned verifyThreads = 1;
    bool verifyTrace = false;
    CLI::App* verify = app.add_subcommand("verify", "Verify a proof graph file");
    verify->add_option("file", verifyPath, "proof graph JSON file")->required();
    verify->add_option("--strategy", verifyStrategy, "serial|parallel|loadbalance|syntaxfirst");
    verify->add_option("--threads", verifyThreads, "worker count for the parallel strategies")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--trace", verifyTrace, "print the layer partition before verifying");

    // gen
    std::string genFamily;
    proofs::DantSpec genSpec;
    bool genHasN = false, genHasB = false, genHasH = false;
    std::string genOut;
    CLI::App* gen = app.add_subcommand("gen", "Generate a DANT proof graph");
    gen->set_help_flag("--help", "print help");  // frees -h for the tree height option
    gen->add_option("family", genFamily, "straight|branches|tree")->required();
    gen->add_option("--n", genSpec.n, "straight: node count; branches: branch length")
        ->each([&](const std::string&) { genHasN = true; });
    gen->add_option("--b", genSpec.b, "branches: branch count")
        ->each([&](const std::string&) { genHasB = true; });
    gen->add_option("--h", genSpec.h, "tree: height")
        ->each([&](const std::string&) { genHasH = true; });
    gen->add_option("--out", genOut, "output file")->required();

    // bench strong|problem
    std::string benchTopology;
    proofs::DantSpec benchSpec;
    bool benchHasN = false, benchHasB = false, benchHasH = false;
    std::vector<unsigned> benchSizes;
    std::vector<std::string> benchStrategies = {"serial", "parallel", "loadbalance", "syntaxfirst"};
    std::vector<unsigned> benchThreads;
    unsigned benchReps = 5;
    std::string benchOut;
    CLI::App* bench = app.add_subcommand("bench", "Run a scaling study and write CSV");
    bench->require_subcommand(1);
    CLI::App* strong = bench->add_subcommand("strong", "fixed instance, varying thread count");
    CLI::App* problem = bench->add_subcommand("problem", "fixed thread count, varying size");
    for (CLI::App* study : {strong, problem}) {
        study->set_help_flag("--help", "print help");
        study->add_option("--topology", benchTopology, "straight|branches|tree")->required();
        study->add_option("--n", benchSpec.n, "straight length / branches branch length")
            ->each([&](const std::string&) { benchHasN = true; });
        study->add_option("--b", benchSpec.b, "branches branch count")
            ->each([&](const std::string&) { benchHasB = true; });
        study->add_option("--h", benchSpec.h, "tree height")
            ->each([&](const std::string&) { benchHasH = true; });
        study->add_option("--strategies", benchStrategies, "comma-separated strategy list")
            ->delimiter(',');
        study->add_option("--threads", benchThreads, "thread count (problem) or list (strong)")
            ->delimiter(',');
        study->add_option("--reps", benchReps, "repetitions per cell")->check(CLI::PositiveNumber);
        study->add_option("--out", benchOut, "output CSV file")->required();
    }
    problem->add_option("--sizes", benchSizes, "comma-separated primary-parameter grid")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (verify->parsed()) {
            return cmdVerify(verifyPath, verifyStrategy, verifyThreads, verifyTrace);
        }

        if (gen->parsed()) {
            if (genFamily == "straight") {
                genSpec.family = proofs::DantFamily::Straight;
                if (!genHasN) genSpec.n = 1;
            } else if (genFamily == "branches") {
                genSpec.family = proofs::DantFamily::Branches;
                if (!genHasB) genSpec.b = 1;
                if (!genHasN) genSpec.n = 0;
            } else if (genFamily == "tree") {
                genSpec.family = proofs::DantFamily::Tree;
                if (!genHasH) genSpec.h = 0;
            } else {
                std::cerr << "error: unknown topology '" << genFamily << "'\n";
                return kExitError;
            }
            return cmdGen(genSpec, genOut);
        }

        if (bench->parsed()) {
            const bool isStrong = strong->parsed();
            proofs::BenchConfig config;
            if (benchTopology == "straight") {
                benchSpec.family = proofs::DantFamily::Straight;
                if (!benchHasN) benchSpec.n = 150;  // strong-scaling default instance
                if (benchSizes.empty()) benchSizes = {100, 150, 200, 250, 300, 350, 400};
            } else if (benchTopology == "branches") {
                benchSpec.family = proofs::DantFamily::Branches;
                if (!benchHasB) benchSpec.b = 150;
                if (!benchHasN) benchSpec.n = 100;
                if (benchSizes.empty()) benchSizes = {30, 50, 70, 90, 110, 130, 150};
            } else if (benchTopology == "tree") {
                benchSpec.family = proofs::DantFamily::Tree;
                if (!benchHasH) benchSpec.h = 16;
                if (benchSizes.empty()) benchSizes = {8, 10, 12, 14, 16, 18, 20};
            } else {
                std::cerr << "error: unknown topology '" << benchTopology << "'\n";
                return kExitError;
            }
            config.base = benchSpec;
            config.sizes = benchSizes;
            config.strategies = parseStrategies(benchStrategies);
            if (benchThreads.empty()) {
                const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
                benchThreads = isStrong ? std::vector<unsigned>{1, 2, 4, 8} : std::vector<unsigned>{hw};
            }
            config.threads = benchThreads;
            config.reps = benchReps;
            return cmdBench(isStrong, std::move(config), benchOut);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

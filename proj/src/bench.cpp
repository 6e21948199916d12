#include "proofs/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace proofs {

namespace {

void checkConfig(const BenchConfig& config) {
    if (config.reps < 1) throw std::invalid_argument("bench: reps must be >= 1");
    if (config.strategies.empty()) throw std::invalid_argument("bench: no strategies given");
    if (config.threads.empty()) throw std::invalid_argument("bench: no thread counts given");
    for (unsigned t : config.threads) {
        if (t < 1) throw std::invalid_argument("bench: thread counts must be >= 1");
    }
}

BenchRow makeRow(const DantSpec& spec, const ProofGraph& graph, StrategyKind strategy,
                 unsigned threads, unsigned rep) {
    Verdict verdict = verify(graph, Strategy{strategy, threads});
    if (!verdict.valid) {
        throw std::runtime_error("bench: generated " + std::string(dantName(spec.family)) +
                                 " instance failed verification");
    }
    return BenchRow{std::string(dantName(spec.family)),
                    spec.paramString(),
                    strategy,
                    threads,
                    graph.size(),
                    rep,
                    verdict.stats.seconds,
                    verdict.valid};
}

}  // namespace

std::vector<BenchRow> runStrongScaling(const BenchConfig& config) {
    checkConfig(config);
    const ProofGraph graph = generate(config.base);
    std::vector<BenchRow> rows;
    rows.reserve(config.strategies.size() * config.threads.size() * config.reps);
    for (StrategyKind strategy : config.strategies) {
        for (unsigned t : config.threads) {
            for (unsigned rep = 1; rep <= config.reps; ++rep) {
                rows.push_back(makeRow(config.base, graph, strategy, t, rep));
            }
        }
    }
    return rows;
}

std::vector<BenchRow> runProblemScaling(const BenchConfig& config) {
    checkConfig(config);
    if (config.sizes.empty()) throw std::invalid_argument("bench: no problem sizes given");
    const unsigned threads = config.threads.front();
    std::vector<BenchRow> rows;
    rows.reserve(config.sizes.size() * config.strategies.size() * config.reps);
    for (unsigned size : config.sizes) {
        DantSpec spec = config.base;
        switch (spec.family) {
            case DantFamily::Straight: spec.n = size; break;
            case DantFamily::Branches: spec.b = size; break;
            case DantFamily::Tree: spec.h = size; break;
        }
        const ProofGraph graph = generate(spec);
        for (StrategyKind strategy : config.strategies) {
            for (unsigned rep = 1; rep <= config.reps; ++rep) {
                rows.push_back(makeRow(spec, graph, strategy, threads, rep));
            }
        }
    }
    return rows;
}

namespace {

std::string formatSeconds(double seconds) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(9) << seconds;
    return os.str();
}

}  // namespace

void writeCsv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << kCsvHeader << '\n';
    for (const BenchRow& r : rows) {
        os << r.topology << ',' << r.params << ',' << strategyName(r.strategy) << ',' << r.threads
           << ',' << r.nodes << ',' << r.rep << ',' << formatSeconds(r.seconds) << ','
           << (r.valid ? "true" : "false") << '\n';
    }
}

std::vector<BenchMedian> medians(const std::vector<BenchRow>& rows) {
    std::vector<BenchMedian> cells;
    std::vector<std::vector<double>> samples;
    for (const BenchRow& r : rows) {
        std::size_t idx = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const BenchMedian& c = cells[i];
            if (c.topology == r.topology && c.params == r.params && c.strategy == r.strategy &&
                c.threads == r.threads) {
                idx = i;
                break;
            }
        }
        if (idx == cells.size()) {
            cells.push_back(BenchMedian{r.topology, r.params, r.strategy, r.threads, r.nodes, 0.0});
            samples.emplace_back();
        }
        samples[idx].push_back(r.seconds);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::vector<double>& s = samples[i];
        std::sort(s.begin(), s.end());
        const std::size_t mid = s.size() / 2;
        cells[i].seconds = (s.size() % 2 == 1) ? s[mid] : (s[mid - 1] + s[mid]) / 2.0;
    }
    return cells;
}

void writeMedians(std::ostream& os, const std::vector<BenchMedian>& cells) {
    for (const BenchMedian& c : cells) {
        os << "median " << c.topology << ' ' << c.params << ' ' << strategyName(c.strategy)
           << " threads=" << c.threads << " nodes=" << c.nodes << " seconds="
           << formatSeconds(c.seconds) << '\n';
    }
}

}  // namespace proofs

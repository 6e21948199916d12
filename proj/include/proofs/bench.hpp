#ifndef PROOFS_BENCH_HPP
#define PROOFS_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "proofs/dant.hpp"
#include "proofs/verifier.hpp"

namespace proofs {

struct BenchRow {
    std::string topology;
    std::string params;
    StrategyKind strategy;
    unsigned threads;
    std::size_t nodes;
    unsigned rep;  // 1-based
    double seconds;
    bool valid;
};

struct BenchConfig {
    DantSpec base;                        // the instance (strong) or the family defaults (problem)
    std::vector<unsigned> sizes;          // problem study: grid over the family's primary parameter
    std::vector<StrategyKind> strategies;
    std::vector<unsigned> threads;        // strong: the thread axis; problem: first entry is used
    unsigned reps = 5;
};

// Strong scaling: the instance is generated once and every strategy is run at
// every thread count, reps repetitions per cell. Serial ignores the thread
// count but is re-run per listed value so tables stay rectangular. Timing is
// Verdict.stats.seconds: layering + verification only, no generation or I/O.
std::vector<BenchRow> runStrongScaling(const BenchConfig& config);

// Problem scaling: thread count fixed, the family's primary parameter (n for
// straight, b for branches, h for tree) sweeps over config.sizes.
std::vector<BenchRow> runProblemScaling(const BenchConfig& config);

inline constexpr std::string_view kCsvHeader =
    "topology,params,strategy,threads,nodes,rep,seconds,valid";

// Header plus one line per row, in row order.
void writeCsv(std::ostream& os, const std::vector<BenchRow>& rows);

struct BenchMedian {
    std::string topology;
    std::string params;
    StrategyKind strategy;
    unsigned threads;
    std::size_t nodes;
    double seconds;
};

// Median seconds per (topology, params, strategy, threads) cell, in first-
// appearance order.
std::vector<BenchMedian> medians(const std::vector<BenchRow>& rows);

void writeMedians(std::ostream& os, const std::vector<BenchMedian>& cells);

}  // namespace proofs

#endif  // PROOFS_BENCH_HPP

#ifndef KCONPATH_CLI_HH
#define KCONPATH_CLI_HH

#include <kconpath/graph.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kconpath::cli
{
    enum ExitCode : int
    {
        success = 0,
        verification_failed = 1,
        hypothesis_failure = 2,
        invariant_violation = 3,
        io_failure = 4
    };

    struct HuntConfig
    {
        std::string target = "degree_bound"; // or "tree_conjecture"
        int k = 1;
        int m = 2;
        std::optional<int> delta;            // defaults: k + ceil(m/2), or k + t for trees
        std::optional<std::string> tree;     // graph6 pattern for tree_conjecture
        int tree_order = 1;                  // random pattern size when no tree is given
        int n_max = 10;
        int budget = 100;
        std::uint64_t seed = 1;
        bool guard_override = false;
    };

    struct HuntFailure
    {
        std::string graph;
        int min_degree = 0;
        int kappa = 0;
    };

    struct HuntReport
    {
        int tested = 0;
        int skipped = 0; // sampler gave up before producing an instance
        std::vector<HuntFailure> failures;
        int delta = 0;
        std::string tree; // graph6 pattern for tree hunts
        int t = 0;
        double elapsed_ms = 0;
    };

    /// Worker count from KCONPATH_THREADS, else the hardware concurrency.
    auto worker_count() -> unsigned;

    /// Throws HypothesisError when the configuration is outside the hunt's domain.
    auto run_hunt(const HuntConfig & config, unsigned threads, std::ostream & warnings) -> HuntReport;

    /// Entry point behind the kconpath executable; args excludes the program name.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif

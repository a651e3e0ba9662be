#ifndef KCONPATH_ORACLE_HH
#define KCONPATH_ORACLE_HH

#include <kconpath/graph.hh>
#include <kconpath/removable_path.hh>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace kconpath
{
    // Brute-force ground truth. Nothing here goes through the path search or
    // the minimum-cut enumerator; only the graph core and the flow-based
    // connectivity test are shared.

    class GuardExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct OracleGuard
    {
        int max_order = 16;     // host graphs for exhaustive searches
        int max_tree_order = 8; // pattern trees
        bool override = false;
    };

    struct OracleReport
    {
        std::string instance_id; // graph6 of the instance
        bool hypothesis_ok = false;
        std::vector<VertexPath> witness_paths; // at most the requested limit
        std::size_t witness_count = 0;         // exact, even when the list is truncated
        std::vector<std::string> violated_claims;
        std::size_t checked = 0; // configurations examined by the checkers
        std::size_t skipped = 0; // degenerate or hypothesis-failing configurations
    };

    inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

    /// Every path of order m (each vertex sequence once, first id below last id)
    /// whose removal leaves a k-connected graph.
    auto brute_force_paths(const Graph & g, int k, int m, std::size_t limit = unlimited, const OracleGuard & guard = {}) -> OracleReport;

    struct VerifyResult
    {
        bool ok = false;
        std::string failure; // "path-invalid", "order" or "kappa"
        std::string detail;

        explicit operator bool() const { return ok; }
    };

    /// Recomputes path validity, order and kappa(G - V(P)) >= k from scratch.
    /// The trace is not consulted.
    auto verify_certificate(const Graph & g, int k, const PathCertificate & cert) -> VerifyResult;

    /// For every minimum cut S and fragment F of a k-connected, non-complete
    /// G with kappa(G) = k: kappa(G<S> - F') >= k, where F' is the
    /// complementary fragment, and >= k + 1 if F is minimal with |F| >= 2.
    auto check_fragment_completion(const Graph & g, int k, const OracleGuard & guard = {}) -> OracleReport;

    /**
     * Crossing-cut implications for cuts S (|S| = k) and S1 (|S1| = k - 1)
     * with semifragments F and F1, over tuples where both kappa(G<S> - F)
     * and kappa(G<S> - F') are at least k (F' the complement of F):
     *   F n F1 nonempty  =>  |S(F, F1)| >= k
     *   |S(F, F1)| >= k  =>  |S1 n F| >= |S n F1'|, |S n F1| > |S1 n F'|, F' n F1' empty
     * Stops after `samples` tuples (0 means all).
     */
    auto check_crossing_cuts(const Graph & g, int k, std::size_t samples = 0, const OracleGuard & guard = {}) -> OracleReport;

    /// Whether some subgraph of g isomorphic to the tree leaves a
    /// k-connected graph when its vertices are deleted.
    auto tree_removal_exists(const Graph & g, int k, const Graph & tree, const OracleGuard & guard = {}) -> bool;

    /// kappa(G) by trying every vertex subset in order of size.
    auto exhaustive_connectivity(const Graph & g) -> int;

    /// Every vertex set of the given size whose removal disconnects g.
    auto exhaustive_cuts(const Graph & g, int size) -> std::vector<VertexSet>;
}

#endif

#ifndef KCONPATH_REMOVABLE_PATH_HH
#define KCONPATH_REMOVABLE_PATH_HH

#include <kconpath/connectivity.hh>
#include <kconpath/graph.hh>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kconpath
{
    /// The input does not satisfy the hypotheses of the requested construction.
    class HypothesisError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A step the construction relies on failed at runtime. This is always a
    /// bug, never an expected outcome; the message names the failed step.
    class InvariantViolation : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /**
     * A graph together with a k-clique C such that G - C is bipartite, every
     * vertex outside C has degree at least k + m in G, and no two adjacent
     * vertices outside C share a neighbour. Plain membership asks for
     * kappa(G) >= k, the strong class for kappa(G) >= k + 1.
     */
    struct AnchoredPair
    {
        Graph graph;
        VertexSet clique;
        int k = 1;
        int m = 1;
    };

    enum class PairClass
    {
        not_member,
        member,        // kappa >= k
        member_strong  // kappa >= k + 1
    };

    struct Classification
    {
        PairClass kind = PairClass::not_member;
        std::string violated; // first failed condition when not a member
    };

    auto classify_pair(const Graph & g, const VertexSet & c, int k, int m) -> Classification;
    auto classify_pair(const AnchoredPair & pair) -> Classification;

    auto to_string(PairClass c) -> std::string;

    /// One fragment-surgery step (or the initial reduction onto a fragment).
    struct SurgeryEvent
    {
        std::string kind; // "reduction" or "surgery"
        int depth = 0;
        int path_order = 0;
        VertexSet cut;
        VertexSet fragment;
        std::optional<Vertex> pivot; // p': last path vertex with a neighbour in the fragment
        std::optional<Vertex> entry; // q': the neighbour the new tail starts from
        bool minimality_certified = true;
        std::string transfer_mode;   // "alpha" or "beta"
        bool transfer_holds = false;

        auto operator==(const SurgeryEvent &) const -> bool = default;
    };

    struct PathCertificate
    {
        int k = 0;
        int m = 0;
        VertexPath path;
        int residual_kappa = 0;
        std::vector<SurgeryEvent> trace;
    };

    struct SearchOptions
    {
        std::size_t cut_cap = default_cut_cap;
    };

    /// A path of order m starting at p0, avoiding the clique, whose removal
    /// leaves the graph k-connected. Requires the pair in the strong class.
    auto find_anchored_path(const AnchoredPair & pair, Vertex p0, const SearchOptions & options = {}) -> PathCertificate;

    /// A path of order m whose removal leaves a k-connected bipartite graph
    /// k-connected, given kappa(G) >= k and minimum degree at least k + m.
    auto find_removable_path(const Graph & g, int k, int m, const SearchOptions & options = {}) -> PathCertificate;

    enum class TransferMode
    {
        alpha, // G bipartite with minimum degree >= k + m
        beta   // (G, C) a member pair for (k, m) with C inside F u S
    };

    auto to_string(TransferMode mode) -> std::string;

    enum class TransferVerdict
    {
        holds,
        conclusion_failed,
        hypothesis_failed
    };

    struct TransferResult
    {
        TransferVerdict verdict = TransferVerdict::hypothesis_failed;
        std::string detail;

        auto holds() const -> bool { return verdict == TransferVerdict::holds; }
    };

    /**
     * Given a minimum cut S of G with kappa(G) = k, a fragment F to S, and a
     * path P of order 1..m in G - (S u F) with kappa(G<S> - (F u P)) >= k,
     * reports whether kappa(G - P) >= k. Failed hypotheses come back as
     * hypothesis_failed, never as a failed conclusion.
     */
    auto surgery_transfer_check(const Graph & g, const VertexSet & s, const VertexSet & f, const VertexPath & p,
        int k, int m, TransferMode mode, const VertexSet & c = {}) -> TransferResult;
}

#endif

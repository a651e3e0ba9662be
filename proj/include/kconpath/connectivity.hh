#ifndef KCONPATH_CONNECTIVITY_HH
#define KCONPATH_CONNECTIVITY_HH

#include <kconpath/graph.hh>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kconpath
{
    inline constexpr std::size_t default_cut_cap = 10000;

    /// Minimum-cut enumeration stopped at its cap before finding what was asked for.
    class EnumerationExhausted : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct CutReport
    {
        int kappa = 0;
        std::optional<VertexSet> witness_cut;               // absent for complete graphs
        std::optional<std::pair<Vertex, Vertex>> witness_pair; // separated by witness_cut
    };

    /// kappa(G): n-1 for K_n, 0 for a disconnected graph, otherwise the
    /// smallest vertex cut. Local values come from unit-capacity flow on the
    /// vertex-split digraph, taken over the pairs (v, u) with u not adjacent to a
    /// minimum-degree vertex v, and the nonadjacent pairs inside N(v).
    auto vertex_connectivity(const Graph & g) -> CutReport;

    /// kappa(G) >= k, stopping each flow as soon as k paths are found.
    auto is_k_connected(const Graph & g, int k) -> bool;

    /// Maximum number of internally disjoint x,y-paths. For adjacent x, y the
    /// edge itself counts as one of them.
    auto local_connectivity(const Graph & g, Vertex x, Vertex y) -> int;

    /// G - S is disconnected.
    auto is_vertex_cut(const Graph & g, const VertexSet & s) -> bool;

    struct CutEnumeration
    {
        int kappa = 0;
        std::vector<VertexSet> cuts; // sorted lexicographically
        bool complete = true;        // false if the cap cut the enumeration short
    };

    /// Distinct minimum vertex cuts, at most cap of them. Each nonadjacent
    /// pair realising kappa contributes every closed set of its residual
    /// network; the union is deduplicated.
    auto minimum_cuts(const Graph & g, std::size_t cap = default_cut_cap) -> CutEnumeration;

    struct FragmentDecomposition
    {
        VertexSet cut;
        VertexSet fragment;
        VertexSet complement;

        auto operator==(const FragmentDecomposition &) const -> bool = default;
    };

    /// One decomposition per component of G - S, fragment = that component.
    auto fragments_to_cut(const Graph & g, const VertexSet & s) -> std::vector<FragmentDecomposition>;

    struct MinimalFragment
    {
        FragmentDecomposition decomposition;
        bool certified = true; // minimality checked against every minimum cut
    };

    /// A minimum cut S with a fragment F, F disjoint from the clique C, such
    /// that no fragment of any enumerated minimum cut lies strictly inside F.
    /// Throws EnumerationExhausted if the cap was hit before any C-avoiding
    /// fragment turned up.
    auto minimal_fragment_avoiding(const Graph & g, const VertexSet & c, std::size_t cap = default_cut_cap) -> MinimalFragment;

    /// (S n F1) u (S n S1) u (S1 n F)
    auto s_operator(const VertexSet & s, const VertexSet & f, const VertexSet & s1, const VertexSet & f1) -> VertexSet;
}

#endif

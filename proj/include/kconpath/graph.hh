#ifndef KCONPATH_GRAPH_HH
#define KCONPATH_GRAPH_HH

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kconpath
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// A set of vertex ids, always kept sorted and free of duplicates.
    using VertexSet = std::vector<Vertex>;

    class GraphError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    namespace sets
    {
        auto make(std::vector<Vertex> v) -> VertexSet;
        auto contains(const VertexSet & s, Vertex v) -> bool;
        auto unite(const VertexSet & a, const VertexSet & b) -> VertexSet;
        auto intersect(const VertexSet & a, const VertexSet & b) -> VertexSet;
        auto subtract(const VertexSet & a, const VertexSet & b) -> VertexSet;
        auto is_subset(const VertexSet & a, const VertexSet & b) -> bool;
        auto is_proper_subset(const VertexSet & a, const VertexSet & b) -> bool;
        auto disjoint(const VertexSet & a, const VertexSet & b) -> bool;
        auto to_string(const VertexSet & s) -> std::string;
    }

    /**
     * Immutable simple undirected graph over integer vertex ids.
     *
     * Ids survive subgraph operations: deleting vertices never renumbers the
     * ones that remain, so a cut computed in G - V(P) names vertices of G.
     */
    class Graph
    {
    public:
        Graph() = default;

        /// Builds a graph on an arbitrary sorted vertex set. Edges must join
        /// members of that set; self-loops and repeated pairs are rejected.
        Graph(VertexSet vertices, std::span<const Edge> edges);

        auto vertices() const -> const VertexSet & { return _vertices; }
        auto order() const -> int { return static_cast<int>(_vertices.size()); }
        auto empty() const -> bool { return _vertices.empty(); }
        auto edge_count() const -> std::size_t { return _edge_count; }

        auto has_vertex(Vertex v) const -> bool;
        auto neighbours(Vertex v) const -> const VertexSet &;
        auto degree(Vertex v) const -> int { return static_cast<int>(neighbours(v).size()); }
        auto adjacent(Vertex u, Vertex v) const -> bool;

        /// All edges (u, v) with u < v, in lexicographic order.
        auto edges() const -> std::vector<Edge>;

        auto is_complete() const -> bool;

        auto operator==(const Graph & other) const -> bool
        {
            return _vertices == other._vertices && edges() == other.edges();
        }

    private:
        VertexSet _vertices;
        std::vector<VertexSet> _adj; // indexed by id, empty for absent ids
        std::vector<char> _present;
        std::size_t _edge_count = 0;

        friend auto induced(const Graph &, const VertexSet &) -> Graph;
        friend auto completion(const Graph &, const VertexSet &) -> Graph;
    };

    struct Bipartition
    {
        VertexSet x;
        VertexSet y;
    };

    /// Ordered sequence of distinct vertices; a single vertex is a path of length 0.
    struct VertexPath
    {
        std::vector<Vertex> vertices;

        auto order() const -> int { return static_cast<int>(vertices.size()); }
        auto front() const -> Vertex { return vertices.front(); }
        auto back() const -> Vertex { return vertices.back(); }
        auto vertex_set() const -> VertexSet { return sets::make(vertices); }

        auto operator==(const VertexPath &) const -> bool = default;
    };

    /// Graph on vertices [0, n) with exactly the given edges.
    auto build_graph(int n, std::span<const Edge> edges) -> Graph;

    /// G[S]
    auto induced(const Graph & g, const VertexSet & s) -> Graph;

    /// G - S
    auto remove(const Graph & g, const VertexSet & s) -> Graph;

    /// G<S>: G plus every missing edge inside S.
    auto completion(const Graph & g, const VertexSet & s) -> Graph;

    auto graph_union(const Graph & a, const Graph & b) -> Graph;

    /// Union of two vertex-disjoint graphs plus every edge between them.
    auto join(const Graph & a, const Graph & b) -> Graph;

    /// Proper 2-colouring, lowest id of each component on the X side; nullopt
    /// if the graph contains an odd cycle.
    auto bipartition(const Graph & g) -> std::optional<Bipartition>;

    auto min_degree(const Graph & g) -> int;

    /// min over v in H of d_G(v), degrees measured in G rather than G[H].
    auto relative_min_degree(const Graph & g, const VertexSet & h) -> int;

    /// N_G(S) = union of neighbourhoods, minus S itself.
    auto neighbourhood(const Graph & g, const VertexSet & s) -> VertexSet;

    /// Connected components, each sorted, ordered by smallest member.
    auto components(const Graph & g) -> std::vector<VertexSet>;

    auto is_connected(const Graph & g) -> bool;

    auto is_clique(const Graph & g, const VertexSet & s) -> bool;

    /// True iff the path is nonempty, has distinct vertices of g, and
    /// consecutive vertices are adjacent.
    auto is_path_in(const Graph & g, const VertexPath & p) -> bool;
}

#endif

#ifndef KCONPATH_GENERATORS_HH
#define KCONPATH_GENERATORS_HH

#include <kconpath/graph.hh>
#include <kconpath/removable_path.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace kconpath
{
    /// K_{r,s} with X = [0, r) and Y = [r, r + s).
    auto complete_bipartite(int r, int s) -> Graph;

    /// K_{k+m,k+m} with its first k X-vertices completed into a clique, paired
    /// with that clique. This is the smallest graph of the strong class.
    auto extremal_completion(int k, int m) -> AnchoredPair;

    /// K_{k+t-1,k+t-1}: no tree with larger side t can be removed from it
    /// while keeping k-connectivity.
    auto sharpness_instance(int k, int t) -> Graph;

    /**
     * Rejection sampler for bipartite graphs on nx + ny vertices with minimum
     * degree at least dmin and connectivity at least k. Each attempt draws
     * every cross pair with the given probability (by default enough for an
     * expected degree of dmin + 1), tops up vertices below dmin with random
     * extra edges, and keeps the result if it is k-connected. Returns
     * nullopt after `attempts` failures. Throws GraphError if dmin exceeds a
     * side size.
     */
    auto random_k_connected_bipartite(int nx, int ny, int k, int dmin, std::uint64_t seed,
        std::optional<double> edge_probability = std::nullopt, int attempts = 200) -> std::optional<Graph>;

    struct RandomTree
    {
        Graph tree;
        int t = 1; // larger side of the tree's bipartition
    };

    /// Uniform labelled tree on n vertices via a random Pruefer sequence.
    auto random_tree(int n, std::uint64_t seed) -> RandomTree;

    /// Decodes a Pruefer sequence of length n - 2 over [0, n).
    auto pruefer_decode(const std::vector<int> & sequence) -> Graph;

    /// G(n, p) with a deterministic seed, for test corpora.
    auto random_graph(int n, double p, std::uint64_t seed) -> Graph;

    struct GenSpec
    {
        std::string kind; // complete_bipartite, extremal_completion, sharpness, random_bipartite, random_tree
        std::map<std::string, long long> parameters;
        std::uint64_t seed = 0;
    };

    /// Builds the graph a spec describes; throws GraphError on bad parameters
    /// and returns nullopt when a random sampler gives up.
    auto generate(const GenSpec & spec) -> std::optional<Graph>;
}

#endif

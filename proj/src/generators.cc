#include <kconpath/generators.hh>

#include <kconpath/connectivity.hh>

#include <algorithm>
#include <queue>
#include <random>

namespace kconpath
{
    namespace
    {
        // std distributions are implementation-defined; these draw straight
        // from the engine so a seed means the same graph everywhere.
        auto unit(std::mt19937_64 & rng) -> double
        {
            return static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }

        auto below(std::mt19937_64 & rng, std::uint64_t n) -> std::uint64_t
        {
            std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
            std::uint64_t x;
            do
                x = rng();
            while (x >= limit);
            return x % n;
        }

        auto positive(const char * what, long long v) -> void
        {
            if (v < 1)
                throw GraphError(std::string(what) + " must be at least 1");
        }
    }

    auto complete_bipartite(int r, int s) -> Graph
    {
        positive("side size", r);
        positive("side size", s);
        std::vector<Edge> edges;
        for (int x = 0; x < r; ++x)
            for (int y = r; y < r + s; ++y)
                edges.emplace_back(x, y);
        return build_graph(r + s, edges);
    }

    auto extremal_completion(int k, int m) -> AnchoredPair
    {
        positive("k", k);
        positive("m", m);
        auto g = complete_bipartite(k + m, k + m);
        VertexSet s(k);
        for (int i = 0; i < k; ++i)
            s[i] = i;
        return AnchoredPair{completion(g, s), s, k, m};
    }

    auto sharpness_instance(int k, int t) -> Graph
    {
        positive("k", k);
        positive("t", t);
        return complete_bipartite(k + t - 1, k + t - 1);
    }

    auto random_k_connected_bipartite(int nx, int ny, int k, int dmin, std::uint64_t seed,
        std::optional<double> edge_probability, int attempts) -> std::optional<Graph>
    {
        positive("k", k);
        if (dmin < k)
            throw GraphError("minimum degree must be at least k");
        if (dmin > nx || dmin > ny)
            throw GraphError("minimum degree " + std::to_string(dmin) + " exceeds a side of size " + std::to_string(std::min(nx, ny)));

        double p = edge_probability.value_or(std::min(1.0, (dmin + 1.0) / std::min(nx, ny)));
        std::mt19937_64 rng(seed);
        int n = nx + ny;
        for (int attempt = 0; attempt < attempts; ++attempt) {
            std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
            std::vector<int> degree(n, 0);
            auto link = [&](int u, int v) {
                adj[u][v] = adj[v][u] = 1;
                ++degree[u];
                ++degree[v];
            };
            for (int x = 0; x < nx; ++x)
                for (int y = nx; y < n; ++y)
                    if (unit(rng) < p)
                        link(x, y);
            for (int v = 0; v < n; ++v) {
                int lo = v < nx ? nx : 0, hi = v < nx ? n : nx;
                while (degree[v] < dmin) {
                    std::vector<int> pool;
                    for (int w = lo; w < hi; ++w)
                        if (! adj[v][w])
                            pool.push_back(w);
                    link(v, pool[below(rng, pool.size())]);
                }
            }
            std::vector<Edge> edges;
            for (int x = 0; x < nx; ++x)
                for (int y = nx; y < n; ++y)
                    if (adj[x][y])
                        edges.emplace_back(x, y);
            auto g = build_graph(n, edges);
            if (is_k_connected(g, k))
                return g;
        }
        return std::nullopt;
    }

    auto pruefer_decode(const std::vector<int> & sequence) -> Graph
    {
        int n = static_cast<int>(sequence.size()) + 2;
        std::vector<int> remaining(n, 1);
        for (auto v : sequence) {
            if (v < 0 || v >= n)
                throw GraphError("Pruefer entry " + std::to_string(v) + " out of range");
            ++remaining[v];
        }
        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 0; v < n; ++v)
            if (remaining[v] == 1)
                leaves.push(v);
        std::vector<Edge> edges;
        for (auto v : sequence) {
            int leaf = leaves.top();
            leaves.pop();
            edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
            if (--remaining[v] == 1)
                leaves.push(v);
        }
        int a = leaves.top();
        leaves.pop();
        int b = leaves.top();
        edges.emplace_back(std::min(a, b), std::max(a, b));
        return build_graph(n, edges);
    }

    auto random_tree(int n, std::uint64_t seed) -> RandomTree
    {
        positive("tree order", n);
        Graph tree;
        if (n == 1)
            tree = build_graph(1, {});
        else {
            std::mt19937_64 rng(seed);
            std::vector<int> sequence(n - 2);
            for (auto & v : sequence)
                v = static_cast<int>(below(rng, n));
            tree = pruefer_decode(sequence);
        }
        auto sides = bipartition(tree);
        int t = static_cast<int>(std::max(sides->x.size(), sides->y.size()));
        return RandomTree{std::move(tree), t};
    }

    auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng(seed);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < p)
                    edges.emplace_back(u, v);
        return build_graph(n, edges);
    }

    auto generate(const GenSpec & spec) -> std::optional<Graph>
    {
        auto param = [&](const std::string & key) -> int {
            auto it = spec.parameters.find(key);
            if (it == spec.parameters.end())
                throw GraphError("generator '" + spec.kind + "' needs parameter '" + key + "'");
            return static_cast<int>(it->second);
        };

        if (spec.kind == "complete_bipartite")
            return complete_bipartite(param("r"), param("s"));
        if (spec.kind == "extremal_completion")
            return extremal_completion(param("k"), param("m")).graph;
        if (spec.kind == "sharpness")
            return sharpness_instance(param("k"), param("t"));
        if (spec.kind == "random_bipartite")
            return random_k_connected_bipartite(param("nx"), param("ny"), param("k"), param("dmin"), spec.seed);
        if (spec.kind == "random_tree")
            return random_tree(param("n"), spec.seed).tree;
        throw GraphError("unknown generator kind '" + spec.kind + "'");
    }
}

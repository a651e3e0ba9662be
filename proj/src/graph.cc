#include <kconpath/graph.hh>

#include <algorithm>
#include <iterator>
#include <queue>
#include <sstream>

namespace kconpath
{
    namespace sets
    {
        auto make(std::vector<Vertex> v) -> VertexSet
        {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        }

        auto contains(const VertexSet & s, Vertex v) -> bool
        {
            return std::binary_search(s.begin(), s.end(), v);
        }

        auto unite(const VertexSet & a, const VertexSet & b) -> VertexSet
        {
            VertexSet result;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
            return result;
        }

        auto intersect(const VertexSet & a, const VertexSet & b) -> VertexSet
        {
            VertexSet result;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
            return result;
        }

        auto subtract(const VertexSet & a, const VertexSet & b) -> VertexSet
        {
            VertexSet result;
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
            return result;
        }

        auto is_subset(const VertexSet & a, const VertexSet & b) -> bool
        {
            return std::includes(b.begin(), b.end(), a.begin(), a.end());
        }

        auto is_proper_subset(const VertexSet & a, const VertexSet & b) -> bool
        {
            return a.size() < b.size() && is_subset(a, b);
        }

        auto disjoint(const VertexSet & a, const VertexSet & b) -> bool
        {
            auto i = a.begin();
            auto j = b.begin();
            while (i != a.end() && j != b.end()) {
                if (*i < *j)
                    ++i;
                else if (*j < *i)
                    ++j;
                else
                    return false;
            }
            return true;
        }

        auto to_string(const VertexSet & s) -> std::string
        {
            std::ostringstream out;
            out << '{';
            for (std::size_t i = 0; i < s.size(); ++i)
                out << (i ? "," : "") << s[i];
            out << '}';
            return out.str();
        }
    }

    Graph::Graph(VertexSet vertices, std::span<const Edge> edges) :
        _vertices(std::move(vertices))
    {
        if (! std::is_sorted(_vertices.begin(), _vertices.end())
            || std::adjacent_find(_vertices.begin(), _vertices.end()) != _vertices.end())
            throw GraphError("vertex set must be sorted and duplicate-free");
        if (! _vertices.empty() && _vertices.front() < 0)
            throw GraphError("negative vertex id " + std::to_string(_vertices.front()));

        std::size_t bound = _vertices.empty() ? 0 : static_cast<std::size_t>(_vertices.back()) + 1;
        _adj.resize(bound);
        _present.assign(bound, 0);
        for (auto v : _vertices)
            _present[v] = 1;

        for (auto [u, v] : edges) {
            if (! has_vertex(u) || ! has_vertex(v))
                throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside the vertex set");
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            _adj[u].push_back(v);
            _adj[v].push_back(u);
        }

        for (auto v : _vertices) {
            auto & n = _adj[v];
            std::sort(n.begin(), n.end());
            if (std::adjacent_find(n.begin(), n.end()) != n.end()) {
                auto dup = *std::adjacent_find(n.begin(), n.end());
                throw GraphError("duplicate edge (" + std::to_string(std::min(v, dup)) + "," + std::to_string(std::max(v, dup)) + ")");
            }
            _edge_count += n.size();
        }
        _edge_count /= 2;
    }

    auto Graph::has_vertex(Vertex v) const -> bool
    {
        return v >= 0 && static_cast<std::size_t>(v) < _present.size() && _present[v];
    }

    auto Graph::neighbours(Vertex v) const -> const VertexSet &
    {
        if (! has_vertex(v))
            throw GraphError("no vertex " + std::to_string(v));
        return _adj[v];
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        return has_vertex(u) && has_vertex(v) && sets::contains(_adj[u], v);
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_edge_count);
        for (auto u : _vertices)
            for (auto v : _adj[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::is_complete() const -> bool
    {
        auto n = _vertices.size();
        return _edge_count == n * (n == 0 ? 0 : n - 1) / 2;
    }

    namespace
    {
        auto require_subset(const Graph & g, const VertexSet & s, const char * what) -> void
        {
            for (auto v : s)
                if (! g.has_vertex(v))
                    throw GraphError(std::string(what) + ": vertex " + std::to_string(v) + " is not in the graph");
        }
    }

    auto build_graph(int n, std::span<const Edge> edges) -> Graph
    {
        if (n < 0)
            throw GraphError("negative vertex count");
        for (auto [u, v] : edges)
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("endpoint out of range in edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        VertexSet vertices(n);
        for (int i = 0; i < n; ++i)
            vertices[i] = i;
        return Graph(std::move(vertices), edges);
    }

    auto induced(const Graph & g, const VertexSet & s) -> Graph
    {
        require_subset(g, s, "induced");
        Graph result;
        result._vertices = s;
        std::size_t bound = s.empty() ? 0 : static_cast<std::size_t>(s.back()) + 1;
        result._adj.resize(bound);
        result._present.assign(bound, 0);
        for (auto v : s)
            result._present[v] = 1;
        for (auto v : s) {
            auto & n = result._adj[v];
            for (auto w : g._adj[v])
                if (static_cast<std::size_t>(w) < bound && result._present[w])
                    n.push_back(w);
            result._edge_count += n.size();
        }
        result._edge_count /= 2;
        return result;
    }

    auto remove(const Graph & g, const VertexSet & s) -> Graph
    {
        require_subset(g, s, "remove");
        return induced(g, sets::subtract(g.vertices(), s));
    }

    auto completion(const Graph & g, const VertexSet & s) -> Graph
    {
        require_subset(g, s, "completion");
        Graph result = g;
        for (auto v : s) {
            auto & n = result._adj[v];
            auto before = n.size();
            n = sets::unite(n, sets::subtract(s, VertexSet{v}));
            result._edge_count += n.size() - before;
        }
        // each new pair was counted from both ends
        result._edge_count = g._edge_count + (result._edge_count - g._edge_count) / 2;
        return result;
    }

    auto graph_union(const Graph & a, const Graph & b) -> Graph
    {
        auto edges = a.edges();
        for (auto e : b.edges())
            if (! a.adjacent(e.first, e.second))
                edges.push_back(e);
        return Graph(sets::unite(a.vertices(), b.vertices()), edges);
    }

    auto join(const Graph & a, const Graph & b) -> Graph
    {
        if (! sets::disjoint(a.vertices(), b.vertices()))
            throw GraphError("join: vertex sets must be disjoint");
        auto edges = a.edges();
        auto be = b.edges();
        edges.insert(edges.end(), be.begin(), be.end());
        for (auto u : a.vertices())
            for (auto v : b.vertices())
                edges.emplace_back(u, v);
        return Graph(sets::unite(a.vertices(), b.vertices()), edges);
    }

    auto bipartition(const Graph & g) -> std::optional<Bipartition>
    {
        std::vector<int> colour(g.vertices().empty() ? 0 : g.vertices().back() + 1, -1);
        Bipartition result;
        for (auto root : g.vertices()) {
            if (colour[root] != -1)
                continue;
            colour[root] = 0;
            std::queue<Vertex> todo;
            todo.push(root);
            while (! todo.empty()) {
                auto v = todo.front();
                todo.pop();
                for (auto w : g.neighbours(v)) {
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[v];
                        todo.push(w);
                    }
                    else if (colour[w] == colour[v])
                        return std::nullopt;
                }
            }
        }
        for (auto v : g.vertices())
            (colour[v] == 0 ? result.x : result.y).push_back(v);
        return result;
    }

    auto min_degree(const Graph & g) -> int
    {
        if (g.empty())
            throw GraphError("min_degree of the empty graph");
        return relative_min_degree(g, g.vertices());
    }

    auto relative_min_degree(const Graph & g, const VertexSet & h) -> int
    {
        if (h.empty())
            throw GraphError("relative_min_degree over an empty vertex set");
        require_subset(g, h, "relative_min_degree");
        int best = g.degree(h.front());
        for (auto v : h)
            best = std::min(best, g.degree(v));
        return best;
    }

    auto neighbourhood(const Graph & g, const VertexSet & s) -> VertexSet
    {
        require_subset(g, s, "neighbourhood");
        VertexSet result;
        for (auto v : s)
            result = sets::unite(result, g.neighbours(v));
        return sets::subtract(result, s);
    }

    auto components(const Graph & g) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        std::vector<char> seen(g.vertices().empty() ? 0 : g.vertices().back() + 1, 0);
        for (auto root : g.vertices()) {
            if (seen[root])
                continue;
            VertexSet comp{root};
            seen[root] = 1;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (auto w : g.neighbours(comp[i]))
                    if (! seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            result.push_back(sets::make(std::move(comp)));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return components(g).size() <= 1;
    }

    auto is_clique(const Graph & g, const VertexSet & s) -> bool
    {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (! g.adjacent(s[i], s[j]))
                    return false;
        return true;
    }

    auto is_path_in(const Graph & g, const VertexPath & p) -> bool
    {
        if (p.vertices.empty())
            return false;
        for (auto v : p.vertices)
            if (! g.has_vertex(v))
                return false;
        if (p.vertex_set().size() != p.vertices.size())
            return false;
        for (std::size_t i = 1; i < p.vertices.size(); ++i)
            if (! g.adjacent(p.vertices[i - 1], p.vertices[i]))
                return false;
        return true;
    }
}

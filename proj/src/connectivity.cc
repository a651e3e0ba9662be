#include <kconpath/connectivity.hh>

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

namespace kconpath
{
    namespace
    {
        /**
         * Vertex-split digraph for a nonadjacent pair (source, sink). Every
         * other vertex v becomes in(v) -> out(v) with capacity 1; each edge uv
         * becomes out(u) -> in(v) and out(v) -> in(u) with capacity larger
         * than any flow. The flow runs from out(source) to in(sink).
         */
        class SplitNetwork
        {
        public:
            SplitNetwork(const Graph & g, Vertex source, Vertex sink) :
                _g(g),
                _index(g.vertices().empty() ? 0 : g.vertices().back() + 1, -1)
            {
                for (std::size_t i = 0; i < g.vertices().size(); ++i)
                    _index[g.vertices()[i]] = static_cast<int>(i);
                int n = g.order();
                _source_vertex = _index[source];
                _sink_vertex = _index[sink];
                _out.resize(2 * n);
                int big = n + 1;
                for (int i = 0; i < n; ++i)
                    if (i != _source_vertex && i != _sink_vertex)
                        add_arc(in_node(i), out_node(i), 1);
                for (auto [u, v] : g.edges()) {
                    int iu = _index[u], iv = _index[v];
                    for (auto [a, b] : {std::pair{iu, iv}, std::pair{iv, iu}}) {
                        // arcs into in(source) or out of out(sink) can never carry flow
                        if (b == _source_vertex || a == _sink_vertex)
                            continue;
                        add_arc(out_node(a), in_node(b), big);
                    }
                }
            }

            /// Augments until the flow reaches limit or no augmenting path remains.
            auto max_flow(int limit) -> int
            {
                int s = out_node(_source_vertex), t = in_node(_sink_vertex);
                std::vector<int> via(_out.size());
                while (_flow < limit) {
                    std::fill(via.begin(), via.end(), -1);
                    std::queue<int> todo;
                    todo.push(s);
                    via[s] = -2;
                    while (! todo.empty() && via[t] == -1) {
                        int u = todo.front();
                        todo.pop();
                        for (int a : _out[u])
                            if (residual(a) > 0 && via[_arcs[a].to] == -1) {
                                via[_arcs[a].to] = a;
                                todo.push(_arcs[a].to);
                            }
                    }
                    if (via[t] == -1)
                        break;
                    int push = limit - _flow;
                    for (int v = t; v != s; v = _arcs[via[v] ^ 1].to)
                        push = std::min(push, residual(via[v]));
                    for (int v = t; v != s; v = _arcs[via[v] ^ 1].to) {
                        _arcs[via[v]].flow += push;
                        _arcs[via[v] ^ 1].flow -= push;
                    }
                    _flow += push;
                }
                return _flow;
            }

            /// Separator on the source side of a maximum flow.
            auto source_side_cut() const -> VertexSet
            {
                auto inside = reach(out_node(_source_vertex), false);
                return separator(inside);
            }

            /**
             * Every minimum separator, via the closed sets of the residual
             * network that contain the source and not the sink. Requires a
             * maximum flow. Stops once found holds more than limit cuts.
             */
            auto enumerate_cuts(std::set<VertexSet> & found, std::size_t limit) const -> bool
            {
                std::size_t nodes = _out.size();
                std::vector<int> state(nodes, undecided);
                auto forced_in = reach(out_node(_source_vertex), false);
                auto forced_out = reach(in_node(_sink_vertex), true);
                for (std::size_t u = 0; u < nodes; ++u) {
                    if (forced_in[u])
                        state[u] = inside;
                    else if (forced_out[u])
                        state[u] = outside;
                }
                state[in_node(_source_vertex)] = outside;
                state[out_node(_sink_vertex)] = outside;

                std::size_t leaves = 0;
                std::size_t leaf_budget = 64 * (limit + 1);
                return enumerate(state, found, limit, leaves, leaf_budget);
            }

        private:
            struct Arc
            {
                int to;
                int cap;
                int flow;
            };

            enum : int
            {
                undecided,
                inside,
                outside
            };

            const Graph & _g;
            std::vector<int> _index;
            std::vector<Arc> _arcs;
            std::vector<std::vector<int>> _out;
            int _source_vertex = 0, _sink_vertex = 0, _flow = 0;

            static auto in_node(int i) -> int { return 2 * i; }
            static auto out_node(int i) -> int { return 2 * i + 1; }

            auto add_arc(int from, int to, int cap) -> void
            {
                _out[from].push_back(static_cast<int>(_arcs.size()));
                _arcs.push_back({to, cap, 0});
                _out[to].push_back(static_cast<int>(_arcs.size()));
                _arcs.push_back({from, 0, 0});
            }

            auto residual(int a) const -> int { return _arcs[a].cap - _arcs[a].flow; }

            /// Nodes reachable from start in the residual network, or nodes
            /// that reach start when backwards is set.
            auto reach(int start, bool backwards) const -> std::vector<char>
            {
                std::vector<char> seen(_out.size(), 0);
                std::vector<int> todo{start};
                seen[start] = 1;
                while (! todo.empty()) {
                    int u = todo.back();
                    todo.pop_back();
                    for (int a : _out[u]) {
                        // forwards: residual(u -> v) > 0; backwards: residual(v -> u) > 0
                        int v = _arcs[a].to;
                        int r = backwards ? residual(a ^ 1) : residual(a);
                        if (r > 0 && ! seen[v]) {
                            seen[v] = 1;
                            todo.push_back(v);
                        }
                    }
                }
                return seen;
            }

            template <typename Inside>
            auto separator(const Inside & in_set) const -> VertexSet
            {
                VertexSet cut;
                for (int i = 0; i < _g.order(); ++i) {
                    if (i == _source_vertex || i == _sink_vertex)
                        continue;
                    if (in_set[in_node(i)] && ! in_set[out_node(i)])
                        cut.push_back(_g.vertices()[i]);
                }
                return cut;
            }

            auto enumerate(std::vector<int> & state, std::set<VertexSet> & found, std::size_t limit,
                std::size_t & leaves, std::size_t leaf_budget) const -> bool
            {
                if (found.size() > limit || leaves > leaf_budget)
                    return false;
                auto next = std::find(state.begin(), state.end(), undecided);
                if (next == state.end()) {
                    ++leaves;
                    std::vector<char> in_set(state.size());
                    for (std::size_t u = 0; u < state.size(); ++u)
                        in_set[u] = state[u] == inside;
                    found.insert(separator(in_set));
                    return found.size() <= limit && leaves <= leaf_budget;
                }
                int u = static_cast<int>(next - state.begin());
                auto saved = state;

                // u inside drags in everything u reaches
                auto closure = reach(u, false);
                for (std::size_t v = 0; v < state.size(); ++v)
                    if (closure[v] && state[v] == undecided)
                        state[v] = inside;
                if (! enumerate(state, found, limit, leaves, leaf_budget))
                    return false;
                state = saved;

                // u outside pushes out everything that reaches u
                auto ancestors = reach(u, true);
                for (std::size_t v = 0; v < state.size(); ++v)
                    if (ancestors[v] && state[v] == undecided)
                        state[v] = outside;
                bool ok = enumerate(state, found, limit, leaves, leaf_budget);
                state = saved;
                return ok;
            }
        };

        auto minimum_degree_vertex(const Graph & g) -> Vertex
        {
            Vertex best = g.vertices().front();
            for (auto v : g.vertices())
                if (g.degree(v) < g.degree(best))
                    best = v;
            return best;
        }

        /// The pairs whose local connectivities have kappa(G) as their minimum,
        /// for a connected, non-complete graph.
        auto dominating_pairs(const Graph & g) -> std::vector<std::pair<Vertex, Vertex>>
        {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            auto v = minimum_degree_vertex(g);
            for (auto u : g.vertices())
                if (u != v && ! g.adjacent(u, v))
                    pairs.emplace_back(v, u);
            const auto & nv = g.neighbours(v);
            for (std::size_t i = 0; i < nv.size(); ++i)
                for (std::size_t j = i + 1; j < nv.size(); ++j)
                    if (! g.adjacent(nv[i], nv[j]))
                        pairs.emplace_back(nv[i], nv[j]);
            return pairs;
        }

        auto require_vertex(const Graph & g, Vertex v) -> void
        {
            if (! g.has_vertex(v))
                throw GraphError("no vertex " + std::to_string(v));
        }
    }

    auto vertex_connectivity(const Graph & g) -> CutReport
    {
        if (g.empty())
            throw GraphError("vertex connectivity of the empty graph");
        if (g.is_complete())
            return CutReport{g.order() - 1, std::nullopt, std::nullopt};

        auto comps = components(g);
        if (comps.size() > 1)
            return CutReport{0, VertexSet{}, std::pair{comps[0].front(), comps[1].front()}};

        int best = min_degree(g) + 1;
        std::pair<Vertex, Vertex> best_pair{-1, -1};
        for (auto [x, y] : dominating_pairs(g)) {
            SplitNetwork net(g, x, y);
            int f = net.max_flow(best);
            if (f < best) {
                best = f;
                best_pair = {x, y};
            }
        }

        SplitNetwork net(g, best_pair.first, best_pair.second);
        net.max_flow(best);
        return CutReport{best, net.source_side_cut(), best_pair};
    }

    auto is_k_connected(const Graph & g, int k) -> bool
    {
        if (k <= 0)
            return true;
        if (g.order() <= k)
            return false;
        if (g.is_complete())
            return true;
        if (min_degree(g) < k || ! is_connected(g))
            return false;
        for (auto [x, y] : dominating_pairs(g)) {
            SplitNetwork net(g, x, y);
            if (net.max_flow(k) < k)
                return false;
        }
        return true;
    }

    auto local_connectivity(const Graph & g, Vertex x, Vertex y) -> int
    {
        require_vertex(g, x);
        require_vertex(g, y);
        if (x == y)
            throw GraphError("local connectivity needs two distinct vertices");
        if (g.adjacent(x, y)) {
            auto edges = g.edges();
            std::erase(edges, Edge{std::min(x, y), std::max(x, y)});
            return 1 + local_connectivity(Graph(g.vertices(), edges), x, y);
        }
        SplitNetwork net(g, x, y);
        return net.max_flow(std::numeric_limits<int>::max());
    }

    auto is_vertex_cut(const Graph & g, const VertexSet & s) -> bool
    {
        return components(remove(g, s)).size() >= 2;
    }

    auto minimum_cuts(const Graph & g, std::size_t cap) -> CutEnumeration
    {
        if (g.empty() || g.is_complete())
            throw GraphError("minimum_cuts: a complete graph has no vertex cut");
        if (cap == 0)
            throw GraphError("minimum_cuts: cap must be at least 1");

        CutEnumeration result;
        result.kappa = vertex_connectivity(g).kappa;
        if (result.kappa == 0) {
            result.cuts.push_back(VertexSet{});
            return result;
        }

        std::set<VertexSet> found;
        const auto & vs = g.vertices();
        for (std::size_t i = 0; i < vs.size() && result.complete; ++i)
            for (std::size_t j = i + 1; j < vs.size() && result.complete; ++j) {
                if (g.adjacent(vs[i], vs[j]))
                    continue;
                SplitNetwork net(g, vs[i], vs[j]);
                if (net.max_flow(result.kappa + 1) != result.kappa)
                    continue;
                if (! net.enumerate_cuts(found, cap))
                    result.complete = false;
            }

        result.cuts.assign(found.begin(), found.end());
        if (result.cuts.size() > cap) {
            result.cuts.resize(cap);
            result.complete = false;
        }
        return result;
    }

    auto fragments_to_cut(const Graph & g, const VertexSet & s) -> std::vector<FragmentDecomposition>
    {
        auto comps = components(remove(g, s));
        if (comps.size() < 2)
            throw GraphError("fragments_to_cut: " + sets::to_string(s) + " is not a vertex cut");
        std::vector<FragmentDecomposition> result;
        auto rest = sets::subtract(g.vertices(), s);
        for (auto & comp : comps)
            result.push_back({s, comp, sets::subtract(rest, comp)});
        return result;
    }

    auto minimal_fragment_avoiding(const Graph & g, const VertexSet & c, std::size_t cap) -> MinimalFragment
    {
        for (auto v : c)
            require_vertex(g, v);
        if (! is_clique(g, c))
            throw GraphError("minimal_fragment_avoiding: " + sets::to_string(c) + " is not a clique");

        auto enumeration = minimum_cuts(g, cap);

        // every fragment contains a single-component fragment, so minimal
        // fragments are among the components of G - S
        std::vector<std::vector<FragmentDecomposition>> atoms;
        for (auto & s : enumeration.cuts)
            atoms.push_back(fragments_to_cut(g, s));

        auto strictly_contains_atom = [&](const VertexSet & f) {
            for (auto & per_cut : atoms)
                for (auto & d : per_cut)
                    if (sets::is_proper_subset(d.fragment, f))
                        return true;
            return false;
        };

        for (auto & per_cut : atoms)
            for (auto & d : per_cut)
                if (sets::disjoint(d.fragment, c) && ! strictly_contains_atom(d.fragment))
                    return MinimalFragment{d, enumeration.complete};

        if (! enumeration.complete)
            throw EnumerationExhausted("no fragment avoiding " + sets::to_string(c) + " among the first "
                + std::to_string(enumeration.cuts.size()) + " minimum cuts");
        throw std::logic_error("every fragment of every minimum cut meets the clique " + sets::to_string(c));
    }

    auto s_operator(const VertexSet & s, const VertexSet & f, const VertexSet & s1, const VertexSet & f1) -> VertexSet
    {
        return sets::unite(sets::unite(sets::intersect(s, f1), sets::intersect(s, s1)), sets::intersect(s1, f));
    }
}

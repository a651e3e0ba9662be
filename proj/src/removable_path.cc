#include <kconpath/removable_path.hh>

#include <algorithm>

namespace kconpath
{
    auto to_string(PairClass c) -> std::string
    {
        switch (c) {
        case PairClass::not_member: return "not_member";
        case PairClass::member: return "member";
        case PairClass::member_strong: return "member_strong";
        }
        return "?";
    }

    auto to_string(TransferMode mode) -> std::string
    {
        return mode == TransferMode::alpha ? "alpha" : "beta";
    }

    auto classify_pair(const Graph & g, const VertexSet & c, int k, int m) -> Classification
    {
        auto fail = [](std::string why) { return Classification{PairClass::not_member, std::move(why)}; };

        if (k < 1)
            return fail("k must be at least 1");
        if (m < 1)
            return fail("m must be at least 1");
        for (auto v : c)
            if (! g.has_vertex(v))
                return fail("clique vertex " + std::to_string(v) + " is not in the graph");
        if (static_cast<int>(c.size()) != k)
            return fail("clique has " + std::to_string(c.size()) + " vertices, expected k = " + std::to_string(k));
        if (! is_clique(g, c))
            return fail("clique vertices are not pairwise adjacent");

        auto outside = sets::subtract(g.vertices(), c);
        if (outside.empty())
            return fail("no vertices outside the clique");
        if (! bipartition(remove(g, c)))
            return fail("graph minus the clique is not bipartite");
        if (relative_min_degree(g, outside) < k + m)
            return fail("a vertex outside the clique has degree below k + m = " + std::to_string(k + m));
        for (auto u : outside)
            for (auto v : g.neighbours(u))
                if (u < v && ! sets::contains(c, v) && ! sets::disjoint(g.neighbours(u), g.neighbours(v)))
                    return fail("adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) + " share a neighbour");
        if (! is_k_connected(g, k))
            return fail("graph is not k-connected");
        if (! is_k_connected(g, k + 1))
            return Classification{PairClass::member, {}};
        return Classification{PairClass::member_strong, {}};
    }

    auto classify_pair(const AnchoredPair & pair) -> Classification
    {
        return classify_pair(pair.graph, pair.clique, pair.k, pair.m);
    }

    auto surgery_transfer_check(const Graph & g, const VertexSet & s, const VertexSet & f, const VertexPath & p,
        int k, int m, TransferMode mode, const VertexSet & c) -> TransferResult
    {
        auto hypothesis = [](std::string why) { return TransferResult{TransferVerdict::hypothesis_failed, std::move(why)}; };

        if (k < 1 || m < 1)
            return hypothesis("k and m must be positive");
        if (p.order() < 1 || p.order() > m)
            return hypothesis("path order " + std::to_string(p.order()) + " outside 1..m");
        if (! is_path_in(g, p))
            return hypothesis("not a path of the graph");
        for (auto v : sets::unite(s, f))
            if (! g.has_vertex(v))
                return hypothesis("vertex " + std::to_string(v) + " is not in the graph");
        if (g.empty() || vertex_connectivity(g).kappa != k)
            return hypothesis("kappa(G) differs from k");
        if (static_cast<int>(s.size()) != k || ! is_vertex_cut(g, s))
            return hypothesis("S is not a minimum vertex cut");
        if (f.empty() || ! sets::disjoint(f, s))
            return hypothesis("F is empty or meets S");
        auto comps = components(remove(g, s));
        bool all = true;
        for (auto & comp : comps) {
            bool in = sets::is_subset(comp, f);
            if (! in && ! sets::disjoint(comp, f))
                return hypothesis("F splits a component of G - S");
            all = all && in;
        }
        if (all)
            return hypothesis("F covers every component of G - S");
        auto pv = p.vertex_set();
        if (! sets::disjoint(pv, sets::unite(s, f)))
            return hypothesis("path meets S or F");

        if (mode == TransferMode::alpha) {
            if (! bipartition(g))
                return hypothesis("G is not bipartite");
            if (min_degree(g) < k + m)
                return hypothesis("minimum degree below k + m");
        }
        else {
            auto cls = classify_pair(g, c, k, m);
            if (cls.kind == PairClass::not_member)
                return hypothesis("(G, C) is not a member pair: " + cls.violated);
            if (! sets::is_subset(c, sets::unite(f, s)))
                return hypothesis("C is not inside F u S");
        }

        if (! is_k_connected(remove(completion(g, s), sets::unite(f, pv)), k))
            return hypothesis("kappa(G<S> - (F u P)) < k");

        if (is_k_connected(remove(g, pv), k))
            return TransferResult{TransferVerdict::holds, {}};
        return TransferResult{TransferVerdict::conclusion_failed, "kappa(G - P) < k"};
    }

    namespace
    {
        struct Search
        {
            const SearchOptions & options;
            std::vector<SurgeryEvent> trace;

            auto anchored(const Graph & g, const VertexSet & c, int k, int m, Vertex p0, int depth) -> VertexPath
            {
                auto cls = classify_pair(g, c, k, m);
                if (cls.kind != PairClass::member_strong)
                    throw InvariantViolation("recursive pair at depth " + std::to_string(depth)
                        + " is not in the strong class: " + (cls.violated.empty() ? "kappa < k + 1" : cls.violated));
                return grow(g, c, k, m, p0, TransferMode::beta, depth);
            }

            /// Grows a path from p0 in G - C: extend while G - P stays
            /// (k+1)-connected, otherwise rebuild the tail inside a minimal
            /// fragment of G - P.
            auto grow(const Graph & g, const VertexSet & c, int k, int m, Vertex p0, TransferMode mode, int depth) -> VertexPath
            {
                VertexPath path{{p0}};
                while (path.order() < m) {
                    auto on_path = path.vertex_set();
                    auto gp = remove(g, on_path);

                    if (is_k_connected(gp, k + 1)) {
                        auto blocked = sets::unite(c, on_path);
                        auto free = sets::subtract(g.neighbours(path.back()), blocked);
                        if (free.empty())
                            throw InvariantViolation("path end " + std::to_string(path.back()) + " has no neighbour outside C u P");
                        path.vertices.push_back(free.front());
                        continue;
                    }
                    if (! is_k_connected(gp, k))
                        throw InvariantViolation("G - P is not k-connected at order " + std::to_string(path.order()));

                    auto minimal = minimal_fragment_avoiding(gp, c, options.cut_cap);
                    const auto & s = minimal.decomposition.cut;
                    const auto & f = minimal.decomposition.fragment;
                    if (f.size() < 2)
                        throw InvariantViolation("minimal fragment " + sets::to_string(f) + " of G - P is a single vertex");

                    int pivot_index = path.order() - 1;
                    while (pivot_index >= 0 && sets::disjoint(g.neighbours(path.vertices[pivot_index]), f))
                        --pivot_index;
                    if (pivot_index < 0)
                        throw InvariantViolation("no path vertex has a neighbour in fragment " + sets::to_string(f));
                    Vertex pivot = path.vertices[pivot_index];
                    Vertex entry = sets::intersect(g.neighbours(pivot), f).front();
                    int tail = path.order() - 1 - pivot_index;

                    VertexPath prefix{{path.vertices.begin(), path.vertices.begin() + pivot_index + 1}};
                    auto g_prefix = remove(g, prefix.vertex_set());
                    if (neighbourhood(g_prefix, f) != s || ! is_k_connected(g_prefix, k))
                        throw InvariantViolation("S is not a minimum cut of G - P' with fragment F");

                    auto host = induced(completion(g_prefix, s), sets::unite(f, s));
                    if (host.order() >= g.order())
                        throw InvariantViolation("recursion would not shrink the graph");

                    std::size_t event_index = trace.size();
                    trace.push_back(SurgeryEvent{"surgery", depth, path.order(), s, f, pivot, entry,
                        minimal.certified, to_string(mode), false});

                    auto tail_path = anchored(host, s, k, tail + 1, entry, depth + 1);
                    if (! sets::is_subset(tail_path.vertex_set(), f))
                        throw InvariantViolation("replacement tail leaves the fragment");

                    auto complement = sets::subtract(g_prefix.vertices(), sets::unite(s, f));
                    auto transfer = surgery_transfer_check(g_prefix, s, complement, tail_path, k, tail + 1, mode, c);
                    if (transfer.verdict == TransferVerdict::hypothesis_failed)
                        throw InvariantViolation("transfer hypotheses fail after surgery: " + transfer.detail);
                    if (! transfer.holds())
                        throw InvariantViolation("transfer conclusion fails after surgery: " + transfer.detail);
                    trace[event_index].transfer_holds = true;

                    path = prefix;
                    path.vertices.insert(path.vertices.end(), tail_path.vertices.begin(), tail_path.vertices.end());
                }
                return path;
            }
        };

        auto residual_kappa(const Graph & g, const VertexPath & path) -> int
        {
            auto rest = remove(g, path.vertex_set());
            return rest.empty() ? 0 : vertex_connectivity(rest).kappa;
        }

        auto finish(const Graph & g, int k, int m, VertexPath path, std::vector<SurgeryEvent> trace) -> PathCertificate
        {
            if (path.order() != m || ! is_path_in(g, path))
                throw InvariantViolation("constructed sequence is not a path of order m");
            int kappa = residual_kappa(g, path);
            if (kappa < k)
                throw InvariantViolation("residual connectivity " + std::to_string(kappa) + " below k = " + std::to_string(k));
            return PathCertificate{k, m, std::move(path), kappa, std::move(trace)};
        }
    }

    auto find_anchored_path(const AnchoredPair & pair, Vertex p0, const SearchOptions & options) -> PathCertificate
    {
        auto cls = classify_pair(pair);
        if (cls.kind != PairClass::member_strong)
            throw HypothesisError("pair is not in the strong class: " + (cls.violated.empty() ? "kappa(G) < k + 1" : cls.violated));
        if (! pair.graph.has_vertex(p0) || sets::contains(pair.clique, p0))
            throw HypothesisError("start vertex " + std::to_string(p0) + " must lie outside the clique");

        Search search{options, {}};
        auto path = search.grow(pair.graph, pair.clique, pair.k, pair.m, p0, TransferMode::beta, 0);
        if (path.front() != p0 || ! sets::disjoint(path.vertex_set(), pair.clique))
            throw InvariantViolation("anchored path does not start at p0 or meets the clique");
        return finish(pair.graph, pair.k, pair.m, std::move(path), std::move(search.trace));
    }

    auto find_removable_path(const Graph & g, int k, int m, const SearchOptions & options) -> PathCertificate
    {
        if (k < 1 || m < 1)
            throw HypothesisError("k and m must be positive");
        if (g.empty())
            throw HypothesisError("graph is empty");
        if (! bipartition(g))
            throw HypothesisError("graph is not bipartite");
        if (min_degree(g) < k + m)
            throw HypothesisError("minimum degree " + std::to_string(min_degree(g)) + " is below k + m = " + std::to_string(k + m));
        int kappa = vertex_connectivity(g).kappa;
        if (kappa < k)
            throw HypothesisError("connectivity " + std::to_string(kappa) + " is below k = " + std::to_string(k));

        Search search{options, {}};
        if (kappa >= k + 1) {
            auto path = search.grow(g, {}, k, m, g.vertices().front(), TransferMode::alpha, 0);
            return finish(g, k, m, std::move(path), std::move(search.trace));
        }

        // kappa = k: move into a minimal fragment, completing the cut
        auto minimal = minimal_fragment_avoiding(g, {}, options.cut_cap);
        const auto & s = minimal.decomposition.cut;
        const auto & f = minimal.decomposition.fragment;
        if (f.size() < 2)
            throw InvariantViolation("minimal fragment " + sets::to_string(f) + " is a single vertex");
        auto host = induced(completion(g, s), sets::unite(f, s));

        search.trace.push_back(SurgeryEvent{"reduction", 0, 0, s, f, std::nullopt, std::nullopt,
            minimal.certified, to_string(TransferMode::alpha), false});
        auto path = search.anchored(host, s, k, m, f.front(), 1);
        if (! sets::is_subset(path.vertex_set(), f))
            throw InvariantViolation("path found in the completed fragment leaves the fragment");

        auto transfer = surgery_transfer_check(g, s, minimal.decomposition.complement, path, k, m, TransferMode::alpha);
        if (transfer.verdict == TransferVerdict::hypothesis_failed)
            throw InvariantViolation("transfer hypotheses fail after reduction: " + transfer.detail);
        if (! transfer.holds())
            throw InvariantViolation("transfer conclusion fails after reduction: " + transfer.detail);
        search.trace.front().transfer_holds = true;
        return finish(g, k, m, std::move(path), std::move(search.trace));
    }
}

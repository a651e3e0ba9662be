#include <kconpath/oracle.hh>

#include <kconpath/connectivity.hh>
#include <kconpath/graph_io.hh>

#include <functional>
#include <map>
#include <set>

namespace kconpath
{
    namespace
    {
        auto check_guard(const Graph & g, const OracleGuard & guard) -> void
        {
            if (! guard.override && g.order() > guard.max_order)
                throw GuardExceeded("graph has " + std::to_string(g.order()) + " vertices, oracle guard is "
                    + std::to_string(guard.max_order));
        }

        /// Calls visit on every size-element subset of items, in lexicographic order.
        auto for_each_subset(const VertexSet & items, int size, const std::function<bool(const VertexSet &)> & visit) -> void
        {
            int n = static_cast<int>(items.size());
            if (size < 0 || size > n)
                return;
            std::vector<int> idx(size);
            for (int i = 0; i < size; ++i)
                idx[i] = i;
            VertexSet chosen(size);
            while (true) {
                for (int i = 0; i < size; ++i)
                    chosen[i] = items[idx[i]];
                if (! visit(chosen))
                    return;
                int i = size - 1;
                while (i >= 0 && idx[i] == n - size + i)
                    --i;
                if (i < 0)
                    return;
                ++idx[i];
                for (int j = i + 1; j < size; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }

        /// Nonempty proper unions of components; empty if there are too many.
        auto semifragments(const std::vector<VertexSet> & comps) -> std::vector<VertexSet>
        {
            std::vector<VertexSet> result;
            if (comps.size() < 2 || comps.size() > 12)
                return result;
            unsigned full = (1u << comps.size()) - 1;
            for (unsigned mask = 1; mask < full; ++mask) {
                VertexSet f;
                for (std::size_t i = 0; i < comps.size(); ++i)
                    if (mask & (1u << i))
                        f = sets::unite(f, comps[i]);
                result.push_back(std::move(f));
            }
            return result;
        }

        auto kappa_at_least(const Graph & g, int k) -> bool
        {
            return is_k_connected(g, k);
        }
    }

    auto exhaustive_cuts(const Graph & g, int size) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        for_each_subset(g.vertices(), size, [&](const VertexSet & s) {
            if (components(remove(g, s)).size() >= 2)
                result.push_back(s);
            return true;
        });
        return result;
    }

    auto exhaustive_connectivity(const Graph & g) -> int
    {
        if (g.empty())
            throw GraphError("connectivity of the empty graph");
        if (g.is_complete())
            return g.order() - 1;
        for (int size = 0; size <= g.order() - 2; ++size) {
            bool found = false;
            for_each_subset(g.vertices(), size, [&](const VertexSet & s) {
                found = components(remove(g, s)).size() >= 2;
                return ! found;
            });
            if (found)
                return size;
        }
        throw std::logic_error("non-complete graph without a vertex cut");
    }

    auto brute_force_paths(const Graph & g, int k, int m, std::size_t limit, const OracleGuard & guard) -> OracleReport
    {
        check_guard(g, guard);
        OracleReport report;
        report.instance_id = write_graph6(g);
        if (k < 1 || m < 1)
            return report;
        report.hypothesis_ok = ! g.empty() && bipartition(g) && min_degree(g) >= k + m && kappa_at_least(g, k);

        std::map<VertexSet, bool> removable;
        std::vector<Vertex> current;
        std::set<Vertex> used;

        std::function<void()> extend = [&]() {
            if (static_cast<int>(current.size()) == m) {
                if (m > 1 && current.front() > current.back())
                    return;
                auto key = sets::make(current);
                auto it = removable.find(key);
                if (it == removable.end())
                    it = removable.emplace(key, kappa_at_least(remove(g, key), k)).first;
                if (it->second) {
                    ++report.witness_count;
                    if (report.witness_paths.size() < limit)
                        report.witness_paths.push_back(VertexPath{current});
                }
                return;
            }
            for (auto w : g.neighbours(current.back()))
                if (! used.contains(w)) {
                    current.push_back(w);
                    used.insert(w);
                    extend();
                    used.erase(w);
                    current.pop_back();
                }
        };

        for (auto v : g.vertices()) {
            current = {v};
            used = {v};
            extend();
        }
        return report;
    }

    auto verify_certificate(const Graph & g, int k, const PathCertificate & cert) -> VerifyResult
    {
        const auto & p = cert.path.vertices;
        if (p.empty())
            return {false, "path-invalid", "empty path"};
        std::set<Vertex> seen;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (! g.has_vertex(p[i]))
                return {false, "path-invalid", "vertex " + std::to_string(p[i]) + " is not in the graph"};
            if (! seen.insert(p[i]).second)
                return {false, "path-invalid", "vertex " + std::to_string(p[i]) + " repeats"};
            if (i > 0 && ! g.adjacent(p[i - 1], p[i]))
                return {false, "path-invalid", std::to_string(p[i - 1]) + "-" + std::to_string(p[i]) + " is not an edge"};
        }
        if (static_cast<int>(p.size()) != cert.m)
            return {false, "order", "path has " + std::to_string(p.size()) + " vertices, certificate says m = " + std::to_string(cert.m)};

        auto rest = remove(g, VertexSet(seen.begin(), seen.end()));
        int kappa = rest.empty() ? 0 : vertex_connectivity(rest).kappa;
        if (kappa < k)
            return {false, "kappa", "kappa(G - V(P)) = " + std::to_string(kappa) + " < k = " + std::to_string(k)};
        return {true, {}, {}};
    }

    auto check_fragment_completion(const Graph & g, int k, const OracleGuard & guard) -> OracleReport
    {
        check_guard(g, guard);
        OracleReport report;
        report.instance_id = write_graph6(g);
        if (g.empty() || g.is_complete() || vertex_connectivity(g).kappa != k)
            return report;
        report.hypothesis_ok = true;

        struct CutFragments
        {
            VertexSet cut;
            std::vector<VertexSet> comps;
        };
        std::vector<CutFragments> all;
        for (auto & s : exhaustive_cuts(g, k))
            all.push_back({s, components(remove(g, s))});

        auto is_minimal = [&](const VertexSet & f) {
            for (auto & cf : all)
                for (auto & comp : cf.comps)
                    if (sets::is_proper_subset(comp, f))
                        return false;
            return true;
        };

        for (auto & [s, comps] : all) {
            auto frags = semifragments(comps);
            if (frags.empty()) {
                ++report.skipped;
                frags = comps;
            }
            auto completed = completion(g, s);
            for (auto & f : frags) {
                ++report.checked;
                auto rest = sets::subtract(g.vertices(), sets::unite(s, f));
                auto h = remove(completed, rest);
                if (! kappa_at_least(h, k))
                    report.violated_claims.push_back("completion below k: S=" + sets::to_string(s) + " F=" + sets::to_string(f));
                else if (f.size() >= 2 && is_minimal(f) && ! kappa_at_least(h, k + 1))
                    report.violated_claims.push_back("minimal-fragment completion below k+1: S=" + sets::to_string(s) + " F=" + sets::to_string(f));
            }
        }
        return report;
    }

    auto check_crossing_cuts(const Graph & g, int k, std::size_t samples, const OracleGuard & guard) -> OracleReport
    {
        check_guard(g, guard);
        OracleReport report;
        report.instance_id = write_graph6(g);
        if (k < 1 || g.empty())
            return report;

        auto cuts_small = exhaustive_cuts(g, k - 1);
        auto cuts_big = exhaustive_cuts(g, k);
        report.hypothesis_ok = ! cuts_small.empty() && ! cuts_big.empty();
        if (! report.hypothesis_ok) {
            ++report.skipped;
            return report;
        }

        struct Side
        {
            VertexSet cut, frag, rest;
        };
        std::vector<Side> small_sides;
        for (auto & s1 : cuts_small) {
            auto comps = components(remove(g, s1));
            auto frags = semifragments(comps);
            if (frags.empty())
                ++report.skipped;
            for (auto & f1 : frags)
                small_sides.push_back({s1, f1, sets::subtract(g.vertices(), sets::unite(s1, f1))});
        }

        auto name = [](const Side & a, const Side & b) {
            return "S=" + sets::to_string(a.cut) + " F=" + sets::to_string(a.frag) + " S1=" + sets::to_string(b.cut)
                + " F1=" + sets::to_string(b.frag);
        };

        for (auto & s : cuts_big) {
            auto comps = components(remove(g, s));
            auto frags = semifragments(comps);
            if (frags.empty())
                ++report.skipped;
            auto completed = completion(g, s);
            for (auto & f : frags) {
                auto fbar = sets::subtract(g.vertices(), sets::unite(s, f));
                if (! kappa_at_least(remove(completed, f), k) || ! kappa_at_least(remove(completed, fbar), k)) {
                    ++report.skipped;
                    continue;
                }
                Side big{s, f, fbar};
                for (auto & small : small_sides) {
                    if (samples != 0 && report.checked >= samples)
                        return report;
                    ++report.checked;
                    auto crossing = s_operator(s, f, small.cut, small.frag).size();
                    if (! sets::disjoint(f, small.frag) && static_cast<int>(crossing) < k)
                        report.violated_claims.push_back("alpha: " + name(big, small));
                    if (static_cast<int>(crossing) >= k) {
                        bool first = sets::intersect(small.cut, f).size() >= sets::intersect(s, small.rest).size();
                        bool second = sets::intersect(s, small.frag).size() > sets::intersect(small.cut, fbar).size();
                        bool third = sets::disjoint(fbar, small.rest);
                        if (! (first && second && third))
                            report.violated_claims.push_back("beta: " + name(big, small));
                    }
                }
            }
        }
        return report;
    }

    auto tree_removal_exists(const Graph & g, int k, const Graph & tree, const OracleGuard & guard) -> bool
    {
        check_guard(g, guard);
        if (tree.empty() || ! is_connected(tree) || tree.edge_count() + 1 != static_cast<std::size_t>(tree.order()))
            throw GraphError("pattern is not a tree");
        if (! guard.override && tree.order() > guard.max_tree_order)
            throw GuardExceeded("tree has " + std::to_string(tree.order()) + " vertices, guard is "
                + std::to_string(guard.max_tree_order));
        if (tree.order() > g.order())
            return false;

        // breadth-first order so each pattern vertex after the root has its parent placed
        std::vector<Vertex> order{tree.vertices().front()};
        std::map<Vertex, Vertex> parent;
        std::set<Vertex> placed{order.front()};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (auto w : tree.neighbours(order[i]))
                if (placed.insert(w).second) {
                    parent[w] = order[i];
                    order.push_back(w);
                }

        std::map<Vertex, Vertex> image;
        std::set<Vertex> used;
        std::set<VertexSet> tried;

        std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
            if (i == order.size()) {
                VertexSet vs(used.begin(), used.end());
                if (! tried.insert(vs).second)
                    return false;
                return kappa_at_least(remove(g, vs), k);
            }
            auto pattern_vertex = order[i];
            auto candidates = i == 0 ? g.vertices() : g.neighbours(image.at(parent.at(pattern_vertex)));
            for (auto v : candidates) {
                if (used.contains(v))
                    continue;
                image[pattern_vertex] = v;
                used.insert(v);
                bool found = place(i + 1);
                used.erase(v);
                if (found)
                    return true;
            }
            return false;
        };
        return place(0);
    }
}

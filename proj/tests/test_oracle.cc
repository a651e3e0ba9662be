#include <doctest.h>

#include <kconpath/connectivity.hh>
#include <kconpath/generators.hh>
#include <kconpath/graph_io.hh>
#include <kconpath/oracle.hh>

#include <algorithm>
#include <random>

using namespace kconpath;

namespace
{
    auto cycle(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
        return build_graph(n, edges);
    }

    auto path_graph(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return build_graph(n, edges);
    }

    auto star(int leaves) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 1; i <= leaves; ++i)
            edges.emplace_back(0, i);
        return build_graph(leaves + 1, edges);
    }
}

TEST_CASE("brute_force_paths examples")
{
    auto k22 = brute_force_paths(complete_bipartite(2, 2), 1, 1);
    CHECK(k22.hypothesis_ok);
    CHECK(k22.witness_count == 4);
    CHECK(k22.witness_paths.size() == 4);

    auto k33 = brute_force_paths(complete_bipartite(3, 3), 1, 2);
    CHECK(k33.witness_count == 9);
    for (auto & p : k33.witness_paths) {
        CHECK(p.order() == 2);
        CHECK(p.front() < p.back());
        CHECK(vertex_connectivity(remove(complete_bipartite(3, 3), p.vertex_set())).kappa == 2);
    }

    auto c4 = brute_force_paths(cycle(4), 2, 1);
    CHECK_FALSE(c4.hypothesis_ok);
    CHECK(c4.witness_count == 0);

    auto truncated = brute_force_paths(complete_bipartite(3, 3), 1, 2, 3);
    CHECK(truncated.witness_paths.size() == 3);
    CHECK(truncated.witness_count == 9);
    CHECK(truncated.instance_id == write_graph6(complete_bipartite(3, 3)));
}

TEST_CASE("brute_force_paths counts match direct enumeration")
{
    // orientation-free count of paths of order m whose removal keeps kappa >= k
    auto direct = [](const Graph & g, int k, int m) {
        std::size_t count = 0;
        std::vector<Vertex> cur;
        std::function<void()> go = [&] {
            if (static_cast<int>(cur.size()) == m) {
                if (cur.front() <= cur.back()) {
                    auto rest = remove(g, sets::make(cur));
                    count += ! rest.empty() && exhaustive_connectivity(rest) >= k;
                }
                return;
            }
            for (auto w : cur.empty() ? g.vertices() : g.neighbours(cur.back()))
                if (std::find(cur.begin(), cur.end(), w) == cur.end()) {
                    cur.push_back(w);
                    go();
                    cur.pop_back();
                }
        };
        go();
        return count;
    };
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto g = random_graph(n, 0.6, rng());
        int k = 1 + static_cast<int>(rng() % 2), m = 1 + static_cast<int>(rng() % 3);
        CHECK(brute_force_paths(g, k, m).witness_count == direct(g, k, m));
    }
}

TEST_CASE("oracle guard")
{
    auto big = complete_bipartite(9, 9);
    CHECK_THROWS_AS(brute_force_paths(big, 1, 1), GuardExceeded);
    OracleGuard relaxed;
    relaxed.override = true;
    CHECK(brute_force_paths(big, 1, 1, unlimited, relaxed).witness_count == 18);
    CHECK_THROWS_AS(tree_removal_exists(complete_bipartite(5, 5), 1, path_graph(9)), GuardExceeded);
}

TEST_CASE("verify_certificate")
{
    auto k23 = complete_bipartite(2, 3);
    PathCertificate good;
    good.k = 1;
    good.m = 2;
    good.path = VertexPath{{0, 2}};
    CHECK(verify_certificate(k23, 1, good));

    auto non_edge = good;
    non_edge.path = VertexPath{{0, 1}};
    CHECK(verify_certificate(k23, 1, non_edge).failure == "path-invalid");

    auto repeated = good;
    repeated.m = 3;
    repeated.path = VertexPath{{0, 2, 0}};
    CHECK(verify_certificate(k23, 1, repeated).failure == "path-invalid");

    auto wrong_order = good;
    wrong_order.m = 3;
    CHECK(verify_certificate(k23, 1, wrong_order).failure == "order");

    // x0 y0 x1 leaves two isolated Y vertices
    PathCertificate drops;
    drops.k = 2;
    drops.m = 3;
    drops.path = VertexPath{{0, 2, 1}};
    auto r = verify_certificate(k23, 2, drops);
    CHECK_FALSE(r);
    CHECK(r.failure == "kappa");

    auto outside = good;
    outside.path = VertexPath{{0, 9}};
    CHECK(verify_certificate(k23, 1, outside).failure == "path-invalid");
}

TEST_CASE("fragment completion checker")
{
    auto abc = check_fragment_completion(path_graph(3), 1);
    CHECK(abc.hypothesis_ok);
    CHECK(abc.checked > 0);
    CHECK(abc.violated_claims.empty());

    auto c6 = check_fragment_completion(cycle(6), 2);
    CHECK(c6.hypothesis_ok);
    CHECK(c6.checked > 0);
    CHECK(c6.violated_claims.empty());

    CHECK_FALSE(check_fragment_completion(complete_bipartite(3, 3), 2).hypothesis_ok); // kappa is 3
    CHECK_FALSE(check_fragment_completion(complete_bipartite(1, 1), 0).hypothesis_ok);

    std::mt19937_64 rng(8);
    int exercised = 0;
    for (int trial = 0; trial < 150; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3);
        int nx = k + 1 + static_cast<int>(rng() % 4), ny = k + 1 + static_cast<int>(rng() % 4);
        auto g = random_k_connected_bipartite(nx, ny, k, k, rng(), 0.45);
        if (! g)
            continue;
        int kappa = vertex_connectivity(*g).kappa;
        auto report = check_fragment_completion(*g, kappa);
        CHECK(report.violated_claims.empty());
        exercised += report.hypothesis_ok;
    }
    CHECK(exercised > 50);
}

TEST_CASE("crossing cuts checker")
{
    // k = 1: only a disconnected graph has an empty cut
    auto k1 = check_crossing_cuts(cycle(6), 1);
    CHECK_FALSE(k1.hypothesis_ok);
    CHECK(k1.skipped == 1);
    CHECK(k1.checked == 0);

    auto g = read_graph6("GiQtdO");
    auto report = check_crossing_cuts(g, 3);
    CHECK(report.hypothesis_ok);
    CHECK(report.checked == 4);
    CHECK(report.violated_claims.empty());

    auto sampled = check_crossing_cuts(g, 3, 2);
    CHECK(sampled.checked == 2);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        auto h = random_graph(6 + static_cast<int>(rng() % 4), 0.5, rng());
        for (int k = 1; k <= 3; ++k)
            CHECK(check_crossing_cuts(h, k).violated_claims.empty());
    }
}

TEST_CASE("tree_removal_exists")
{
    CHECK(tree_removal_exists(complete_bipartite(2, 2), 1, build_graph(1, {})));
    CHECK_FALSE(tree_removal_exists(complete_bipartite(2, 2), 2, path_graph(2)));
    CHECK(tree_removal_exists(complete_bipartite(4, 4), 1, star(2)));
    CHECK_FALSE(tree_removal_exists(complete_bipartite(2, 2), 1, path_graph(3)));
    CHECK_FALSE(tree_removal_exists(complete_bipartite(2, 2), 1, path_graph(5))); // larger than the host
    CHECK_THROWS_AS(tree_removal_exists(complete_bipartite(2, 2), 1, cycle(4)), GraphError);

    // agreement with path enumeration when the tree is a path
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(5 + static_cast<int>(rng() % 4), 0.55, rng());
        int k = 1 + static_cast<int>(rng() % 2), m = 1 + static_cast<int>(rng() % 3);
        CHECK(tree_removal_exists(g, k, path_graph(m)) == (brute_force_paths(g, k, m).witness_count > 0));
    }
}

TEST_CASE("exhaustive connectivity")
{
    CHECK(exhaustive_connectivity(complete_bipartite(3, 3)) == 3);
    CHECK(exhaustive_connectivity(cycle(7)) == 2);
    CHECK(exhaustive_connectivity(path_graph(4)) == 1);
    CHECK(exhaustive_connectivity(build_graph(3, {})) == 0);
    CHECK(exhaustive_connectivity(completion(build_graph(4, {}), {0, 1, 2, 3})) == 3);
    CHECK(exhaustive_cuts(cycle(6), 2).size() == 9);
    CHECK(exhaustive_cuts(path_graph(3), 1) == std::vector<VertexSet>{{1}});
}

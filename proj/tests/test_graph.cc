#include <doctest.h>

#include "oracles.hh"

#include <gridlocus/errors.hh>
#include <gridlocus/field.hh>
#include <gridlocus/graph.hh>
#include <gridlocus/graph_io.hh>
#include <gridlocus/reference_graphs.hh>
#include <gridlocus/symplectic.hh>

#include <numeric>
#include <random>

using namespace gridlocus;

namespace
{
    auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        GraphBuilder b(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (coin(rng))
                    b.add_edge(i, j);
        return std::move(b).build();
    }

    auto random_permutation(int n, std::mt19937_64 & rng) -> std::vector<Vertex>
    {
        std::vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        GraphBuilder builder(a.order() + b.order());
        for (int u = 0 ; u < a.order() ; ++u)
            for (auto v : a.neighbours(u))
                builder.add_edge(u, v);
        for (int u = 0 ; u < b.order() ; ++u)
            for (auto v : b.neighbours(u))
                builder.add_edge(a.order() + u, a.order() + v);
        return std::move(builder).build();
    }
}

TEST_CASE("graph basics")
{
    GraphBuilder b(3);
    b.add_edge(0, 1);
    b.add_edge(1, 0);
    CHECK_THROWS_AS(b.add_edge(2, 2), DomainError);
    auto g = std::move(b).build();
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.regular_degree());
}

TEST_CASE("bfs profiles")
{
    auto one = complete_graph(1);
    CHECK(bfs_profile(one, 0).eccentricity == 0);

    auto ctx = make_field_context(5, 1);
    auto g5 = build_gamma(ctx);
    for (Vertex x : { 0, 17, 77 })
        CHECK(bfs_profile(g5, x).k == std::vector<long long>{ 1, 25, 50, 2 });

    auto j63 = johnson(6, 3);
    for (Vertex x = 0 ; x < j63.order() ; ++x)
        CHECK(bfs_profile(j63, x).k == std::vector<long long>{ 1, 9, 9, 1 });

    std::mt19937_64 rng(3);
    for (int t = 0 ; t < 20 ; ++t) {
        auto g = random_graph(30, 0.1, rng);
        DistanceMatrix dm(g);
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            auto want = oracle::bfs(g, x);
            auto got = bfs_profile(g, x).dist;
            CHECK(got == want);
            for (Vertex y = 0 ; y < g.order() ; ++y) {
                CHECK(dm(x, y) == (want[y] == -1 ? DistanceMatrix::unreachable : want[y]));
                CHECK(dm(x, y) == dm(y, x));
            }
        }
        for (Vertex x = 0 ; x < g.order() ; ++x)
            for (Vertex y = 0 ; y < g.order() ; ++y)
                for (Vertex z = 0 ; z < g.order() ; ++z)
                    if (dm(x, y) != DistanceMatrix::unreachable && dm(y, z) != DistanceMatrix::unreachable)
                        CHECK(dm(x, z) <= dm(x, y) + dm(y, z));
    }
}

TEST_CASE("induced subgraphs and common neighbours")
{
    auto grid = rook_grid(5, 5);
    CHECK(induced(grid, std::vector<Vertex>{}).order() == 0);
    std::vector<Vertex> all(grid.order());
    std::iota(all.begin(), all.end(), 0);
    CHECK(induced(grid, all) == grid);
    CHECK(induced(grid, std::vector<Vertex>{ 5, 6, 7, 8, 9 }) == complete_graph(5));
    CHECK_THROWS_AS((void) induced(grid, std::vector<Vertex>{ 0, 25 }), DomainError);

    CHECK(common_neighbours(grid, 0, 6).size() == 2);

    auto ctx = make_field_context(5, 1);
    auto g5 = build_gamma(ctx);
    DistanceMatrix dm(g5);
    for (Vertex y = 1 ; y < g5.order() ; ++y) {
        if (dm(0, y) == 1)
            CHECK(common_neighbours(g5, 0, y).size() == 8);
        if (dm(0, y) == 3)
            CHECK(common_neighbours(g5, 0, y).empty());
    }
}

TEST_CASE("maximal cliques")
{
    CHECK(maximal_cliques(complete_graph(6)).size() == 1);

    auto grid = maximal_cliques(rook_grid(5, 5));
    CHECK(grid.size() == 10);
    for (auto & c : grid)
        CHECK(c.size() == 5);

    auto ctx = make_field_context(5, 1);
    auto g5 = maximal_cliques(build_gamma(ctx));
    CHECK(g5.size() == 130);
    for (auto & c : g5)
        CHECK(c.size() == 6);

    std::mt19937_64 rng(11);
    for (int t = 0 ; t < 30 ; ++t) {
        auto g = random_graph(14, 0.5, rng);
        CHECK(maximal_cliques(g) == oracle::brute_force_maximal_cliques(g));
    }
    CHECK(maximal_cliques(petersen_graph()) == oracle::brute_force_maximal_cliques(petersen_graph()));
}

TEST_CASE("rook grid recognition")
{
    CHECK(is_rook_grid(cycle_graph(4), 2, 2));
    CHECK(is_rook_grid(rook_grid(5, 5), 5, 5));
    CHECK(is_rook_grid(rook_grid(3, 4), 3, 4));
    CHECK(is_rook_grid(rook_grid(3, 4), 4, 3));
    for (int m = 1 ; m <= 4 ; ++m)
        for (int n = 1 ; n <= 4 ; ++n)
            CHECK_FALSE(is_rook_grid(petersen_graph(), m, n));

    auto labelling = rook_grid_labelling(rook_grid(4, 4), 4, 4);
    REQUIRE(labelling);
    auto g = rook_grid(4, 4);
    for (Vertex u = 0 ; u < 16 ; ++u)
        for (Vertex v = u + 1 ; v < 16 ; ++v)
            CHECK(g.adjacent(u, v) == (labelling->row[u] == labelling->row[v] || labelling->column[u] == labelling->column[v]));

    // agreement with isomorphism testing on small graphs
    std::vector<Graph> corpus{ rook_grid(3, 3), rook_grid(2, 4), rook_grid(4, 4), rook_complement(3), rook_complement(4),
        johnson(4, 2), johnson(5, 2), petersen_graph(), cycle_graph(6), complete_graph(4), cycle_graph(4) };
    std::mt19937_64 rng(5);
    auto shuffled = relabel(rook_grid(3, 5), random_permutation(15, rng));
    corpus.push_back(shuffled);
    for (auto & h : corpus)
        for (int m = 1 ; m <= 5 ; ++m)
            for (int n = m ; n <= 5 ; ++n)
                if (m * n == h.order())
                    CHECK(is_rook_grid(h, m, n) == are_isomorphic(h, rook_grid(m, n)));
}

TEST_CASE("isomorphism")
{
    auto ctx = make_field_context(3, 1);
    CHECK(are_isomorphic(build_gamma(ctx), johnson(6, 3)));
    CHECK_FALSE(are_isomorphic(rook_grid(4, 4), rook_complement(4)));
    CHECK(are_isomorphic(rook_complement(3), rook_grid(3, 3)));
    CHECK_FALSE(are_isomorphic(petersen_graph(), cycle_graph(10)));

    std::mt19937_64 rng(9);
    for (auto & g : { petersen_graph(), johnson(6, 3), rook_grid(4, 4), random_graph(25, 0.3, rng) })
        for (int t = 0 ; t < 3 ; ++t)
            CHECK(are_isomorphic(g, relabel(g, random_permutation(g.order(), rng))));

    CHECK_THROWS_AS((void) are_isomorphic(johnson(10, 5), johnson(10, 5), 100), CapacityError);
}

TEST_CASE("cycle decomposition")
{
    CHECK(cycle_decomposition(cycle_graph(4)).lengths == std::vector<int>{ 4 });
    CHECK(cycle_decomposition(disjoint_union(cycle_graph(4), cycle_graph(4))).lengths == std::vector<int>{ 4, 4 });
    CHECK(cycle_decomposition(disjoint_union(cycle_graph(6), cycle_graph(4))).to_string() == "{4,6}");
    CHECK_THROWS_AS((void) cycle_decomposition(path_graph(4)), DomainError);
    CHECK(make_profile({ 4, 4, 4 }).uniform_length() == 4);
    CHECK_FALSE(make_profile({ 4, 6 }).uniform_length());
}

TEST_CASE("graph6 round trip")
{
    // known encodings
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(petersen_graph()).size() == 1 + 8);
    CHECK(from_graph6("C~") == complete_graph(4));
    CHECK(from_graph6(">>graph6<<C~\n") == complete_graph(4));
    CHECK_THROWS_AS((void) from_graph6("C"), ParseError);
    CHECK_THROWS_AS((void) from_graph6(""), ParseError);

    std::mt19937_64 rng(1);
    for (int n : { 0, 1, 2, 5, 62, 63, 64, 100, 300 }) {
        auto g = random_graph(n, 0.3, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
        CHECK(graph_from_json(to_json(g)) == g);
    }
    auto j = johnson(5, 2);
    CHECK(graph_from_json(to_json(j)).labels() == j.labels());
}

TEST_CASE("complement and relabel")
{
    auto g = rook_grid(4, 4);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g) == rook_complement(4));
    std::vector<Vertex> identity(16);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(relabel(g, identity) == g);
}

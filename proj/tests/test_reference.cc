#include <doctest.h>

#include <gridlocus/caps.hh>
#include <gridlocus/drg.hh>
#include <gridlocus/errors.hh>
#include <gridlocus/local_grid.hh>
#include <gridlocus/mu.hh>
#include <gridlocus/reference_graphs.hh>

#include <cstdlib>

using namespace gridlocus;

namespace
{
    auto all_mu(const Graph & g) -> std::set<int>
    {
        std::set<int> out;
        DistanceMatrix dm(g);
        for (Vertex x = 0 ; x < g.order() ; ++x)
            for (Vertex y = x + 1 ; y < g.order() ; ++y)
                if (dm(x, y) == 2)
                    out.insert(g.common_neighbour_count(x, y));
        return out;
    }
}

TEST_CASE("Johnson graphs")
{
    auto j63 = johnson(6, 3);
    CHECK(j63.order() == 20);
    CHECK(j63.regular_degree() == 9);
    auto d = detect_locally_grid(j63);
    CHECK(d.ok);
    CHECK(d.m == 3);
    CHECK(d.n == 3);
    CHECK(all_mu(j63) == std::set<int>{ 4 });
    CHECK(j63.label(0) == "0 1 2");

    auto j105 = johnson(10, 5);
    CHECK(j105.order() == 252);
    CHECK(j105.regular_degree() == 25);
    auto d5 = detect_locally_grid(j105);
    CHECK(d5.ok);
    CHECK(d5.n == 5);
    CHECK(all_mu(j105) == std::set<int>{ 4 });

    // J(4,2) is the octahedron: every neighbourhood is a 4-cycle
    auto j42 = johnson(4, 2);
    CHECK(j42.order() == 6);
    CHECK(j42.regular_degree() == 4);
    for (Vertex v = 0 ; v < 6 ; ++v) {
        auto nb = induced(j42, j42.neighbours(v));
        CHECK(cycle_decomposition(nb).lengths == std::vector<int>{ 4 });
    }

    CHECK_THROWS_AS((void) johnson(5, 0), InvalidParameter);
    CHECK_THROWS_AS((void) johnson(5, 5), InvalidParameter);
}

TEST_CASE("J(2k,k) is locally k x k with mu-graphs single 4-cycles")
{
    for (int k : { 3, 4, 5 }) {
        auto g = johnson(2 * k, k);
        auto d = detect_locally_grid(g);
        CHECK(d.ok);
        CHECK(d.m == k);
        CHECK(d.n == k);
        LocalGrid lg(g, k);
        auto c = mu_census(lg);
        REQUIRE(c.counts.size() == 1);
        CHECK(c.counts.begin()->first.lengths == std::vector<int>{ 4 });
        CHECK(c.violations.empty());
    }
}

TEST_CASE("rook grids and complements")
{
    auto rc4 = rook_complement(4);
    CHECK(rc4.order() == 16);
    CHECK(rc4.regular_degree() == 9);
    auto d = detect_locally_grid(rc4);
    CHECK(d.ok);
    CHECK(d.n == 3);
    auto srg = srg_check(rc4);
    REQUIRE(srg.params);
    CHECK(*srg.params == SrgParams{ 16, 9, 4, 6 });

    CHECK(is_rook_grid(rook_grid(5, 5), 5, 5));
    CHECK(are_isomorphic(rook_complement(3), rook_grid(3, 3)));
    CHECK(rook_grid(2, 3).label(4) == "1,1");
    CHECK_THROWS_AS((void) rook_grid(0, 3), InvalidParameter);
}

TEST_CASE("halved antipodal Johnson graphs")
{
    auto h84 = halved_antipodal_johnson(8, 4);
    CHECK(h84.order() == 35);
    CHECK(h84.regular_degree() == 16);
    auto d = detect_locally_grid(h84);
    CHECK(d.ok);
    CHECK(d.m == 4);
    CHECK(d.n == 4);

    // 1/2 J(6,3) is the antipodal quotient of J(6,3)
    auto j63 = johnson(6, 3);
    auto blocks = antipodal_partition(j63);
    REQUIRE(blocks.blocks);
    auto q = quotient_graph(j63, *blocks.blocks);
    auto h63 = halved_antipodal_johnson(6, 3);
    CHECK(h63.order() == 10);
    CHECK(are_isomorphic(q, h63));

    for (int k = 2 ; k <= 6 ; ++k) {
        long long binom = 1;
        for (int i = 0 ; i < k ; ++i)
            binom = binom * (2 * k - i) / (i + 1);
        CHECK(halved_antipodal_johnson(2 * k, k).order() == binom / 2);
    }
    CHECK_THROWS_AS((void) halved_antipodal_johnson(7, 3), InvalidParameter);
    CHECK_THROWS_AS((void) halved_antipodal_johnson(2, 1), InvalidParameter);
}

TEST_CASE("size cap")
{
    setenv("GRIDLOCUS_CAP", "100", 1);
    CHECK(vertex_cap() == 100);
    CHECK_THROWS_AS((void) johnson(10, 5), CapacityError);
    unsetenv("GRIDLOCUS_CAP");
    CHECK(vertex_cap() == default_vertex_cap);
    CHECK(johnson(10, 5).order() == 252);
}

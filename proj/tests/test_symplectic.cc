#include <doctest.h>

#include "oracles.hh"

#include <gridlocus/errors.hh>
#include <gridlocus/mu.hh>
#include <gridlocus/symplectic.hh>

#include <random>
#include <set>

using namespace gridlocus;

namespace
{
    auto elements(const FieldContext & ctx) -> std::vector<FieldElem>
    {
        std::vector<FieldElem> out;
        for (std::uint32_t c = 0 ; c < ctx.q() ; ++c)
            out.push_back(FieldElem{ c });
        return out;
    }

    auto R_elements(const FieldContext & ctx) -> std::vector<FieldElem>
    {
        std::vector<FieldElem> out;
        for (auto a : elements(ctx))
            if (ctx.in_R(a))
                out.push_back(a);
        return out;
    }

    auto scale(const FieldContext & ctx, FieldElem g, SymVector u) -> SymVector
    {
        return { ctx.mul(g, u.a), ctx.mul(g, u.b) };
    }
}

TEST_CASE("the symplectic form")
{
    auto ctx = make_field_context(5, 1);
    SymVector e{ ctx.one(), ctx.zero() }, f{ ctx.zero(), ctx.one() };
    CHECK(symplectic_form(ctx, e, f) == ctx.one());
    CHECK(symplectic_form(ctx, f, e) == ctx.neg(ctx.one()));

    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.q() - 1);
    for (int t = 0 ; t < 500 ; ++t) {
        SymVector u{ { pick(rng) }, { pick(rng) } }, v{ { pick(rng) }, { pick(rng) } };
        FieldElem g{ pick(rng) };
        CHECK(symplectic_form(ctx, u, u) == ctx.zero());
        CHECK(symplectic_form(ctx, scale(ctx, g, u), v) == ctx.mul(g, symplectic_form(ctx, u, v)));
    }
}

TEST_CASE("canonical vertices")
{
    for (auto [p, m, expected] : { std::tuple{ 3u, 1u, 20 }, { 5u, 1u, 78 } }) {
        auto ctx = make_field_context(p, m);
        std::set<VertexId> distinct;
        for (auto a : elements(ctx))
            for (auto b : elements(ctx))
                if (! (a.is_zero() && b.is_zero())) {
                    auto v = canonical_vertex(ctx, { a, b });
                    distinct.insert(v);
                    for (auto rho : R_elements(ctx))
                        CHECK(canonical_vertex(ctx, scale(ctx, rho, { a, b })) == v);
                }
        CHECK(static_cast<int>(distinct.size()) == expected);
        CHECK(gamma_vertex_count(ctx) == expected);
        for (auto & v : distinct)
            CHECK(gamma_vertex(ctx, gamma_index(ctx, v)) == v);
    }
    auto ctx = make_field_context(3, 1);
    CHECK_THROWS_AS((void) canonical_vertex(ctx, { ctx.zero(), ctx.zero() }), DomainError);
    CHECK(gamma_index(ctx, canonical_vertex(ctx, { ctx.one(), ctx.zero() })) == 0);
}

TEST_CASE("adjacency rule")
{
    auto ctx = make_field_context(5, 1);
    auto x = canonical_vertex(ctx, { ctx.one(), ctx.zero() });
    CHECK_FALSE(adjacent(ctx, x, x));
    for (auto alpha : elements(ctx))
        CHECK(adjacent(ctx, x, canonical_vertex(ctx, { alpha, ctx.one() })));
    CHECK_FALSE(adjacent(ctx, x, canonical_vertex(ctx, { ctx.zero(), ctx.omega() })));

    // independent of representatives
    std::mt19937_64 rng(4);
    auto R = R_elements(ctx);
    for (int t = 0 ; t < 300 ; ++t) {
        auto u = gamma_vertex(ctx, rng() % 78), v = gamma_vertex(ctx, rng() % 78);
        auto ru = scale(ctx, R[rng() % R.size()], u.rep), rv = scale(ctx, R[rng() % R.size()], v.rep);
        CHECK(ctx.in_R(symplectic_form(ctx, ru, rv)) == adjacent(ctx, u, v));
        CHECK(adjacent(ctx, u, v) == adjacent(ctx, v, u));
    }
}

TEST_CASE("build_gamma matches an orbit-by-orbit construction")
{
    for (auto [p, m] : { std::pair{ 3u, 1u }, { 5u, 1u } }) {
        auto ctx = make_field_context(p, m);
        auto g = build_gamma(ctx);
        auto naive = oracle::naive_gamma(p, m);
        REQUIRE(naive.vertices == g.order());
        // same modulus, so representatives translate coefficient-wise
        std::vector<Vertex> image(naive.vertices);
        for (int i = 0 ; i < naive.vertices ; ++i) {
            auto & [a, b] = naive.reps[i];
            image[i] = gamma_index(ctx, canonical_vertex(ctx, { ctx.from_coeffs(a), ctx.from_coeffs(b) }));
        }
        CHECK(std::set<Vertex>(image.begin(), image.end()).size() == image.size());
        for (int i = 0 ; i < naive.vertices ; ++i)
            for (int j = 0 ; j < naive.vertices ; ++j)
                CHECK(naive.adj[i][j] == g.adjacent(image[i], image[j]));
    }
}

TEST_CASE("build_gamma sizes")
{
    for (auto [n, p, m, order] : { std::tuple{ 3, 3u, 1u, 20 }, { 5, 5u, 1u, 78 }, { 7, 7u, 1u, 200 } }) {
        auto g = build_gamma(make_field_context(p, m));
        CHECK(g.order() == order);
        CHECK(g.regular_degree() == n * n);
    }
    CHECK_THROWS_AS((void) build_gamma(make_field_context(5, 1), 50), CapacityError);
}

TEST_CASE("antipodal blocks")
{
    for (auto [p, m] : { std::pair{ 3u, 1u }, { 5u, 1u } }) {
        auto ctx = make_field_context(p, m);
        auto g = build_gamma(ctx);
        DistanceMatrix dm(g);
        std::set<std::vector<VertexId>> blocks;
        for (Vertex i = 0 ; i < g.order() ; ++i) {
            auto u = gamma_vertex(ctx, i);
            auto block = antipodal_block_of(ctx, u);
            CHECK(block.size() == ctx.r());
            CHECK(std::find(block.begin(), block.end(), u) != block.end());
            for (auto & w : block)
                if (w != u)
                    CHECK(dm(i, gamma_index(ctx, w)) == 3);
            blocks.insert(block);
        }
        CHECK(blocks.size() == ctx.q() + 1);
    }
}

TEST_CASE("neighbourhood oracle")
{
    for (auto [p, m] : { std::pair{ 3u, 1u }, { 5u, 1u } }) {
        auto ctx = make_field_context(p, m);
        for (auto a : elements(ctx))
            for (auto b : elements(ctx)) {
                if (a == b)
                    continue;
                bool predicted = neighbourhood_adjacency_oracle(ctx, a, b);
                bool actual = adjacent(ctx, canonical_vertex(ctx, { a, ctx.one() }), canonical_vertex(ctx, { b, ctx.one() }));
                CHECK(predicted == actual);
            }
        CHECK_THROWS_AS((void) neighbourhood_adjacency_oracle(ctx, ctx.one(), ctx.one()), DomainError);
    }
}

TEST_CASE("mu-cycle oracle against the built graph")
{
    for (auto [p, m] : { std::pair{ 3u, 1u }, { 5u, 1u }, { 7u, 1u }, { 3u, 2u } }) {
        auto ctx = make_field_context(p, m);
        auto g = build_gamma(ctx);
        std::set<CycleProfile> oracle_profiles;
        for (auto beta : elements(ctx)) {
            if (beta.is_zero() || ctx.in_R(beta)) {
                CHECK_THROWS_AS((void) mu_cycle_oracle(ctx, beta), DomainError);
                continue;
            }
            auto predicted = mu_cycle_oracle(ctx, beta);
            oracle_profiles.insert(predicted);
            Vertex y = gamma_index(ctx, canonical_vertex(ctx, { ctx.zero(), ctx.inv(beta) }));
            CHECK(mu_graph(g, 0, y).profile == predicted);
        }
        // every distance-2 pair of the graph has one of the oracle's profiles
        DistanceMatrix dm(g);
        for (Vertex x = 0 ; x < g.order() ; x += 7)
            for (Vertex y = 0 ; y < g.order() ; ++y)
                if (dm(x, y) == 2)
                    CHECK(oracle_profiles.count(mu_graph(g, x, y).profile) == 1);
    }
}

TEST_CASE("realize_divisor")
{
    auto c7 = make_field_context(7, 1);
    CHECK(mu_cycle_oracle(c7, c7.add(c7.one(), c7.omega_pow(-3 * static_cast<long long>(c7.r())))).lengths
            == std::vector<int>{ 4, 4, 4 });
    CHECK(mu_cycle_oracle(c7, realize_divisor(c7, 1).beta).lengths == std::vector<int>{ 12 });
    CHECK(mu_cycle_oracle(c7, realize_divisor(c7, 3).beta).lengths == std::vector<int>{ 4, 4, 4 });
    CHECK_THROWS_AS((void) realize_divisor(c7, 2), InvalidParameter);
    CHECK_THROWS_AS((void) realize_divisor(c7, 5), InvalidParameter);

    auto g7 = build_gamma(c7);
    auto w = realize_divisor(c7, 3);
    CHECK(mu_graph(g7, gamma_index(c7, w.x), gamma_index(c7, w.y)).profile.lengths == std::vector<int>{ 4, 4, 4 });

    auto c13 = make_field_context(13, 1);
    CHECK(mu_cycle_oracle(c13, realize_divisor(c13, 3).beta).lengths == std::vector<int>{ 8, 8, 8 });
    auto local = local_mu_crosscheck(c13, realize_divisor(c13, 3).beta);
    CHECK(local.agrees);
    CHECK(local.observed.lengths == std::vector<int>{ 8, 8, 8 });
}

TEST_CASE("local crosscheck")
{
    auto c5 = make_field_context(5, 1);
    auto c3 = make_field_context(3, 1);
    auto c9 = make_field_context(3, 2);
    for (auto * ctx : { &c3, &c5, &c9 })
        for (auto beta : elements(*ctx)) {
            if (beta.is_zero() || ctx->in_R(beta))
                continue;
            auto r = local_mu_crosscheck(*ctx, beta);
            CHECK(r.agrees);
            CHECK(r.mu_order == 2 * (static_cast<int>(ctx->n()) - 1));
            if (ctx->n() == 9)
                CHECK(r.observed.lengths == std::vector<int>{ 16 });
            if (ctx->n() == 3)
                CHECK(r.observed.lengths == std::vector<int>{ 4 });
        }

    auto c27 = make_field_context(3, 3);
    auto beta = c27.add(c27.one(), c27.omega_pow(-13 * static_cast<long long>(c27.r())));
    auto r = local_mu_crosscheck(c27, beta);
    CHECK(r.agrees);
    CHECK(r.observed.lengths == std::vector<int>(13, 4));
}

TEST_CASE("every odd divisor is realized and nothing else occurs")
{
    for (unsigned n : { 3u, 5u, 7u, 9u, 11u, 13u }) {
        unsigned p = 0, m = 0;
        REQUIRE(prime_power_decomposition(n, p, m));
        auto ctx = make_field_context(p, m);
        std::set<long long> seen;
        for (auto beta : elements(ctx)) {
            if (beta.is_zero() || ctx.in_R(beta))
                continue;
            auto prof = mu_cycle_oracle(ctx, beta);
            REQUIRE(prof.uniform_length());
            seen.insert(prof.cycle_count());
        }
        auto want = odd_divisors(n - 1);
        CHECK(std::vector<long long>(seen.begin(), seen.end()) == want);
    }
    CHECK(odd_divisors(12) == std::vector<long long>{ 1, 3 });
    CHECK(odd_divisors(26) == std::vector<long long>{ 1, 13 });
}

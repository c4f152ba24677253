#include <doctest.h>

#include "oracles.hh"

#include <gridlocus/errors.hh>
#include <gridlocus/field.hh>

#include <numeric>

using namespace gridlocus;

namespace
{
    auto all_elements(const FieldContext & ctx) -> std::vector<FieldElem>
    {
        std::vector<FieldElem> out;
        for (std::uint32_t c = 0 ; c < ctx.q() ; ++c)
            out.push_back(FieldElem{ c });
        return out;
    }

    auto brute_order(const FieldContext & ctx, FieldElem a) -> std::uint32_t
    {
        FieldElem x = a;
        std::uint32_t k = 1;
        while (x != ctx.one()) {
            x = ctx.mul(x, a);
            ++k;
        }
        return k;
    }
}

TEST_CASE("context parameters")
{
    auto f3 = make_field_context(3, 1);
    CHECK(f3.n() == 3);
    CHECK(f3.q() == 9);
    CHECK(f3.r() == 2);

    auto f5 = make_field_context(5, 1);
    CHECK(f5.n() == 5);
    CHECK(f5.q() == 25);
    CHECK(f5.r() == 3);

    auto f9 = make_field_context(3, 2);
    CHECK(f9.n() == 9);
    CHECK(f9.q() == 81);
    CHECK(f9.r() == 5);
    CHECK(brute_order(f9, f9.omega()) == 80);

    for (auto * ctx : { &f3, &f5, &f9 }) {
        int in_r = 0;
        for (auto a : all_elements(*ctx))
            in_r += ctx->in_R(a);
        CHECK(in_r == 2 * (static_cast<int>(ctx->n()) - 1));
    }
}

TEST_CASE("bad parameters")
{
    CHECK_THROWS_AS((void) make_field_context(2, 1), InvalidParameter);
    CHECK_THROWS_AS((void) make_field_context(9, 1), InvalidParameter);
    CHECK_THROWS_AS((void) make_field_context(3, 20), CapacityError);
}

TEST_CASE("modulus and primitive element follow the deterministic rule")
{
    for (auto [p, m] : { std::pair{ 3u, 1u }, { 5u, 1u }, { 7u, 1u }, { 3u, 2u }, { 11u, 1u } }) {
        auto ctx = make_field_context(p, m);
        CHECK(ctx.modulus() == oracle::smallest_irreducible(p, 2 * m));

        std::vector<std::vector<unsigned>> vecs;
        for (auto a : all_elements(ctx))
            if (! a.is_zero())
                vecs.push_back(ctx.coeffs(a));
        std::sort(vecs.begin(), vecs.end());
        FieldElem expected;
        for (auto & v : vecs)
            if (brute_order(ctx, ctx.from_coeffs(v)) == ctx.q() - 1) {
                expected = ctx.from_coeffs(v);
                break;
            }
        CHECK(ctx.omega() == expected);
    }
}

TEST_CASE("arithmetic agrees with polynomial arithmetic")
{
    for (auto [p, m] : { std::pair{ 3u, 1u }, { 5u, 1u }, { 3u, 2u } }) {
        auto ctx = make_field_context(p, m);
        auto elems = all_elements(ctx);
        for (auto a : elems)
            for (auto b : elems) {
                auto ca = ctx.coeffs(a), cb = ctx.coeffs(b);
                CHECK(ctx.coeffs(ctx.add(a, b)) == oracle::poly_add(ca, cb, p));
                CHECK(ctx.coeffs(ctx.mul(a, b)) == oracle::poly_mul_mod(ca, cb, ctx.modulus(), p));
                CHECK(ctx.add(ctx.sub(a, b), b) == a);
                CHECK(ctx.arith(ArithKind::mul, a, b) == ctx.mul(a, b));
            }
    }
}

TEST_CASE("inverses, powers and orders")
{
    auto ctx = make_field_context(3, 1);
    for (auto a : all_elements(ctx)) {
        CHECK(ctx.add(a, ctx.neg(a)) == ctx.zero());
        if (a.is_zero())
            continue;
        CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
        CHECK(ctx.pow(a, 8) == ctx.one());
        CHECK(ctx.mult_order(a) == brute_order(ctx, a));
    }
    CHECK_THROWS_AS((void) ctx.inv(ctx.zero()), DomainError);
    CHECK_THROWS_AS((void) ctx.mult_order(ctx.zero()), DomainError);
    CHECK_THROWS_AS((void) ctx.coset_label(ctx.zero()), DomainError);

    for (auto [p, m] : { std::pair{ 3u, 1u }, { 5u, 1u }, { 7u, 1u }, { 3u, 2u } }) {
        auto c = make_field_context(p, m);
        CHECK(c.mult_order(c.one()) == 1);
        CHECK(c.mult_order(c.omega()) == c.q() - 1);
        CHECK(c.mult_order(c.neg(c.one())) == 2);
        for (auto a : all_elements(c))
            if (! a.is_zero())
                CHECK(c.mult_order(a) == (c.q() - 1) / std::gcd(c.dlog(a), c.q() - 1));
    }
}

TEST_CASE("the subgroup R")
{
    for (auto [p, m] : { std::pair{ 3u, 1u }, { 5u, 1u }, { 7u, 1u }, { 3u, 2u } }) {
        auto ctx = make_field_context(p, m);
        CHECK_FALSE(ctx.in_R(ctx.zero()));
        CHECK(ctx.in_R(ctx.neg(ctx.one())));
        auto elems = all_elements(ctx);
        for (auto a : elems)
            for (auto b : elems)
                if (ctx.in_R(a) && ctx.in_R(b))
                    CHECK(ctx.in_R(ctx.mul(a, b)));
        // R = F_n* u F_n* omega^r
        FieldElem wr = ctx.omega_pow(ctx.r());
        for (auto a : elems) {
            bool in_fn = ! a.is_zero() && ctx.in_subfield(a);
            bool in_fn_wr = ! a.is_zero() && ctx.in_subfield(ctx.mul(a, ctx.inv(wr)));
            CHECK(ctx.in_R(a) == (in_fn || in_fn_wr));
        }
    }
}

TEST_CASE("coset labels")
{
    auto ctx = make_field_context(5, 1);
    std::vector<int> sizes(ctx.r(), 0);
    for (auto a : all_elements(ctx)) {
        if (a.is_zero())
            continue;
        ++sizes[ctx.coset_label(a)];
        for (auto rho : all_elements(ctx))
            if (ctx.in_R(rho))
                CHECK(ctx.coset_label(ctx.mul(rho, a)) == ctx.coset_label(a));
        if (ctx.in_R(a))
            CHECK(ctx.coset_label(a) == 0);
    }
    CHECK(sizes == std::vector<int>{ 8, 8, 8 });
}

TEST_CASE("even/odd split")
{
    for (auto [p, m] : { std::pair{ 3u, 1u }, { 5u, 1u }, { 7u, 1u }, { 3u, 2u } }) {
        auto ctx = make_field_context(p, m);
        FieldElem wr = ctx.omega_pow(ctx.r());
        auto s0 = ctx.even_odd_split(ctx.zero());
        CHECK(s0.ev == ctx.zero());
        CHECK(s0.odd == ctx.zero());
        auto sw = ctx.even_odd_split(wr);
        CHECK(sw.ev == ctx.zero());
        CHECK(sw.odd == wr);

        auto elems = all_elements(ctx);
        for (auto a : elems) {
            auto s = ctx.even_odd_split(a);
            CHECK(ctx.add(s.ev, s.odd) == a);
            CHECK(ctx.in_subfield(s.ev));
            CHECK(ctx.in_subfield(ctx.mul(s.odd, ctx.inv(wr))));
            if (! s.ev.is_zero() && ! s.odd.is_zero()) {
                auto ratio = ctx.mul(s.ev, ctx.inv(s.odd));
                CHECK(ctx.in_R(ratio));
                CHECK_FALSE(ctx.in_subfield(ratio));
            }
        }
        for (auto a : elems)
            for (auto b : elems) {
                auto sa = ctx.even_odd_split(a), sb = ctx.even_odd_split(b), sab = ctx.even_odd_split(ctx.add(a, b));
                CHECK(sab.ev == ctx.add(sa.ev, sb.ev));
            }
    }
}

TEST_CASE("split of omega in GF(9) solves the 2x2 system")
{
    auto ctx = make_field_context(3, 1);
    FieldElem w = ctx.omega(), w2 = ctx.omega_pow(2);
    int solutions = 0;
    for (std::uint32_t a = 0 ; a < 3 ; ++a)
        for (std::uint32_t b = 0 ; b < 3 ; ++b) {
            FieldElem fa = ctx.from_int(a), fb = ctx.from_int(b);
            if (ctx.add(fa, ctx.mul(fb, w2)) == w) {
                ++solutions;
                auto s = ctx.even_odd_split(w);
                CHECK(s.ev == fa);
                CHECK(s.odd == ctx.mul(fb, w2));
            }
        }
    CHECK(solutions == 1);
}

TEST_CASE("prime power decomposition")
{
    unsigned p = 0, m = 0;
    CHECK(prime_power_decomposition(27, p, m));
    CHECK(p == 3);
    CHECK(m == 3);
    CHECK_FALSE(prime_power_decomposition(12, p, m));
    CHECK(is_prime(251));
    CHECK_FALSE(is_prime(1));
}

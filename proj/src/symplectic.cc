#include <gridlocus/symplectic.hh>
#include <gridlocus/caps.hh>
#include <gridlocus/errors.hh>

#include <algorithm>
#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace gridlocus
{
    auto symplectic_form(const FieldContext & ctx, SymVector u, SymVector v) -> FieldElem
    {
        return ctx.sub(ctx.mul(u.a, v.b), ctx.mul(u.b, v.a));
    }

    auto canonical_vertex(const FieldContext & ctx, SymVector u) -> VertexId
    {
        if (u.is_zero())
            throw DomainError("the zero vector is not a vertex");
        FieldElem lead = u.a.is_zero() ? u.b : u.a;
        auto e = ctx.dlog(lead);
        // the R-multiple with least dlog on the leading coordinate; that dlog is e mod r
        FieldElem scale = ctx.omega_pow(-static_cast<long long>(e - e % ctx.r()));
        return VertexId{ { ctx.mul(scale, u.a), ctx.mul(scale, u.b) } };
    }

    auto adjacent(const FieldContext & ctx, VertexId u, VertexId v) -> bool
    {
        return ctx.in_R(symplectic_form(ctx, u.rep, v.rep));
    }

    auto gamma_vertex_count(const FieldContext & ctx) -> long long
    {
        return static_cast<long long>(ctx.r()) * (ctx.q() + 1);
    }

    auto gamma_index(const FieldContext & ctx, VertexId v) -> int
    {
        if (! v.rep.a.is_zero())
            return ctx.dlog(v.rep.a) * ctx.q() + v.rep.b.code;
        return ctx.r() * ctx.q() + ctx.dlog(v.rep.b);
    }

    auto gamma_vertex(const FieldContext & ctx, int index) -> VertexId
    {
        if (index < 0 || index >= gamma_vertex_count(ctx))
            throw DomainError("vertex index " + to_string(index) + " out of range");
        auto rq = static_cast<int>(ctx.r() * ctx.q());
        if (index < rq)
            return VertexId{ { ctx.omega_pow(index / ctx.q()), FieldElem{ static_cast<std::uint32_t>(index % ctx.q()) } } };
        return VertexId{ { ctx.zero(), ctx.omega_pow(index - rq) } };
    }

    auto build_gamma(const FieldContext & ctx) -> Graph
    {
        return build_gamma(ctx, vertex_cap());
    }

    auto build_gamma(const FieldContext & ctx, int cap) -> Graph
    {
        long long count = gamma_vertex_count(ctx);
        if (count > cap)
            throw CapacityError("Gamma(" + to_string(ctx.n()) + ") has " + to_string(count)
                    + " vertices, above the cap of " + to_string(cap));

        int n = count;
        vector<VertexId> vs(n);
        for (int i = 0 ; i < n ; ++i)
            vs[i] = gamma_vertex(ctx, i);

        GraphBuilder b(n);
        for (int i = 0 ; i < n ; ++i) {
            b.set_label(i, to_string(vs[i].rep.a.code) + "," + to_string(vs[i].rep.b.code));
            for (int j = i + 1 ; j < n ; ++j)
                if (adjacent(ctx, vs[i], vs[j]))
                    b.add_edge(i, j);
        }
        return std::move(b).build();
    }

    auto antipodal_block_of(const FieldContext & ctx, VertexId u) -> vector<VertexId>
    {
        vector<VertexId> block;
        for (std::uint32_t j = 0 ; j < ctx.r() ; ++j) {
            FieldElem gamma = ctx.omega_pow(j);
            block.push_back(canonical_vertex(ctx, { ctx.mul(gamma, u.rep.a), ctx.mul(gamma, u.rep.b) }));
        }
        std::sort(block.begin(), block.end());
        return block;
    }

    auto neighbourhood_adjacency_oracle(const FieldContext & ctx, FieldElem alpha, FieldElem alpha_prime) -> bool
    {
        if (alpha == alpha_prime)
            throw DomainError("neighbourhood oracle needs distinct alpha, alpha'");
        auto s = ctx.even_odd_split(alpha), t = ctx.even_odd_split(alpha_prime);
        return (s.ev == t.ev) != (s.odd == t.odd);
    }

    auto mu_cycle_oracle(const FieldContext & ctx, FieldElem beta) -> CycleProfile
    {
        if (beta.is_zero() || ctx.in_R(beta))
            throw DomainError("beta in R or zero: R beta^-1 f is not at distance 2 from Re");
        auto s = ctx.even_odd_split(beta);
        if (s.ev.is_zero() || s.odd.is_zero())
            throw DomainError("even/odd split of beta outside R has a zero part");

        long long mu = 2 * (static_cast<long long>(ctx.n()) - 1);
        long long length = ctx.mult_order(ctx.mul(s.ev, ctx.inv(s.odd)));
        long long d = mu / length;
        if (mu % length != 0 || d % 2 == 0 || (ctx.n() - 1) % d != 0)
            throw DomainError("cycle count " + to_string(d) + " is not an odd divisor of n-1");
        return make_profile(vector<int>(d, static_cast<int>(length)));
    }

    auto realize_divisor(const FieldContext & ctx, int d) -> DivisorWitness
    {
        if (d <= 0 || d % 2 == 0 || (ctx.n() - 1) % d != 0)
            throw InvalidParameter("d = " + to_string(d) + " is not an odd divisor of n-1 = " + to_string(ctx.n() - 1));
        FieldElem beta = ctx.add(ctx.one(), ctx.omega_pow(-static_cast<long long>(ctx.r()) * d));
        return DivisorWitness{
            canonical_vertex(ctx, { ctx.one(), ctx.zero() }),
            canonical_vertex(ctx, { ctx.zero(), ctx.inv(beta) }),
            beta };
    }

    auto local_mu_crosscheck(const FieldContext & ctx, FieldElem beta) -> LocalMuCheck
    {
        LocalMuCheck result;
        result.predicted = mu_cycle_oracle(ctx, beta);

        VertexId x = canonical_vertex(ctx, { ctx.one(), ctx.zero() });
        VertexId y = canonical_vertex(ctx, { ctx.zero(), ctx.inv(beta) });

        vector<VertexId> common;
        long long count = gamma_vertex_count(ctx);
        for (long long i = 0 ; i < count ; ++i) {
            VertexId w = gamma_vertex(ctx, i);
            if (adjacent(ctx, w, x) && adjacent(ctx, w, y))
                common.push_back(w);
        }
        result.mu_order = common.size();
        if (result.mu_order != 2 * (static_cast<int>(ctx.n()) - 1))
            return result;

        GraphBuilder b(common.size());
        for (std::size_t i = 0 ; i < common.size() ; ++i)
            for (std::size_t j = i + 1 ; j < common.size() ; ++j)
                if (adjacent(ctx, common[i], common[j]))
                    b.add_edge(i, j);
        auto mu = std::move(b).build();
        for (int v = 0 ; v < mu.order() ; ++v)
            if (mu.degree(v) != 2)
                return result;
        result.observed = cycle_decomposition(mu);
        result.agrees = result.observed == result.predicted;
        return result;
    }

    auto odd_divisors(long long v) -> vector<long long>
    {
        vector<long long> result;
        for (long long d = 1 ; d <= v ; d += 2)
            if (v % d == 0)
                result.push_back(d);
        return result;
    }
}

#include <gridlocus/mu.hh>
#include <gridlocus/errors.hh>
#include <gridlocus/symplectic.hh>

#include <algorithm>
#include <thread>

using std::map;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace gridlocus
{
    auto mu_graph(const Graph & g, Vertex x, Vertex y) -> MuGraph
    {
        if (x == y || g.adjacent(x, y))
            throw DomainError("mu_graph needs d(x, y) = 2, got " + string(x == y ? "0" : "1"));
        auto common = common_neighbours(g, x, y);
        if (common.empty())
            throw DomainError("mu_graph needs d(x, y) = 2, got a pair with no common neighbour");

        MuGraph m;
        m.x = x;
        m.y = y;
        m.vertices = common;
        m.graph = induced(g, common);
        m.profile = cycle_decomposition(m.graph);
        return m;
    }

    namespace
    {
        struct PairScan
        {
            optional<CycleProfile> profile;
            vector<Violation> violations;
        };

        // Profile of mu(x, y) straight from the bit rows, plus the per-pair invariants.
        auto scan_pair(const LocalGrid & lg, Vertex x, Vertex y, VertexSet & common) -> PairScan
        {
            const Graph & g = lg.graph();
            int n = lg.n();
            auto cw = common.words();
            auto rx = g.row(x), ry = g.row(y);
            for (std::size_t i = 0 ; i < cw.size() ; ++i)
                cw[i] = rx[i] & ry[i];

            PairScan out;
            auto members = common.members();
            for (auto w : members)
                if (popcount_and(g.row(w), cw) != 2) {
                    out.violations.push_back({ "mu-2-regular", "every mu-graph is a union of cycles", { x, y, w },
                            "degree " + to_string(popcount_and(g.row(w), cw)) + " inside mu" });
                    return out;
                }

            vector<int> lengths;
            vector<char> seen(members.size(), 0);
            auto position = [&] (Vertex v) {
                return std::lower_bound(members.begin(), members.end(), v) - members.begin();
            };
            vector<int> line_use_x(2 * n, 0), line_use_y(2 * n, 0);
            for (std::size_t s = 0 ; s < members.size() ; ++s) {
                if (seen[s])
                    continue;
                int len = 0;
                Vertex prev = -1, cur = members[s];
                while (true) {
                    seen[position(cur)] = 1;
                    ++len;
                    Vertex next = -1;
                    for (auto w : g.neighbours(cur))
                        if (common.test(w) && w != prev) {
                            next = w;
                            break;
                        }
                    int lx = lg.line_of_edge(x, cur, next), ly = lg.line_of_edge(y, cur, next);
                    if (lx >= 0)
                        ++line_use_x[lx];
                    if (ly >= 0)
                        ++line_use_y[ly];
                    prev = cur;
                    cur = next;
                    if (cur == members[s])
                        break;
                }
                lengths.push_back(len);
            }

            int half_sum = 0;
            for (auto l : lengths) {
                if (l % 2 != 0 || l < 4)
                    out.violations.push_back({ "mu-cycle-length", "mu-graph cycles are even of length at least 4",
                            { x, y }, "cycle of length " + to_string(l) });
                half_sum += l / 2;
            }
            if (half_sum > n)
                out.violations.push_back({ "mu-half-sum", "sum of half cycle lengths is at most n", { x, y },
                        to_string(half_sum) + " > " + to_string(n) });
            for (int l = 0 ; l < 2 * n ; ++l)
                if (line_use_x[l] > 1 || line_use_y[l] > 1)
                    out.violations.push_back({ "mu-shared-clique", "no two mu-edges lie in one n-clique of a neighbourhood",
                            { x, y }, "line " + to_string(l) + " of " + (line_use_x[l] > 1 ? "Gamma(x)" : "Gamma(y)") });
            out.profile = make_profile(std::move(lengths));
            return out;
        }

        struct Shard
        {
            map<CycleProfile, long long> counts;
            long long pairs = 0;
            vector<std::pair<Vertex, map<CycleProfile, long long>>> per_vertex;
            vector<Violation> violations;
        };

        auto run_shard(const LocalGrid & lg, int shard, int jobs) -> Shard
        {
            const Graph & g = lg.graph();
            Shard out;
            VertexSet common(g.order());
            for (Vertex x = shard ; x < g.order() ; x += jobs) {
                map<CycleProfile, long long> mine;
                for (Vertex y = 0 ; y < g.order() ; ++y) {
                    if (y == x || g.adjacent(x, y) || g.common_neighbour_count(x, y) == 0)
                        continue;
                    auto scan = scan_pair(lg, x, y, common);
                    if (y > x) {
                        for (auto & v : scan.violations)
                            out.violations.push_back(std::move(v));
                        if (scan.profile) {
                            ++out.counts[*scan.profile];
                            ++out.pairs;
                        }
                    }
                    if (scan.profile)
                        ++mine[*scan.profile];
                }
                out.per_vertex.emplace_back(x, std::move(mine));
            }
            return out;
        }
    }

    auto mu_census(const LocalGrid & lg, int jobs) -> MuCensus
    {
        jobs = std::max(1, std::min(jobs, std::max(1, lg.graph().order())));
        vector<Shard> shards(jobs);
        if (jobs == 1)
            shards[0] = run_shard(lg, 0, 1);
        else {
            vector<std::thread> threads;
            for (int j = 0 ; j < jobs ; ++j)
                threads.emplace_back([&, j] { shards[j] = run_shard(lg, j, jobs); });
            for (auto & t : threads)
                t.join();
        }

        MuCensus census;
        vector<map<CycleProfile, long long>> per_vertex(lg.graph().order());
        for (auto & s : shards) {
            for (auto & [p, c] : s.counts)
                census.counts[p] += c;
            census.pairs += s.pairs;
            for (auto & [x, h] : s.per_vertex)
                per_vertex[x] = std::move(h);
            for (auto & v : s.violations)
                census.violations.push_back(std::move(v));
        }
        std::stable_sort(census.violations.begin(), census.violations.end(),
                [] (const Violation & a, const Violation & b) { return a.witnesses < b.witnesses; });
        for (auto & h : per_vertex)
            if (h != per_vertex.front())
                census.per_vertex_uniform = false;
        return census;
    }

    auto to_json(const MuCensus & c) -> nlohmann::json
    {
        auto profiles = nlohmann::json::array();
        for (auto & [p, count] : c.counts)
            profiles.push_back({ { "profile", p.lengths }, { "count", count } });
        return { { "pairs", c.pairs }, { "profiles", profiles }, { "per_vertex_uniform", c.per_vertex_uniform },
            { "violations", to_json(c.violations) } };
    }

    auto divisor_profile_check(const Graph & g, const FieldContext & ctx, int jobs) -> DivisorProfileResult
    {
        if (g.order() != gamma_vertex_count(ctx))
            throw DomainError("graph has " + to_string(g.order()) + " vertices but Gamma("
                    + to_string(ctx.n()) + ") has " + to_string(gamma_vertex_count(ctx)));

        int n = ctx.n();
        LocalGrid lg(g, n);
        DivisorProfileResult r;
        r.census = mu_census(lg, jobs);
        for (auto d : odd_divisors(n - 1))
            r.d_expected.insert(d);

        for (auto & [p, count] : r.census.counts) {
            auto len = p.uniform_length();
            long long d = p.cycle_count();
            if (! len || static_cast<long long>(*len) * d != 2 * (n - 1) || ! r.d_expected.count(d))
                r.problems.push_back("profile " + p.to_string() + " is not d equal cycles with d an odd divisor of n-1");
            else
                r.d_seen.insert(d);
        }
        for (auto d : r.d_expected)
            if (! r.d_seen.count(d))
                r.problems.push_back("odd divisor " + to_string(d) + " of n-1 is not realized");
        if (! r.census.violations.empty())
            r.problems.push_back(to_string(r.census.violations.size()) + " per-pair violations in the census");
        r.pass = r.problems.empty();
        return r;
    }

    auto k2_identities_audit(const AuditContext & ctx) -> K2Audit
    {
        const Graph & g = ctx.graph();
        long long n = ctx.n();
        if (ctx.min_c2() && *ctx.min_c2() < 2 * (n - 1))
            throw DomainError("hypothesis unmet: some mu-graph has order " + to_string(*ctx.min_c2())
                    + " < 2(n-1) = " + to_string(2 * (n - 1)));

        K2Audit out;
        long long N = g.order();
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            auto p = bfs_profile(g, x, n);
            K2Record r;
            r.x = x;
            r.k2 = p.k.size() > 2 ? p.k[2] : 0;
            r.k3 = p.k.size() > 3 ? p.k[3] : 0;
            for (auto & [mu, c] : p.k2_by_mu) {
                if (mu == 2 * (n - 1))
                    r.k2_short = c;
                else if (mu == 2 * n)
                    r.k2_long = c;
                else
                    out.violations.push_back({ "k2-mu-values", "mu-graphs have order 2(n-1) or 2n", { x },
                            to_string(c) + " vertices with c2 = " + to_string(mu) });
            }

            auto fail = [&] (const string & check, const string & rule, const string & detail) {
                out.violations.push_back({ check, rule, { x }, detail });
            };
            long long lhs = n * n * (n - 1) * (n - 1);
            long long rhs = 2 * (n - 1) * r.k2_short + 2 * n * r.k2_long;
            if (lhs != rhs)
                fail("k2-edges", "n^2(n-1)^2 = 2(n-1) k_{2,2(n-1)} + 2n k_{2,2n}",
                        to_string(lhs) + " != " + to_string(rhs));
            if (r.k2_short % n != 0)
                fail("k2-short-divisible", "k_{2,2(n-1)} is divisible by n", to_string(r.k2_short));
            if (r.k2_long % (n - 1) != 0)
                fail("k2-long-divisible", "k_{2,2n} is divisible by n-1", to_string(r.k2_long));
            if (r.k2_short % n == 0) {
                long long ell = r.k2_short / n;
                r.ell = ell;
                if (n * r.k2 != n * n * (n - 1) * (n - 1) / 2 + r.k2_short)
                    fail("k2-sum", "k_2 = n(n-1)^2/2 + k_{2,2(n-1)}/n",
                            to_string(r.k2) + " vs " + to_string(n * (n - 1) * (n - 1) / 2) + " + " + to_string(ell));
                if (ell > n * (n - 1) / 2)
                    fail("ell-bound", "ell_x <= n(n-1)/2", to_string(ell));
                long long mod = n % 2 == 0 ? n + 1 : (n + 1) / 2;
                if ((ell + r.k3) % mod != 0)
                    fail("ell-congruence", "ell_x + k_3 is divisible by (n+1) for even n, (n+1)/2 for odd n",
                            "ell " + to_string(ell) + ", k3 " + to_string(r.k3));
            }
            if (ctx.distances().eccentricity(x) <= 3 && 1 + n * n + r.k2 + r.k3 != N)
                fail("k-sum", "|V| = 1 + n^2 + k_2 + k_3", to_string(1 + n * n + r.k2 + r.k3) + " != " + to_string(N));
            out.records.push_back(r);
        }
        return out;
    }

    auto to_json(const K2Record & r) -> nlohmann::json
    {
        nlohmann::json j{ { "x", r.x }, { "k2", r.k2 }, { "k3", r.k3 }, { "k2_short", r.k2_short }, { "k2_long", r.k2_long } };
        if (r.ell)
            j["ell"] = *r.ell;
        return j;
    }
}

#include <gridlocus/local_grid.hh>
#include <gridlocus/drg.hh>
#include <gridlocus/errors.hh>

#include <algorithm>
#include <cmath>
#include <set>

#include <mpfr.h>

using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace gridlocus
{
    auto to_json(const Violation & v) -> nlohmann::json
    {
        return { { "check", v.check }, { "rule", v.rule }, { "witnesses", v.witnesses }, { "detail", v.detail } };
    }

    auto to_json(const vector<Violation> & vs) -> nlohmann::json
    {
        auto a = nlohmann::json::array();
        for (auto & v : vs)
            a.push_back(to_json(v));
        return a;
    }

    namespace
    {
        auto neighbourhood(const Graph & g, Vertex x) -> Graph
        {
            return induced(g, g.neighbours(x));
        }

        auto pair_text(Vertex x, Vertex y) -> string
        {
            return "(" + to_string(x) + "," + to_string(y) + ")";
        }
    }

    auto detect_locally_grid(const Graph & g) -> LocalGridDetection
    {
        if (g.order() == 0 || ! is_connected(g))
            throw DomainError("detect_locally_grid needs a nonempty connected graph");

        LocalGridDetection result;
        auto fail = [&] (Vertex v) {
            result.ok = false;
            result.witness = v;
            return result;
        };

        // k = mn and every neighbour has local degree m + n - 2
        int k = g.degree(0);
        auto nb0 = neighbourhood(g, 0);
        auto local = nb0.regular_degree();
        if (k == 0 || ! local)
            return fail(0);
        int s = *local + 2;
        int m = -1, n = -1;
        for (int a = 1 ; a * a <= k ; ++a)
            if (k % a == 0 && a + k / a == s) {
                m = a;
                n = k / a;
            }
        if (m == -1)
            return fail(0);

        for (Vertex v = 0 ; v < g.order() ; ++v)
            if (g.degree(v) != k || ! is_rook_grid(v == 0 ? nb0 : neighbourhood(g, v), m, n))
                return fail(v);

        result.ok = true;
        result.m = m;
        result.n = n;
        return result;
    }

    LocalGrid::LocalGrid(const Graph & g, int n) :
        _g(&g),
        _n(n)
    {
        if (n < 1 || n > 254)
            throw DomainError("grid size out of range");
        std::size_t cells = static_cast<std::size_t>(g.order()) * g.order();
        _row.assign(cells, 255);
        _col.assign(cells, 255);
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            auto & nbrs = g.neighbours(x);
            auto lab = rook_grid_labelling(induced(g, nbrs), n, n);
            if (! lab)
                throw DomainError("neighbourhood of vertex " + to_string(x) + " is not a "
                        + to_string(n) + "x" + to_string(n) + " grid");
            for (std::size_t i = 0 ; i < nbrs.size() ; ++i) {
                _row[index(x, nbrs[i])] = lab->row[i];
                _col[index(x, nbrs[i])] = lab->column[i];
            }
        }
    }

    auto LocalGrid::line_of_edge(Vertex x, Vertex u, Vertex v) const -> int
    {
        int ru = row(x, u), rv = row(x, v), cu = column(x, u), cv = column(x, v);
        if (ru == -1 || rv == -1 || u == v)
            return -1;
        if (ru == rv)
            return ru;
        if (cu == cv)
            return _n + cu;
        return -1;
    }

    auto LocalGrid::maximal_cliques() const -> vector<vector<Vertex>>
    {
        std::set<vector<Vertex>> found;
        for (Vertex x = 0 ; x < _g->order() ; ++x) {
            vector<vector<Vertex>> lines(2 * _n, vector<Vertex>{ x });
            for (auto v : _g->neighbours(x)) {
                lines[row(x, v)].push_back(v);
                lines[_n + column(x, v)].push_back(v);
            }
            for (auto & l : lines) {
                std::sort(l.begin(), l.end());
                found.insert(std::move(l));
            }
        }
        return { found.begin(), found.end() };
    }

    auto structural_census(const LocalGrid & lg) -> StructuralCensus
    {
        const Graph & g = lg.graph();
        int n = lg.n();
        long long N = g.order();

        StructuralCensus c;
        c.n = n;
        c.vertices = N;
        c.edges = g.edge_count();

        auto cliques = lg.maximal_cliques();
        c.cliques = cliques.size();

        vector<vector<int>> cliques_of(N);
        vector<unsigned char> edge_cover(static_cast<std::size_t>(N) * N, 0);
        for (std::size_t i = 0 ; i < cliques.size() ; ++i) {
            auto & q = cliques[i];
            if (static_cast<int>(q.size()) != n + 1)
                c.violations.push_back({ "clique-size", "every maximal clique has n+1 vertices", q,
                        "size " + to_string(q.size()) });
            for (std::size_t a = 0 ; a < q.size() ; ++a) {
                cliques_of[q[a]].push_back(i);
                for (std::size_t b = a + 1 ; b < q.size() ; ++b) {
                    if (! g.adjacent(q[a], q[b]))
                        c.violations.push_back({ "clique-complete", "a maximal clique is complete", { q[a], q[b] }, "" });
                    ++edge_cover[q[a] * N + q[b]];
                }
            }
        }

        for (Vertex x = 0 ; x < N ; ++x)
            if (static_cast<int>(cliques_of[x].size()) != 2 * n)
                c.violations.push_back({ "cliques-per-vertex", "each vertex lies in 2n maximal cliques", { x },
                        to_string(cliques_of[x].size()) + " cliques" });

        auto in_clique = [&] (int q, Vertex v) {
            return std::binary_search(cliques[q].begin(), cliques[q].end(), v);
        };

        long long triangle_incidences = 0;
        for (Vertex x = 0 ; x < N ; ++x)
            for (auto y : g.neighbours(x)) {
                if (y < x)
                    continue;
                if (edge_cover[x * N + y] != 2)
                    c.violations.push_back({ "edge-in-two-cliques", "each edge lies in exactly two maximal cliques",
                            { x, y }, to_string(edge_cover[x * N + y]) + " cliques" });

                auto common = common_neighbours(g, x, y);
                triangle_incidences += common.size();
                if (static_cast<int>(common.size()) != 2 * (n - 1)) {
                    c.violations.push_back({ "edge-triangles", "each edge lies in 2(n-1) triangles", { x, y },
                            to_string(common.size()) + " triangles" });
                    continue;
                }

                // [common] must be two disjoint (n-1)-cliques with no edges between them
                vector<Vertex> a, b;
                for (auto w : common)
                    (w == common[0] || g.adjacent(w, common[0]) ? a : b).push_back(w);
                bool two_cliques = static_cast<int>(a.size()) == n - 1 && static_cast<int>(b.size()) == n - 1;
                for (std::size_t i = 0 ; two_cliques && i < common.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < common.size() ; ++j) {
                        bool same = std::count(a.begin(), a.end(), common[i]) == std::count(a.begin(), a.end(), common[j]);
                        if (same != g.adjacent(common[i], common[j])) {
                            two_cliques = false;
                            break;
                        }
                    }
                if (! two_cliques)
                    c.violations.push_back({ "edge-common-2K", "common neighbours of an edge induce 2 K_{n-1}", { x, y }, "" });

                for (auto z : common) {
                    if (z < y)
                        continue;
                    int holders = 0;
                    for (auto q : cliques_of[x])
                        if (in_clique(q, y) && in_clique(q, z))
                            ++holders;
                    if (holders != 1)
                        c.violations.push_back({ "triangle-unique-clique", "each triangle lies in a unique maximal clique",
                                { x, y, z }, to_string(holders) + " cliques" });
                }
            }
        c.triangles = triangle_incidences / 3;

        if ((N * 2 * n) % (n + 1) != 0 || c.cliques != N * 2 * n / (n + 1))
            c.violations.push_back({ "clique-count", "number of maximal cliques is |V| 2n/(n+1)", {},
                    to_string(c.cliques) + " cliques" });
        if (N * n * n * (n - 1) % 3 != 0 || c.triangles != N * n * n * (n - 1) / 3)
            c.violations.push_back({ "triangle-count", "number of triangles is |V| n^2 (n-1)/3", {},
                    to_string(c.triangles) + " triangles" });
        if ((2 * N) % (n + 1) != 0)
            c.violations.push_back({ "order-divisibility", "n+1 divides 2|V|", {}, "|V| = " + to_string(N) });
        if (n % 3 == 2 && N % 3 != 0)
            c.violations.push_back({ "order-divisibility", "3 divides |V| when n = 2 mod 3", {}, "|V| = " + to_string(N) });
        return c;
    }

    auto to_json(const StructuralCensus & c) -> nlohmann::json
    {
        return { { "n", c.n }, { "vertices", c.vertices }, { "edges", c.edges }, { "maximal_cliques", c.cliques },
            { "triangles", c.triangles }, { "violations", to_json(c.violations) } };
    }

    AuditContext::AuditContext(const LocalGrid & lg) :
        _lg(&lg),
        _dist(lg.graph()),
        _cliques(lg.maximal_cliques()),
        _cliques_of(lg.graph().order())
    {
        for (std::size_t i = 0 ; i < _cliques.size() ; ++i)
            for (auto v : _cliques[i])
                _cliques_of[v].push_back(i);
        const Graph & g = lg.graph();
        for (Vertex x = 0 ; x < g.order() ; ++x)
            for (Vertex y = x + 1 ; y < g.order() ; ++y)
                if (_dist(x, y) == 2) {
                    int c = g.common_neighbour_count(x, y);
                    _min_c2 = std::min(_min_c2.value_or(c), c);
                    _max_c2 = std::max(_max_c2.value_or(c), c);
                }
    }

    auto AuditContext::clique_distance(Vertex x, int clique) const -> int
    {
        int d = DistanceMatrix::unreachable;
        for (auto v : _cliques[clique])
            d = std::min(d, _dist(x, v));
        return d;
    }

    namespace
    {
        auto contains(const vector<Vertex> & sorted, Vertex v) -> bool
        {
            return std::binary_search(sorted.begin(), sorted.end(), v);
        }
    }

    auto clique_distance_audit(const AuditContext & ctx) -> vector<Violation>
    {
        vector<Violation> out;
        const Graph & g = ctx.graph();
        auto & dist = ctx.distances();
        int n = ctx.n();

        for (Vertex x = 0 ; x < g.order() ; ++x) {
            for (std::size_t q = 0 ; q < ctx.cliques().size() ; ++q) {
                auto & C = ctx.cliques()[q];
                if (contains(C, x))
                    continue;
                int d = ctx.clique_distance(x, q);
                int at1 = 0, at2 = 0;
                for (auto v : C) {
                    at1 += dist(x, v) == 1;
                    at2 += dist(x, v) == 2;
                }
                if (d == 1) {
                    if (at1 != 2 || at2 != n - 1)
                        out.push_back({ "clique-distance-1", "d(x,C)=1 implies |C n G(x)| = 2 and |C n G2(x)| = n-1",
                                { x }, "clique " + to_string(q) + ": " + to_string(at1) + " at distance 1, "
                                + to_string(at2) + " at distance 2" });
                }
                else if (d == 2) {
                    for (auto y : C) {
                        if (dist(x, y) != 2)
                            continue;
                        int c2 = ctx.c2(x, y);
                        if (c2 > 2 * (n - 1))
                            out.push_back({ "clique-distance-2", "d(x,C)=2 implies c2(x,y) <= 2(n-1) on C n G2(x)",
                                    { x, y }, "c2 = " + to_string(c2) });
                        else if (at2 < c2 / 2 + 1)
                            out.push_back({ "clique-distance-2", "d(x,C)=2 and c2(x,y)=2m imply |C n G2(x)| >= m+1",
                                    { x, y }, to_string(at2) + " vertices at distance 2" });
                    }
                }
            }

            // split of the 2n cliques through each y in G2(x)
            for (Vertex y = 0 ; y < g.order() ; ++y) {
                if (dist(x, y) != 2)
                    continue;
                int c2 = ctx.c2(x, y), near = 0, far = 0;
                for (auto q : ctx.cliques_of(y)) {
                    int d = ctx.clique_distance(x, q);
                    near += d == 1;
                    far += d == 2;
                }
                if (c2 == 2 * n && far != 0)
                    out.push_back({ "clique-split", "c2(x,y) = 2n puts every clique through y at distance 1 from x",
                            { x, y }, to_string(far) + " cliques at distance 2" });
                if (c2 < 2 * n && (near != c2 || far != 2 * n - c2))
                    out.push_back({ "clique-split", "c2(x,y) = 2m puts 2m cliques through y at distance 1 and 2(n-m) at distance 2",
                            { x, y }, to_string(near) + " near, " + to_string(far) + " far" });
            }
        }
        return out;
    }

    auto parameter_bounds_audit(const AuditContext & ctx) -> ParameterAudit
    {
        ParameterAudit out;
        const Graph & g = ctx.graph();
        auto & dist = ctx.distances();
        long long n = ctx.n();
        long long N = g.order();

        if (ctx.min_c2())
            out.m_star = *ctx.min_c2() / 2;
        else
            out.notes.push_back("no pairs at distance 2; bounds involving m* skipped");
        long long m = out.m_star.value_or(0);
        bool low_m = out.m_star && m <= n - 1;
        if (out.m_star && ! low_m)
            out.notes.push_back("m* = n; the bounds for distance >= 3 assume m* <= n-1 and were skipped");

        for (Vertex x = 0 ; x < N ; ++x) {
            int ecc = dist.eccentricity(x);
            vector<VertexSet> sphere(ecc + 2);
            for (int i = 0 ; i <= ecc + 1 ; ++i)
                sphere[i] = dist.sphere(x, i);
            vector<long long> k(ecc + 2, 0);
            for (int i = 0 ; i <= ecc ; ++i)
                k[i] = sphere[i].count();

            auto b_of = [&] (Vertex y, int i) { return popcount_and(g.row(y), sphere[i + 1].words()); };
            auto c_of = [&] (Vertex z, int i) { return popcount_and(g.row(z), sphere[i - 1].words()); };

            // two-way edge count between consecutive layers
            for (int i = 1 ; i <= ecc ; ++i) {
                long long bs = 0, cs = 0;
                sphere[i - 1].for_each([&] (int y) { bs += b_of(y, i - 1); });
                sphere[i].for_each([&] (int z) { cs += c_of(z, i); });
                if (bs != cs)
                    out.violations.push_back({ "b=c", "edges between G_{i-1}(x) and G_i(x) counted both ways agree",
                            { x }, "i = " + to_string(i) + ": " + to_string(bs) + " vs " + to_string(cs) });
            }

            // sum over G2(x) of c2 equals n^2 (n-1)^2
            if (ecc >= 2) {
                long long total = 0;
                sphere[2].for_each([&] (int z) { total += c_of(z, 2); });
                if (total != n * n * (n - 1) * (n - 1))
                    out.violations.push_back({ "sum-k2", "n^2 (n-1)^2 = sum over m of 2m k_{2,2m}(x)", { x },
                            "sum = " + to_string(total) });
            }

            if (! out.m_star)
                continue;

            if (ecc >= 2 && k[2] * 2 * m > n * n * (n - 1) * (n - 1))
                out.violations.push_back({ "k2-bound", "k2(x) <= n^2 (n-1)^2 / (2m*)", { x }, "k2 = " + to_string(k[2]) });
            if (ecc >= 3 && k[3] * (m + 1) * (m + 1) > k[2] * (n - m) * (n - m))
                out.violations.push_back({ "k3-bound", "k3(x) <= k2(x) (n-m*)^2 / (m*+1)^2", { x }, "k3 = " + to_string(k[3]) });
            for (int i = 4 ; low_m && i <= ecc ; ++i)
                if (k[i] * (m + 1) * (m + 1) > k[i - 1] * (n - m - 1) * (n - m - 1))
                    out.violations.push_back({ "ki-bound", "k_i(x) <= k_{i-1}(x) (n-m*-1)^2 / (m*+1)^2", { x },
                            "i = " + to_string(i) + ", k_i = " + to_string(k[i]) });

            if (ecc >= 2)
                sphere[2].for_each([&] (int y) {
                    long long my = ctx.c2(x, y) / 2;
                    long long b2 = b_of(y, 2);
                    if (b2 > (n - my) * (n - my))
                        out.violations.push_back({ "b2-bound", "c2(x,y) = 2m implies b2(x,y) <= (n-m)^2", { x, y },
                                "b2 = " + to_string(b2) });
                });
            for (int i = 3 ; low_m && i <= ecc ; ++i)
                sphere[i].for_each([&] (int z) {
                    long long ci = c_of(z, i), bi = b_of(z, i);
                    if (ci < (m + 1) * (m + 1))
                        out.violations.push_back({ "ci-bound", "c_i(x,z) >= (m*+1)^2 for i >= 3", { x, z },
                                "i = " + to_string(i) + ", c = " + to_string(ci) });
                    if (bi > (n - m - 1) * (n - m - 1))
                        out.violations.push_back({ "bi-bound", "b_i(x,z) <= (n-m*-1)^2 for i >= 3", { x, z },
                                "i = " + to_string(i) + ", b = " + to_string(bi) });
                });
        }
        return out;
    }

    auto mu_clique_matching_audit(const AuditContext & ctx, bool keep_reports) -> MuCliqueAudit
    {
        int n = ctx.n();
        if (n < 3)
            throw DomainError("mu-clique audit needs n >= 3, got n = " + to_string(n));

        MuCliqueAudit out;
        const Graph & g = ctx.graph();
        auto & dist = ctx.distances();
        int N = g.order();

        for (Vertex x = 0 ; x < N ; ++x)
            for (std::size_t q = 0 ; q < ctx.cliques().size() ; ++q) {
                auto & C = ctx.cliques()[q];
                if (contains(C, x))
                    continue;
                int d = ctx.clique_distance(x, q);
                if (d != 1 && d != 2)
                    continue;

                vector<Vertex> Y, near;
                for (auto v : C) {
                    if (dist(x, v) == 2)
                        Y.push_back(v);
                    else if (dist(x, v) == 1)
                        near.push_back(v);
                }

                vector<VertexSet> mus;
                VertexSet S(N);
                long long c2_sum = 0;
                for (auto y : Y) {
                    auto s = g.row_set(x);
                    s &= g.row_set(y);
                    c2_sum += s.count();
                    S |= s;
                    mus.push_back(std::move(s));
                }
                for (auto v : C)
                    S.reset(v);

                VertexSet T(N);
                if (d == 1) {
                    if (near.size() != 2) {
                        out.violations.push_back({ "mu-clique-setup", "d(x,C)=1 implies |C n G(x)| = 2", { x }, "clique " + to_string(q) });
                        continue;
                    }
                    S.for_each([&] (int w) {
                        if (g.adjacent(w, near[0]) || g.adjacent(w, near[1]))
                            T.set(w);
                    });
                }

                auto s_members = S.members();
                auto cover = [&] (Vertex w) {
                    int c = 0;
                    for (auto & mu : mus)
                        c += mu.test(w);
                    return c;
                };

                for (auto w : s_members) {
                    int want = T.test(w) ? 1 : 2, got = cover(w);
                    if (got != want)
                        out.violations.push_back({ "mu-clique-multiplicity",
                                "w in T lies in one mu-graph of Delta, w in S\\T in exactly two", { x, w },
                                "clique " + to_string(q) + ": " + to_string(got) + " mu-graphs" });
                }

                VertexSet core(N);
                for (auto v : near)
                    core.set(v);
                for (std::size_t i = 0 ; i < mus.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < mus.size() ; ++j) {
                        auto meet = mus[i];
                        meet &= mus[j];
                        auto extra = meet;
                        extra.subtract(core);
                        bool core_inside = true;
                        core.for_each([&] (int v) { core_inside = core_inside && meet.test(v); });
                        auto e = extra.members();
                        bool ok = core_inside && (e.empty() || (e.size() == 2 && g.adjacent(e[0], e[1])
                                    && S.test(e[0]) && S.test(e[1]) && ! T.test(e[0]) && ! T.test(e[1])));
                        if (! ok)
                            out.violations.push_back({ "mu-clique-meet",
                                    "two mu-graphs of Delta meet in C n G(x), plus at most one edge of S\\T",
                                    { x, Y[i], Y[j] }, "clique " + to_string(q) });
                    }

                // edges inside S covered by exactly two mu-graphs
                vector<pair<Vertex, Vertex>> matched;
                vector<int> degree_in_matching(N, 0);
                for (std::size_t i = 0 ; i < s_members.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < s_members.size() ; ++j) {
                        Vertex a = s_members[i], b = s_members[j];
                        if (! g.adjacent(a, b))
                            continue;
                        int c = 0;
                        for (auto & mu : mus)
                            c += mu.test(a) && mu.test(b);
                        if (c == 2) {
                            matched.emplace_back(a, b);
                            ++degree_in_matching[a];
                            ++degree_in_matching[b];
                        }
                    }
                for (auto w : s_members) {
                    int want = T.test(w) ? 0 : 1;
                    if (degree_in_matching[w] != want)
                        out.violations.push_back({ "mu-clique-matching",
                                "edges lying in exactly two mu-graphs of Delta form a perfect matching on S\\T", { x, w },
                                "clique " + to_string(q) + ": matched " + to_string(degree_in_matching[w]) + " times" });
                }

                if (2 * static_cast<long long>(s_members.size()) != c2_sum || c2_sum % 4 != 0)
                    out.violations.push_back({ "mu-clique-sum", "2|S| = sum of c2(x,y) over C n G2(x), divisible by 4",
                            { x }, "clique " + to_string(q) + ": |S| = " + to_string(s_members.size())
                            + ", sum = " + to_string(c2_sum) });

                if (keep_reports) {
                    MuCliqueReport r;
                    r.x = x;
                    r.clique = q;
                    r.clique_distance = d;
                    r.S = s_members;
                    r.T = T.members();
                    r.matched_edges = std::move(matched);
                    r.c2_sum = c2_sum;
                    out.reports.push_back(std::move(r));
                }
            }
        return out;
    }

    auto parity_audit(const AuditContext & ctx) -> vector<Violation>
    {
        const Graph & g = ctx.graph();
        auto & dist = ctx.distances();
        int n = ctx.n(), N = g.order();

        if (ctx.min_c2() && *ctx.min_c2() < 2 * (n - 1))
            for (Vertex x = 0 ; x < N ; ++x)
                for (Vertex y = x + 1 ; y < N ; ++y)
                    if (dist(x, y) == 2 && ctx.c2(x, y) < 2 * (n - 1))
                        throw DomainError("hypothesis unmet: mu" + pair_text(x, y) + " has order "
                                + to_string(ctx.c2(x, y)) + " < 2(n-1) = " + to_string(2 * (n - 1)));

        vector<Violation> out;
        if (dist.diameter() > 3)
            out.push_back({ "parity-diameter", "diameter at most 3", {}, "diameter " + to_string(dist.diameter()) });

        for (Vertex x = 0 ; x < N ; ++x)
            for (std::size_t q = 0 ; q < ctx.cliques().size() ; ++q) {
                auto & C = ctx.cliques()[q];
                if (contains(C, x))
                    continue;
                int d = ctx.clique_distance(x, q);
                int low = 0, high = 0, at2 = 0;
                for (auto y : C)
                    if (dist(x, y) == 2) {
                        ++at2;
                        int c2 = ctx.c2(x, y);
                        low += c2 == 2 * (n - 1);
                        high += c2 == 2 * n;
                    }
                if (d == 1) {
                    if (low % 2 != 0)
                        out.push_back({ "parity-d1", "d(x,C)=1: the number of y in C n G2(x) with c2 = 2(n-1) is even",
                                { x }, "clique " + to_string(q) + ": " + to_string(low) });
                    if (n % 2 == 0 && high == 0)
                        out.push_back({ "parity-d1-even", "d(x,C)=1 and n even: some y in C n G2(x) has c2 = 2n",
                                { x }, "clique " + to_string(q) });
                }
                else if (d == 2) {
                    if (low != at2)
                        out.push_back({ "parity-d2", "d(x,C)=2: every y in C n G2(x) has c2 = 2(n-1)",
                                { x }, "clique " + to_string(q) });
                    if (n % 2 == 0 && at2 == static_cast<int>(C.size()))
                        out.push_back({ "parity-d2-even", "d(x,C)=2 and n even: C is not inside G2(x)",
                                { x }, "clique " + to_string(q) });
                }
                else
                    out.push_back({ "parity-clique-distance", "d(x,C) is 1 or 2", { x },
                            "clique " + to_string(q) + " at distance " + to_string(d) });
            }
        return out;
    }

    auto parse_regime(const string & s) -> BoundsRegime
    {
        if (s == "n-1" || s == ">=n-1")
            return BoundsRegime::mu_at_least_n_minus_1;
        if (s == "2(n-1)" || s == ">=2(n-1)")
            return BoundsRegime::mu_at_least_2n_minus_2;
        if (s == "=2(n-1)")
            return BoundsRegime::mu_equal_2n_minus_2;
        throw InvalidParameter("unknown regime '" + s + "' (expected n-1, 2(n-1) or =2(n-1))");
    }

    auto regime_name(BoundsRegime r) -> string
    {
        switch (r) {
            case BoundsRegime::mu_at_least_n_minus_1: return "mu>=n-1";
            case BoundsRegime::mu_at_least_2n_minus_2: return "mu>=2(n-1)";
            case BoundsRegime::mu_equal_2n_minus_2: return "mu=2(n-1)";
        }
        return "?";
    }

    namespace
    {
        // RAII holder for a handful of MPFR variables
        struct Mp
        {
            mpfr_t v;
            Mp() { mpfr_init2(v, 192); }
            ~Mp() { mpfr_clear(v); }
            Mp(const Mp &) = delete;
            auto operator=(const Mp &) -> Mp & = delete;
        };

        // enclosure of ln(a / b) for positive integers a, b
        auto log_ratio(long long a, long long b, mpfr_t lo, mpfr_t hi) -> void
        {
            Mp t;
            mpfr_set_si(t.v, a, MPFR_RNDN);
            mpfr_div_si(t.v, t.v, b, MPFR_RNDD);
            mpfr_log(lo, t.v, MPFR_RNDD);
            mpfr_set_si(t.v, a, MPFR_RNDN);
            mpfr_div_si(t.v, t.v, b, MPFR_RNDU);
            mpfr_log(hi, t.v, MPFR_RNDU);
        }

        // enclosure of c * x ln(x) for x >= 1
        auto scaled_xlogx(double c, long long x, mpfr_t lo, mpfr_t hi) -> void
        {
            Mp l, h;
            log_ratio(x, 1, l.v, h.v);
            mpfr_mul_si(lo, l.v, x, MPFR_RNDD);
            mpfr_mul_d(lo, lo, c, MPFR_RNDD);
            mpfr_mul_si(hi, h.v, x, MPFR_RNDU);
            mpfr_mul_d(hi, hi, c, MPFR_RNDU);
        }
    }

    auto theorem_bounds(int n, BoundsRegime regime) -> BoundsReport
    {
        if (n < 2)
            throw InvalidParameter("theorem_bounds needs n >= 2, got " + to_string(n));

        BoundsReport r;
        r.n = n;
        r.regime = regime;
        long long N = n;

        // f(n) = ln(n^2 (n-1)) / (2 ln((n+1)/(n-1)))
        Mp num_lo, num_hi, den_lo, den_hi, f_lo, f_hi, f_mid;
        log_ratio(N * N * (N - 1), 1, num_lo.v, num_hi.v);
        log_ratio(N + 1, N - 1, den_lo.v, den_hi.v);
        mpfr_mul_2ui(den_lo.v, den_lo.v, 1, MPFR_RNDD);
        mpfr_mul_2ui(den_hi.v, den_hi.v, 1, MPFR_RNDU);
        mpfr_div(f_lo.v, num_lo.v, den_hi.v, MPFR_RNDD);
        mpfr_div(f_hi.v, num_hi.v, den_lo.v, MPFR_RNDU);
        mpfr_add(f_mid.v, f_lo.v, f_hi.v, MPFR_RNDN);
        mpfr_div_2ui(f_mid.v, f_mid.v, 1, MPFR_RNDN);

        r.f_lower = mpfr_get_d(f_lo.v, MPFR_RNDD);
        r.f_upper = mpfr_get_d(f_hi.v, MPFR_RNDU);
        r.f_n = mpfr_get_d(f_mid.v, MPFR_RNDN);

        Mp ceil_lo, ceil_hi;
        mpfr_ceil(ceil_lo.v, f_lo.v);
        mpfr_ceil(ceil_hi.v, f_hi.v);
        r.f_brackets_integer = mpfr_lessequal_p(ceil_lo.v, f_hi.v) != 0;

        Mp nearest, gap;
        mpfr_round(nearest.v, f_mid.v);
        mpfr_sub(gap.v, f_mid.v, nearest.v, MPFR_RNDN);
        mpfr_abs(gap.v, gap.v, MPFR_RNDN);
        r.f_near_integer = mpfr_cmp_d(gap.v, 1e-12) < 0;

        Mp sl_lo, sl_hi, su_lo, su_hi;
        scaled_xlogx(0.75, N - 1, sl_lo.v, sl_hi.v);
        scaled_xlogx(0.75, N, su_lo.v, su_hi.v);
        r.sandwich_holds = mpfr_less_p(sl_hi.v, f_lo.v) && mpfr_less_p(f_hi.v, su_lo.v);

        switch (regime) {
            case BoundsRegime::mu_at_least_n_minus_1: {
                r.order_bound = N * N * N * (N + 5) / 4;
                // ceil(f) is certain only when the enclosure holds no integer; otherwise take the safe upper end
                r.diam_bound = 2 + static_cast<int>(mpfr_get_si(ceil_hi.v, MPFR_RNDU));
                break;
            }
            case BoundsRegime::mu_at_least_2n_minus_2:
            case BoundsRegime::mu_equal_2n_minus_2:
                r.order_bound = (N * N + 1) * (N + 1) / 2;
                r.diam_bound = 3;
                break;
        }
        return r;
    }

    auto to_json(const BoundsReport & r) -> nlohmann::json
    {
        return { { "n", r.n }, { "regime", regime_name(r.regime) }, { "order_bound", r.order_bound },
            { "diam_bound", r.diam_bound }, { "f_n", r.f_n }, { "f_enclosure", { r.f_lower, r.f_upper } },
            { "f_brackets_integer", r.f_brackets_integer }, { "f_near_integer", r.f_near_integer },
            { "sandwich_holds", r.sandwich_holds } };
    }

    auto five_by_five_audit(const AuditContext & ctx) -> FiveByFiveRecord
    {
        if (ctx.n() != 5 || ! ctx.distances().connected())
            throw DomainError("five_by_five_audit needs a connected locally 5x5 grid graph, got n = " + to_string(ctx.n()));

        const Graph & g = ctx.graph();
        FiveByFiveRecord r;
        r.vertices = g.order();
        r.order_at_most_300 = r.vertices <= 300;
        r.order_divisible_by_6 = r.vertices % 6 == 0;
        if (! r.order_at_most_300)
            r.violations.push_back({ "5x5-order", "|V| <= 300", {}, to_string(r.vertices) });
        if (! r.order_divisible_by_6)
            r.violations.push_back({ "5x5-order", "|V| divisible by 6", {}, to_string(r.vertices) });

        r.all_mu_at_least_8 = ctx.min_c2().value_or(8) >= 8;
        if (! r.all_mu_at_least_8)
            return r;

        for (Vertex x = 0 ; x < g.order() ; ++x)
            if (ctx.distances().eccentricity(x) != 3)
                r.violations.push_back({ "5x5-eccentricity", "every vertex has eccentricity 3", { x },
                        to_string(ctx.distances().eccentricity(x)) });

        if (r.vertices == 78) {
            r.branch = 78;
            if (ctx.min_c2() != 8 || ctx.max_c2() != 8)
                r.violations.push_back({ "5x5-78", "|V| = 78 forces c2 = 8 on every distance-2 pair", {}, "" });
        }
        else if (r.vertices == 72) {
            r.branch = 72;
            // classes x | G(x) | G2,8(x) | G2,10(x) | G3(x) with the stated neighbour counts
            vector<long long> want_sizes{ 1, 25, 25, 20, 1 };
            vector<vector<int>> want{
                { 0, 25, 0, 0, 0 },
                { 1, 8, 8, 8, 0 },
                { 0, 8, 8, 8, 1 },
                { 0, 10, 10, 5, 0 },
                { 0, 0, 25, 0, 0 } };
            for (Vertex x = 0 ; x < g.order() ; ++x) {
                auto d = distance_diagram(g, x);
                bool ok = d.regular && d.class_sizes() == want_sizes;
                for (std::size_t i = 0 ; ok && i < want.size() ; ++i)
                    for (std::size_t j = 0 ; j < want.size() ; ++j)
                        ok = ok && d.edges[i][j] == want[i][j];
                if (! ok)
                    r.violations.push_back({ "5x5-72-diagram", "|V| = 72 forces the 1/25/25/20/1 distance diagram", { x }, "" });
            }
        }
        else {
            r.violations.push_back({ "5x5-branch", "all mu >= 8 forces |V| in {72, 78}", {}, to_string(r.vertices) });
        }
        return r;
    }

    auto to_json(const FiveByFiveRecord & r) -> nlohmann::json
    {
        nlohmann::json j{ { "vertices", r.vertices }, { "order_at_most_300", r.order_at_most_300 },
            { "order_divisible_by_6", r.order_divisible_by_6 }, { "all_mu_at_least_8", r.all_mu_at_least_8 },
            { "violations", to_json(r.violations) } };
        j["branch"] = r.branch ? nlohmann::json(*r.branch) : nlohmann::json(nullptr);
        return j;
    }
}

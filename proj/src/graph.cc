#include <gridlocus/graph.hh>
#include <gridlocus/errors.hh>

#include <algorithm>
#include <numeric>
#include <sstream>

using std::optional;
using std::pair;
using std::span;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace gridlocus
{
    auto VertexSet::members() const -> vector<int>
    {
        vector<int> result;
        result.reserve(count());
        for_each([&] (int v) { result.push_back(v); });
        return result;
    }

    auto Graph::row_set(Vertex v) const -> VertexSet
    {
        VertexSet s(_n);
        auto r = row(v);
        std::copy(r.begin(), r.end(), s.words().begin());
        return s;
    }

    auto Graph::edge_count() const -> long long
    {
        long long total = 0;
        for (auto d : _degrees)
            total += d;
        return total / 2;
    }

    auto Graph::label(Vertex v) const -> string
    {
        if (static_cast<std::size_t>(v) < _labels.size() && ! _labels[v].empty())
            return _labels[v];
        return to_string(v);
    }

    auto Graph::regular_degree() const -> optional<int>
    {
        if (_n == 0)
            return std::nullopt;
        for (auto d : _degrees)
            if (d != _degrees[0])
                return std::nullopt;
        return _degrees[0];
    }

    GraphBuilder::GraphBuilder(int n) :
        _n(n),
        _words((n + 63) / 64),
        _bits(static_cast<std::size_t>(n) * _words, 0)
    {
    }

    auto GraphBuilder::add_edge(Vertex u, Vertex v) -> void
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            throw DomainError("edge endpoint out of range");
        if (u == v)
            throw DomainError("self-loop at vertex " + to_string(u));
        _bits[static_cast<std::size_t>(u) * _words + (v >> 6)] |= uint64_t{ 1 } << (v & 63);
        _bits[static_cast<std::size_t>(v) * _words + (u >> 6)] |= uint64_t{ 1 } << (u & 63);
    }

    auto GraphBuilder::set_label(Vertex v, string label) -> void
    {
        if (_labels.empty())
            _labels.resize(_n);
        _labels[v] = std::move(label);
    }

    auto GraphBuilder::has_edge(Vertex u, Vertex v) const -> bool
    {
        return (_bits[static_cast<std::size_t>(u) * _words + (v >> 6)] >> (v & 63)) & 1;
    }

    auto GraphBuilder::build() && -> Graph
    {
        Graph g;
        g._n = _n;
        g._words = _words;
        g._bits = std::move(_bits);
        g._labels = std::move(_labels);
        g._degrees.assign(_n, 0);
        g._adj.assign(_n, {});
        for (int v = 0 ; v < _n ; ++v) {
            auto r = g.row(v);
            for (int i = 0 ; i < _words ; ++i) {
                auto w = r[i];
                while (w) {
                    g._adj[v].push_back(i * 64 + std::countr_zero(w));
                    w &= w - 1;
                }
            }
            g._degrees[v] = g._adj[v].size();
        }
        return g;
    }

    auto CycleProfile::total() const -> int
    {
        return std::accumulate(lengths.begin(), lengths.end(), 0);
    }

    auto CycleProfile::uniform_length() const -> optional<int>
    {
        if (lengths.empty() || lengths.front() != lengths.back())
            return std::nullopt;
        return lengths.front();
    }

    auto CycleProfile::to_string() const -> string
    {
        std::ostringstream s;
        s << "{";
        for (std::size_t i = 0 ; i < lengths.size() ; ++i)
            s << (i ? "," : "") << lengths[i];
        s << "}";
        return s.str();
    }

    auto make_profile(vector<int> lengths) -> CycleProfile
    {
        std::sort(lengths.begin(), lengths.end());
        return CycleProfile{ std::move(lengths) };
    }

    namespace
    {
        // BFS layers from x by bitset frontier expansion.
        auto layers(const Graph & g, Vertex x) -> vector<VertexSet>
        {
            int n = g.order();
            vector<VertexSet> result;
            VertexSet visited(n), frontier(n);
            visited.set(x);
            frontier.set(x);
            while (! frontier.empty()) {
                result.push_back(frontier);
                VertexSet next(n);
                frontier.for_each([&] (int v) {
                    auto r = g.row(v);
                    auto w = next.words();
                    for (std::size_t i = 0 ; i < w.size() ; ++i)
                        w[i] |= r[i];
                });
                next.subtract(visited);
                visited |= next;
                frontier = std::move(next);
            }
            return result;
        }
    }

    auto bfs_profile(const Graph & g, Vertex x) -> DistanceProfile
    {
        if (x < 0 || x >= g.order())
            throw DomainError("source vertex out of range");
        DistanceProfile p;
        p.source = x;
        p.dist.assign(g.order(), unreachable);
        auto ls = layers(g, x);
        for (std::size_t i = 0 ; i < ls.size() ; ++i) {
            p.k.push_back(ls[i].count());
            ls[i].for_each([&] (int v) { p.dist[v] = i; });
        }
        p.eccentricity = static_cast<int>(ls.size()) - 1;
        return p;
    }

    auto bfs_profile(const Graph & g, Vertex x, int grid_n) -> DistanceProfile
    {
        auto p = bfs_profile(g, x);
        for (Vertex z = 0 ; z < g.order() ; ++z)
            if (p.dist[z] == 2)
                ++p.k2_by_mu[g.common_neighbour_count(x, z)];
        if (grid_n >= 2) {
            auto it = p.k2_by_mu.find(2 * (grid_n - 1));
            long long k = it == p.k2_by_mu.end() ? 0 : it->second;
            if (k % grid_n == 0)
                p.ell_x = k / grid_n;
        }
        return p;
    }

    DistanceMatrix::DistanceMatrix(const Graph & g) :
        _n(g.order()),
        _d(static_cast<std::size_t>(_n) * _n, unreachable),
        _ecc(_n, 0)
    {
        for (Vertex x = 0 ; x < _n ; ++x) {
            auto ls = layers(g, x);
            int reached = 0;
            for (std::size_t i = 0 ; i < ls.size() ; ++i)
                ls[i].for_each([&] (int v) {
                    _d[static_cast<std::size_t>(x) * _n + v] = i;
                    ++reached;
                });
            _ecc[x] = static_cast<int>(ls.size()) - 1;
            if (reached != _n)
                _connected = false;
            _diameter = std::max(_diameter, _ecc[x]);
        }
    }

    auto DistanceMatrix::sphere(Vertex x, int i) const -> VertexSet
    {
        VertexSet s(_n);
        for (Vertex v = 0 ; v < _n ; ++v)
            if ((*this)(x, v) == i)
                s.set(v);
        return s;
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.order() == 0)
            return true;
        auto p = bfs_profile(g, 0);
        return std::none_of(p.dist.begin(), p.dist.end(), [] (int d) { return d == unreachable; });
    }

    auto induced(const Graph & g, span<const Vertex> vertices) -> Graph
    {
        GraphBuilder b(vertices.size());
        for (auto v : vertices)
            if (v < 0 || v >= g.order())
                throw DomainError("induced: vertex " + to_string(v) + " out of range");
        for (std::size_t i = 0 ; i < vertices.size() ; ++i) {
            if (! g.labels().empty())
                b.set_label(i, g.label(vertices[i]));
            for (std::size_t j = i + 1 ; j < vertices.size() ; ++j)
                if (g.adjacent(vertices[i], vertices[j]))
                    b.add_edge(i, j);
        }
        return std::move(b).build();
    }

    auto common_neighbours(const Graph & g, Vertex x, Vertex y) -> vector<Vertex>
    {
        auto s = g.row_set(x);
        s &= g.row_set(y);
        return s.members();
    }

    namespace
    {
        // Bron-Kerbosch with Tomita pivoting over bit vectors.
        struct CliqueEnumerator
        {
            const Graph & g;
            vector<vector<Vertex>> & out;
            vector<Vertex> current;

            auto expand(VertexSet p, VertexSet x) -> void
            {
                if (p.empty() && x.empty()) {
                    auto c = current;
                    std::sort(c.begin(), c.end());
                    out.push_back(std::move(c));
                    return;
                }

                int best = -1, best_count = -1;
                auto pick = [&] (int u) {
                    int c = popcount_and(p.words(), g.row(u));
                    if (c > best_count) {
                        best_count = c;
                        best = u;
                    }
                };
                p.for_each(pick);
                x.for_each(pick);

                VertexSet candidates = p;
                candidates.subtract(g.row_set(best));
                for (auto v : candidates.members()) {
                    auto nv = g.row_set(v);
                    VertexSet np = p, nx = x;
                    np &= nv;
                    nx &= nv;
                    current.push_back(v);
                    expand(std::move(np), std::move(nx));
                    current.pop_back();
                    p.reset(v);
                    x.set(v);
                }
            }
        };
    }

    auto maximal_cliques(const Graph & g) -> vector<vector<Vertex>>
    {
        vector<vector<Vertex>> out;
        if (g.order() == 0)
            return out;
        VertexSet all(g.order());
        for (int v = 0 ; v < g.order() ; ++v)
            all.set(v);
        CliqueEnumerator e{ g, out, {} };
        e.expand(all, VertexSet(g.order()));
        std::sort(out.begin(), out.end());
        return out;
    }

    auto rook_grid_labelling(const Graph & g, int m, int n) -> optional<GridLabelling>
    {
        if (m < 1 || n < 1 || g.order() != m * n)
            return std::nullopt;
        for (int v = 0 ; v < g.order() ; ++v)
            if (g.degree(v) != m + n - 2)
                return std::nullopt;

        // split N(v0) into its two cliques: the row through v0 (n-1 others) and column (m-1 others)
        Vertex v0 = 0;
        auto nbrs = g.neighbours(v0);
        vector<int> comp(g.order(), -1);
        vector<vector<Vertex>> comps;
        for (auto s : nbrs) {
            if (comp[s] != -1)
                continue;
            comps.emplace_back();
            vector<Vertex> stack{ s };
            comp[s] = comps.size() - 1;
            while (! stack.empty()) {
                auto u = stack.back();
                stack.pop_back();
                comps.back().push_back(u);
                for (auto w : g.neighbours(u))
                    if (comp[w] == -1 && g.adjacent(w, v0)) {
                        comp[w] = comps.size() - 1;
                        stack.push_back(w);
                    }
            }
        }

        vector<Vertex> row_mates, column_mates;
        if (comps.size() == 2) {
            auto a = comps[0], b = comps[1];
            if (static_cast<int>(a.size()) != n - 1)
                std::swap(a, b);
            if (static_cast<int>(a.size()) != n - 1 || static_cast<int>(b.size()) != m - 1)
                return std::nullopt;
            row_mates = a;
            column_mates = b;
        }
        else if (comps.size() == 1) {
            if (m == 1 && static_cast<int>(comps[0].size()) == n - 1)
                row_mates = comps[0];
            else if (n == 1 && static_cast<int>(comps[0].size()) == m - 1)
                column_mates = comps[0];
            else
                return std::nullopt;
        }
        else if (! comps.empty() || m != 1 || n != 1)
            return std::nullopt;

        std::sort(row_mates.begin(), row_mates.end());
        std::sort(column_mates.begin(), column_mates.end());

        // R0 = v0's row (indexes the columns), C0 = v0's column (indexes the rows)
        vector<Vertex> r0{ v0 }, c0{ v0 };
        r0.insert(r0.end(), row_mates.begin(), row_mates.end());
        c0.insert(c0.end(), column_mates.begin(), column_mates.end());

        GridLabelling lab;
        lab.row.assign(g.order(), -1);
        lab.column.assign(g.order(), -1);
        for (int j = 0 ; j < n ; ++j) {
            lab.row[r0[j]] = 0;
            lab.column[r0[j]] = j;
        }
        for (int i = 1 ; i < m ; ++i) {
            lab.row[c0[i]] = i;
            lab.column[c0[i]] = 0;
        }

        for (Vertex w = 0 ; w < g.order() ; ++w) {
            if (lab.row[w] != -1)
                continue;
            int row = -1, column = -1;
            for (int i = 1 ; i < m ; ++i)
                if (g.adjacent(w, c0[i])) {
                    if (row != -1)
                        return std::nullopt;
                    row = i;
                }
            for (int j = 1 ; j < n ; ++j)
                if (g.adjacent(w, r0[j])) {
                    if (column != -1)
                        return std::nullopt;
                    column = j;
                }
            if (row == -1 || column == -1)
                return std::nullopt;
            lab.row[w] = row;
            lab.column[w] = column;
        }

        vector<char> used(static_cast<std::size_t>(m) * n, 0);
        for (Vertex w = 0 ; w < g.order() ; ++w) {
            auto & u = used[static_cast<std::size_t>(lab.row[w]) * n + lab.column[w]];
            if (u)
                return std::nullopt;
            u = 1;
        }

        for (Vertex u = 0 ; u < g.order() ; ++u)
            for (Vertex v = u + 1 ; v < g.order() ; ++v) {
                bool want = (lab.row[u] == lab.row[v]) != (lab.column[u] == lab.column[v]);
                if (want != g.adjacent(u, v))
                    return std::nullopt;
            }
        return lab;
    }

    auto is_rook_grid(const Graph & g, int m, int n) -> bool
    {
        return rook_grid_labelling(g, m, n).has_value();
    }

    namespace
    {
        // Simultaneous colour refinement on the disjoint union of two graphs,
        // with individualisation and backtracking.
        struct IsoSearch
        {
            const Graph & a;
            const Graph & b;
            int n;

            // colours[0..n) for a, colours[n..2n) for b
            auto refine(vector<int> & colours) const -> bool
            {
                while (true) {
                    vector<pair<vector<int>, int>> sig(2 * n);
                    for (int v = 0 ; v < 2 * n ; ++v) {
                        const Graph & g = v < n ? a : b;
                        int local = v < n ? v : v - n;
                        int offset = v < n ? 0 : n;
                        vector<int> s;
                        s.reserve(g.degree(local) + 1);
                        s.push_back(colours[v]);
                        vector<int> nc;
                        nc.reserve(g.degree(local));
                        for (auto w : g.neighbours(local))
                            nc.push_back(colours[w + offset]);
                        std::sort(nc.begin(), nc.end());
                        s.insert(s.end(), nc.begin(), nc.end());
                        sig[v] = { std::move(s), v };
                    }
                    vector<int> order(2 * n);
                    std::iota(order.begin(), order.end(), 0);
                    std::sort(order.begin(), order.end(), [&] (int x, int y) { return sig[x].first < sig[y].first; });

                    vector<int> next(2 * n);
                    int c = 0;
                    for (int i = 0 ; i < 2 * n ; ++i) {
                        if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first)
                            ++c;
                        next[order[i]] = c;
                    }

                    vector<int> ca(c + 1, 0), cb(c + 1, 0);
                    for (int v = 0 ; v < n ; ++v)
                        ++ca[next[v]];
                    for (int v = n ; v < 2 * n ; ++v)
                        ++cb[next[v]];
                    if (ca != cb)
                        return false;

                    int old_classes = *std::max_element(colours.begin(), colours.end());
                    colours = std::move(next);
                    if (c == old_classes)
                        return true;
                }
            }

            auto search(vector<int> colours) const -> bool
            {
                if (! refine(colours))
                    return false;

                int classes = *std::max_element(colours.begin(), colours.end()) + 1;
                vector<int> size(classes, 0);
                for (int v = 0 ; v < n ; ++v)
                    ++size[colours[v]];

                int target = -1;
                for (int c = 0 ; c < classes ; ++c)
                    if (size[c] > 1 && (target == -1 || size[c] < size[target]))
                        target = c;

                if (target == -1) {
                    vector<int> map_to(classes);
                    for (int v = n ; v < 2 * n ; ++v)
                        map_to[colours[v]] = v - n;
                    for (int u = 0 ; u < n ; ++u)
                        for (auto w : a.neighbours(u))
                            if (! b.adjacent(map_to[colours[u]], map_to[colours[w]]))
                                return false;
                    return true;
                }

                int pivot = -1;
                for (int v = 0 ; v < n ; ++v)
                    if (colours[v] == target) {
                        pivot = v;
                        break;
                    }
                for (int w = n ; w < 2 * n ; ++w) {
                    if (colours[w] != target)
                        continue;
                    auto next = colours;
                    next[pivot] = classes;
                    next[w] = classes;
                    if (search(std::move(next)))
                        return true;
                }
                return false;
            }
        };
    }

    auto are_isomorphic(const Graph & a, const Graph & b, int cap) -> bool
    {
        if (a.order() > cap || b.order() > cap)
            throw CapacityError("isomorphism test limited to " + to_string(cap) + " vertices");
        if (a.order() != b.order() || a.edge_count() != b.edge_count())
            return false;
        if (a.order() == 0)
            return true;
        IsoSearch s{ a, b, a.order() };
        vector<int> colours(2 * a.order(), 0);
        return s.search(std::move(colours));
    }

    auto cycle_decomposition(const Graph & g) -> CycleProfile
    {
        for (int v = 0 ; v < g.order() ; ++v)
            if (g.degree(v) != 2)
                throw DomainError("cycle decomposition needs a 2-regular graph; vertex "
                        + to_string(v) + " has degree " + to_string(g.degree(v)));
        vector<char> seen(g.order(), 0);
        vector<int> lengths;
        for (int v = 0 ; v < g.order() ; ++v) {
            if (seen[v])
                continue;
            int len = 0, prev = -1, cur = v;
            do {
                seen[cur] = 1;
                ++len;
                auto & nb = g.neighbours(cur);
                int next = nb[0] != prev ? nb[0] : nb[1];
                prev = cur;
                cur = next;
            } while (cur != v);
            lengths.push_back(len);
        }
        return make_profile(std::move(lengths));
    }

    auto relabel(const Graph & g, span<const Vertex> permutation) -> Graph
    {
        GraphBuilder b(g.order());
        for (Vertex u = 0 ; u < g.order() ; ++u)
            for (auto v : g.neighbours(u))
                if (u < v)
                    b.add_edge(permutation[u], permutation[v]);
        return std::move(b).build();
    }

    auto complement(const Graph & g) -> Graph
    {
        GraphBuilder b(g.order());
        for (Vertex u = 0 ; u < g.order() ; ++u) {
            if (! g.labels().empty())
                b.set_label(u, g.label(u));
            for (Vertex v = u + 1 ; v < g.order() ; ++v)
                if (! g.adjacent(u, v))
                    b.add_edge(u, v);
        }
        return std::move(b).build();
    }
}

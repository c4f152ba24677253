#include <gridlocus/drg.hh>
#include <gridlocus/errors.hh>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace gridlocus
{
    auto IntersectionArray::to_string() const -> string
    {
        std::ostringstream s;
        s << "(";
        for (std::size_t i = 0 ; i < b.size() ; ++i)
            s << (i ? ", " : "") << b[i];
        s << "; ";
        for (std::size_t i = 0 ; i < c.size() ; ++i)
            s << (i ? ", " : "") << c[i];
        s << ")";
        return s.str();
    }

    auto IntersectionArray::class_sizes() const -> vector<long long>
    {
        vector<long long> k{ 1 };
        for (int i = 0 ; i < diameter ; ++i)
            k.push_back(k.back() * b[i] / c[i]);
        return k;
    }

    auto make_intersection_array(vector<long long> b, vector<long long> c) -> IntersectionArray
    {
        if (b.size() != c.size())
            throw InvalidParameter("intersection array needs as many b_i as c_i");
        IntersectionArray a;
        a.diameter = b.size();
        a.b = std::move(b);
        a.c = std::move(c);
        return a;
    }

    auto intersection_numbers(const Graph & g) -> IntersectionResult
    {
        IntersectionResult result;
        if (g.order() == 0)
            throw DomainError("intersection_numbers needs a nonempty graph");
        DistanceMatrix dist(g);
        if (! dist.connected())
            throw DomainError("intersection_numbers needs a connected graph");

        for (Vertex v = 1 ; v < g.order() ; ++v)
            if (g.degree(v) != g.degree(0)) {
                result.witness = pair{ 0, v };
                result.reason = "not regular";
                return result;
            }

        int D = dist.diameter();
        // first seen (b_i, c_i) for each i, and the pair it came from
        vector<optional<pair<long long, long long>>> seen(D + 1);
        for (Vertex x = 0 ; x < g.order() ; ++x)
            for (Vertex y = 0 ; y < g.order() ; ++y) {
                int i = dist(x, y);
                long long b = 0, c = 0;
                for (auto w : g.neighbours(y)) {
                    int d = dist(x, w);
                    b += d == i + 1;
                    c += d == i - 1;
                }
                if (! seen[i])
                    seen[i] = pair{ b, c };
                else if (*seen[i] != pair{ b, c }) {
                    result.witness = pair{ x, y };
                    result.reason = "intersection numbers at distance " + to_string(i) + " differ";
                    return result;
                }
            }

        vector<long long> bs, cs;
        for (int i = 0 ; i < D ; ++i)
            bs.push_back(seen[i]->first);
        for (int i = 1 ; i <= D ; ++i)
            cs.push_back(seen[i]->second);
        result.array = make_intersection_array(std::move(bs), std::move(cs));
        return result;
    }

    auto SrgParams::to_string() const -> string
    {
        return "(" + std::to_string(N) + ", " + std::to_string(k) + ", " + std::to_string(lambda) + ", "
            + std::to_string(nu) + ")";
    }

    auto srg_check(const Graph & g) -> SrgResult
    {
        DistanceMatrix dist(g);
        if (g.order() == 0 || ! dist.connected() || dist.diameter() != 2)
            throw DomainError("srg_check needs a connected graph of diameter 2, got diameter "
                    + to_string(dist.diameter()));

        SrgResult result;
        for (Vertex v = 1 ; v < g.order() ; ++v)
            if (g.degree(v) != g.degree(0)) {
                result.witness = pair{ 0, v };
                result.reason = "not regular";
                return result;
            }

        optional<int> lambda, nu;
        for (Vertex x = 0 ; x < g.order() ; ++x)
            for (Vertex y = x + 1 ; y < g.order() ; ++y) {
                int c = g.common_neighbour_count(x, y);
                auto & slot = g.adjacent(x, y) ? lambda : nu;
                if (! slot)
                    slot = c;
                else if (*slot != c) {
                    result.witness = pair{ x, y };
                    result.reason = g.adjacent(x, y) ? "lambda not constant" : "nu not constant";
                    return result;
                }
            }
        result.params = SrgParams{ g.order(), g.degree(0), lambda.value_or(0), nu.value_or(0) };
        return result;
    }

    namespace
    {
        auto exact_sqrt(long long v) -> optional<long long>
        {
            if (v < 0)
                return std::nullopt;
            long long s = static_cast<long long>(std::sqrt(static_cast<long double>(v)));
            while (s * s > v)
                --s;
            while ((s + 1) * (s + 1) <= v)
                ++s;
            return s * s == v ? optional{ s } : std::nullopt;
        }
    }

    auto srg_feasibility(const SrgParams & p) -> SrgFeasibility
    {
        if (p.k * (p.k - p.lambda - 1) != (p.N - p.k - 1) * p.nu)
            throw InvalidParameter("parameters " + p.to_string() + " violate k(k - lambda - 1) = (N - k - 1) nu");

        SrgFeasibility f;
        long long disc = (p.nu - p.lambda) * (p.nu - p.lambda) + 4 * (p.k - p.nu);
        long long top = (p.N - 1) * (p.nu - p.lambda) - 2 * p.k;
        auto s = exact_sqrt(disc);

        if (s && *s > 0) {
            // 2 f, 2 g = (N - 1) +- top / s; both must be even nonnegative integers
            if (top % *s != 0) {
                f.detail = "(N-1)(nu-lambda) - 2k is not divisible by sqrt of the discriminant";
                return f;
            }
            long long t = top / *s;
            long long twice_f = (p.N - 1) + t, twice_g = (p.N - 1) - t;
            f.twice_multiplicities = pair{ twice_f, twice_g };
            f.feasible = twice_f >= 0 && twice_g >= 0 && twice_f % 2 == 0 && twice_g % 2 == 0;
            f.detail = f.feasible ? "integral multiplicities" : "non-integral multiplicities";
            return f;
        }

        // irrational eigenvalues: only the conference case survives
        if (top == 0) {
            f.conference = true;
            f.twice_multiplicities = pair{ p.N - 1, p.N - 1 };
            f.feasible = (p.N - 1) % 2 == 0;
            f.detail = "conference graph";
            return f;
        }
        f.detail = "irrational eigenvalues outside the conference case";
        return f;
    }

    auto antipodal_partition(const Graph & g) -> AntipodalResult
    {
        AntipodalResult result;
        DistanceMatrix dist(g);
        if (g.order() == 0 || ! dist.connected()) {
            result.reason = "graph is empty or disconnected";
            return result;
        }
        int D = dist.diameter();
        if (D == 0) {
            result.reason = "diameter 0";
            return result;
        }

        vector<int> block_of(g.order(), -1);
        vector<vector<Vertex>> blocks;
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            vector<Vertex> block{ x };
            for (Vertex y = 0 ; y < g.order() ; ++y)
                if (dist(x, y) == D)
                    block.push_back(y);
            std::sort(block.begin(), block.end());
            if (block_of[x] != -1) {
                if (blocks[block_of[x]] != block) {
                    result.reason = "blocks {x} u G_D(x) overlap without coinciding at vertex " + to_string(x);
                    return result;
                }
                continue;
            }
            for (auto v : block)
                if (block_of[v] != -1) {
                    result.reason = "blocks {x} u G_D(x) overlap at vertex " + to_string(v);
                    return result;
                }
            for (auto v : block)
                block_of[v] = blocks.size();
            blocks.push_back(std::move(block));
        }

        for (auto & b : blocks)
            for (std::size_t i = 0 ; i < b.size() ; ++i)
                for (std::size_t j = i + 1 ; j < b.size() ; ++j)
                    if (dist(b[i], b[j]) != D) {
                        result.reason = "vertices " + to_string(b[i]) + " and " + to_string(b[j])
                            + " share a block but are not at distance D";
                        return result;
                    }
        result.blocks = std::move(blocks);
        return result;
    }

    auto quotient_graph(const Graph & g, const vector<vector<Vertex>> & blocks) -> Graph
    {
        vector<int> block_of(g.order(), -1);
        for (std::size_t i = 0 ; i < blocks.size() ; ++i)
            for (auto v : blocks[i]) {
                if (v < 0 || v >= g.order() || block_of[v] != -1)
                    throw DomainError("quotient_graph: blocks do not partition the vertex set");
                block_of[v] = i;
            }
        if (std::count(block_of.begin(), block_of.end(), -1) != 0)
            throw DomainError("quotient_graph: blocks do not cover the vertex set");

        GraphBuilder b(blocks.size());
        for (Vertex u = 0 ; u < g.order() ; ++u)
            for (auto v : g.neighbours(u))
                if (block_of[u] != block_of[v])
                    b.add_edge(block_of[u], block_of[v]);
        return std::move(b).build();
    }

    auto DistanceDiagram::class_sizes() const -> vector<long long>
    {
        vector<long long> out;
        for (auto & c : classes)
            out.push_back(c.members.size());
        return out;
    }

    auto distance_diagram(const Graph & g, Vertex x) -> DistanceDiagram
    {
        auto p = bfs_profile(g, x);
        if (std::count(p.dist.begin(), p.dist.end(), unreachable) != 0)
            throw DomainError("distance_diagram needs a connected graph");

        // class key: (distance, c2 or -1)
        std::map<pair<int, int>, vector<Vertex>> by_key;
        for (Vertex v = 0 ; v < g.order() ; ++v) {
            int c2 = p.dist[v] == 2 ? g.common_neighbour_count(x, v) : -1;
            by_key[{ p.dist[v], c2 }].push_back(v);
        }

        DistanceDiagram d;
        d.source = x;
        vector<int> class_of(g.order());
        for (auto & [key, members] : by_key) {
            DiagramClass c;
            c.distance = key.first;
            if (key.second >= 0)
                c.c2 = key.second;
            for (auto v : members)
                class_of[v] = d.classes.size();
            c.members = members;
            d.classes.push_back(std::move(c));
        }

        int k = d.classes.size();
        d.edges.assign(k, vector<optional<int>>(k));
        for (int i = 0 ; i < k ; ++i) {
            vector<vector<int>> counts;
            for (auto v : d.classes[i].members) {
                vector<int> row(k, 0);
                for (auto w : g.neighbours(v))
                    ++row[class_of[w]];
                counts.push_back(std::move(row));
            }
            for (int j = 0 ; j < k ; ++j) {
                bool same = std::all_of(counts.begin(), counts.end(), [&] (auto & r) { return r[j] == counts[0][j]; });
                if (same)
                    d.edges[i][j] = counts[0][j];
                else
                    d.regular = false;
            }
        }
        return d;
    }

    auto to_json(const IntersectionArray & a) -> nlohmann::json
    {
        return { { "diameter", a.diameter }, { "b", a.b }, { "c", a.c } };
    }

    auto to_json(const SrgParams & p) -> nlohmann::json
    {
        return { { "N", p.N }, { "k", p.k }, { "lambda", p.lambda }, { "nu", p.nu } };
    }

    auto to_json(const DistanceDiagram & d) -> nlohmann::json
    {
        auto classes = nlohmann::json::array();
        for (auto & c : d.classes) {
            nlohmann::json j{ { "distance", c.distance }, { "size", c.members.size() } };
            if (c.c2)
                j["c2"] = *c.c2;
            classes.push_back(j);
        }
        auto edges = nlohmann::json::array();
        for (auto & row : d.edges) {
            auto r = nlohmann::json::array();
            for (auto & e : row)
                r.push_back(e ? nlohmann::json(*e) : nlohmann::json(nullptr));
            edges.push_back(r);
        }
        return { { "source", d.source }, { "classes", classes }, { "edges", edges }, { "regular", d.regular } };
    }
}

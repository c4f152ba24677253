#include <gridlocus/reference_graphs.hh>
#include <gridlocus/caps.hh>
#include <gridlocus/errors.hh>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace gridlocus
{
    namespace
    {
        auto subsets(int v, int k) -> vector<uint64_t>
        {
            vector<uint64_t> result;
            if (k == 0) {
                result.push_back(0);
                return result;
            }
            // Gosper's hack, in increasing numeric order
            uint64_t s = (uint64_t{ 1 } << k) - 1, limit = uint64_t{ 1 } << v;
            while (s < limit) {
                result.push_back(s);
                uint64_t c = s & -s, r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
            return result;
        }

        auto subset_label(uint64_t s) -> string
        {
            string out;
            for (int i = 0 ; s ; ++i, s >>= 1)
                if (s & 1)
                    out += (out.empty() ? "" : " ") + to_string(i);
            return out;
        }

        auto check_cap(long long count, const string & what) -> void
        {
            if (count > vertex_cap())
                throw CapacityError(what + " has " + to_string(count) + " vertices, above the cap of "
                        + to_string(vertex_cap()));
        }

        auto binomial(int v, int k) -> long long
        {
            long long c = 1;
            for (int i = 1 ; i <= k ; ++i)
                c = c * (v - k + i) / i;
            return c;
        }
    }

    auto johnson(int v, int k) -> Graph
    {
        if (k < 1 || k > v - 1 || v > 62)
            throw InvalidParameter("johnson needs 1 <= k <= v-1 and v <= 62");
        check_cap(binomial(v, k), "J(" + to_string(v) + "," + to_string(k) + ")");
        auto sets = subsets(v, k);
        GraphBuilder b(sets.size());
        for (std::size_t i = 0 ; i < sets.size() ; ++i) {
            b.set_label(i, subset_label(sets[i]));
            for (std::size_t j = i + 1 ; j < sets.size() ; ++j)
                if (std::popcount(sets[i] & sets[j]) == k - 1)
                    b.add_edge(i, j);
        }
        return std::move(b).build();
    }

    auto rook_grid(int m, int n) -> Graph
    {
        if (m < 1 || n < 1)
            throw InvalidParameter("rook_grid needs m, n >= 1");
        check_cap(static_cast<long long>(m) * n, "rook grid");
        GraphBuilder b(m * n);
        for (int u = 0 ; u < m * n ; ++u) {
            b.set_label(u, to_string(u / n) + "," + to_string(u % n));
            for (int v = u + 1 ; v < m * n ; ++v)
                if ((u / n == v / n) != (u % n == v % n))
                    b.add_edge(u, v);
        }
        return std::move(b).build();
    }

    auto rook_complement(int n) -> Graph
    {
        return complement(rook_grid(n, n));
    }

    auto halved_antipodal_johnson(int v, int k) -> Graph
    {
        if (k < 2 || v != 2 * k || v > 62)
            throw InvalidParameter("halved_antipodal_johnson needs v = 2k with k >= 2");
        check_cap(binomial(v, k) / 2, "halved J(" + to_string(v) + "," + to_string(k) + ")");
        vector<uint64_t> reps;
        for (auto s : subsets(v, k))
            if (s & 1)
                reps.push_back(s);
        GraphBuilder b(reps.size());
        for (std::size_t i = 0 ; i < reps.size() ; ++i) {
            b.set_label(i, subset_label(reps[i]));
            for (std::size_t j = i + 1 ; j < reps.size() ; ++j) {
                int meet = std::popcount(reps[i] & reps[j]);
                if (meet == k - 1 || meet == 1)
                    b.add_edge(i, j);
            }
        }
        return std::move(b).build();
    }

    auto complete_graph(int n) -> Graph
    {
        GraphBuilder b(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                b.add_edge(u, v);
        return std::move(b).build();
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw InvalidParameter("cycle needs at least 3 vertices");
        GraphBuilder b(n);
        for (int u = 0 ; u < n ; ++u)
            b.add_edge(u, (u + 1) % n);
        return std::move(b).build();
    }

    auto path_graph(int n) -> Graph
    {
        GraphBuilder b(n);
        for (int u = 0 ; u + 1 < n ; ++u)
            b.add_edge(u, u + 1);
        return std::move(b).build();
    }

    auto petersen_graph() -> Graph
    {
        // Kneser graph K(5,2): disjoint pairs adjacent
        auto sets = subsets(5, 2);
        GraphBuilder b(sets.size());
        for (std::size_t i = 0 ; i < sets.size() ; ++i)
            for (std::size_t j = i + 1 ; j < sets.size() ; ++j)
                if ((sets[i] & sets[j]) == 0)
                    b.add_edge(i, j);
        return std::move(b).build();
    }
}

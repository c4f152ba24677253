#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gridlocus
{
    using Vertex = int;

    /// Fixed-width bit vector over vertex indices.
    class VertexSet
    {
        public:
            VertexSet() = default;
            explicit VertexSet(int size) : _size(size), _words((size + 63) / 64, 0) {}

            [[nodiscard]] auto size() const -> int { return _size; }
            [[nodiscard]] auto words() const -> std::span<const std::uint64_t> { return _words; }
            [[nodiscard]] auto words() -> std::span<std::uint64_t> { return _words; }

            auto set(int v) -> void { _words[v >> 6] |= std::uint64_t{ 1 } << (v & 63); }
            auto reset(int v) -> void { _words[v >> 6] &= ~(std::uint64_t{ 1 } << (v & 63)); }
            [[nodiscard]] auto test(int v) const -> bool { return (_words[v >> 6] >> (v & 63)) & 1; }

            [[nodiscard]] auto count() const -> int
            {
                int c = 0;
                for (auto w : _words)
                    c += std::popcount(w);
                return c;
            }
            [[nodiscard]] auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto operator&=(const VertexSet & o) -> VertexSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= o._words[i];
                return *this;
            }
            auto operator|=(const VertexSet & o) -> VertexSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= o._words[i];
                return *this;
            }
            auto subtract(const VertexSet & o) -> VertexSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~o._words[i];
                return *this;
            }

            /// Members in increasing order.
            [[nodiscard]] auto members() const -> std::vector<int>;

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i) {
                    auto w = _words[i];
                    while (w) {
                        int b = std::countr_zero(w);
                        f(static_cast<int>(i * 64 + b));
                        w &= w - 1;
                    }
                }
            }

            auto operator==(const VertexSet &) const -> bool = default;

        private:
            int _size = 0;
            std::vector<std::uint64_t> _words;
    };

    [[nodiscard]] inline auto popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) -> int
    {
        int c = 0;
        for (std::size_t i = 0 ; i < a.size() ; ++i)
            c += std::popcount(a[i] & b[i]);
        return c;
    }

    class GraphBuilder;

    /// Finite simple undirected graph; adjacency rows are bit vectors. Immutable once built.
    class Graph
    {
        public:
            Graph() = default;

            [[nodiscard]] auto order() const -> int { return _n; }
            [[nodiscard]] auto row(Vertex v) const -> std::span<const std::uint64_t>
            {
                return { _bits.data() + static_cast<std::size_t>(v) * _words, static_cast<std::size_t>(_words) };
            }
            [[nodiscard]] auto row_set(Vertex v) const -> VertexSet;
            [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool
            {
                return (_bits[static_cast<std::size_t>(u) * _words + (v >> 6)] >> (v & 63)) & 1;
            }
            [[nodiscard]] auto degree(Vertex v) const -> int { return _degrees[v]; }
            [[nodiscard]] auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _adj[v]; }
            [[nodiscard]] auto edge_count() const -> long long;
            [[nodiscard]] auto common_neighbour_count(Vertex u, Vertex v) const -> int { return popcount_and(row(u), row(v)); }

            [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return _labels; }
            [[nodiscard]] auto label(Vertex v) const -> std::string;

            /// Common degree, or nullopt when not regular (or empty).
            [[nodiscard]] auto regular_degree() const -> std::optional<int>;

            auto operator==(const Graph & o) const -> bool { return _n == o._n && _bits == o._bits; }

        private:
            friend class GraphBuilder;

            int _n = 0;
            int _words = 0;
            std::vector<std::uint64_t> _bits;
            std::vector<int> _degrees;
            std::vector<std::vector<Vertex>> _adj;
            std::vector<std::string> _labels;
    };

    class GraphBuilder
    {
        public:
            explicit GraphBuilder(int n);

            /// Adds {u, v}; self-loops are rejected with DomainError, repeats ignored.
            auto add_edge(Vertex u, Vertex v) -> void;
            auto set_label(Vertex v, std::string label) -> void;
            [[nodiscard]] auto has_edge(Vertex u, Vertex v) const -> bool;
            [[nodiscard]] auto build() && -> Graph;

        private:
            int _n, _words;
            std::vector<std::uint64_t> _bits;
            std::vector<std::string> _labels;
    };

    /// Multiset of cycle lengths, kept sorted ascending.
    struct CycleProfile
    {
        std::vector<int> lengths;

        auto operator<=>(const CycleProfile &) const = default;

        [[nodiscard]] auto cycle_count() const -> int { return static_cast<int>(lengths.size()); }
        [[nodiscard]] auto total() const -> int;
        /// d equal cycles, or nullopt if lengths differ or empty.
        [[nodiscard]] auto uniform_length() const -> std::optional<int>;
        [[nodiscard]] auto to_string() const -> std::string;
    };

    [[nodiscard]] auto make_profile(std::vector<int> lengths) -> CycleProfile;

    inline constexpr int unreachable = -1;

    struct DistanceProfile
    {
        Vertex source = 0;
        std::vector<int> dist;
        std::vector<long long> k;          // k[i] = |Gamma_i(x)|
        int eccentricity = 0;
        std::map<int, long long> k2_by_mu; // c_2 value -> number of z in Gamma_2(x); filled on request
        std::optional<long long> ell_x;    // k_{2,2(n-1)}(x) / n when requested and integral
    };

    [[nodiscard]] auto bfs_profile(const Graph & g, Vertex x) -> DistanceProfile;
    /// Also fills k2_by_mu and, using the local grid size n, ell_x.
    [[nodiscard]] auto bfs_profile(const Graph & g, Vertex x, int grid_n) -> DistanceProfile;

    /// Row-major all-pairs distances, unreachable = 255.
    class DistanceMatrix
    {
        public:
            explicit DistanceMatrix(const Graph & g);

            [[nodiscard]] auto operator()(Vertex u, Vertex v) const -> int
            {
                return _d[static_cast<std::size_t>(u) * _n + v];
            }
            [[nodiscard]] auto connected() const -> bool { return _connected; }
            [[nodiscard]] auto diameter() const -> int { return _diameter; }
            [[nodiscard]] auto eccentricity(Vertex v) const -> int { return _ecc[v]; }
            /// Gamma_i(x) as a bit vector.
            [[nodiscard]] auto sphere(Vertex x, int i) const -> VertexSet;

            static constexpr int unreachable = 255;

        private:
            int _n;
            std::vector<std::uint8_t> _d;
            std::vector<int> _ecc;
            bool _connected = true;
            int _diameter = 0;
    };

    [[nodiscard]] auto is_connected(const Graph & g) -> bool;

    /// Induced subgraph; vertex i of the result is S[i]. Labels carried over.
    [[nodiscard]] auto induced(const Graph & g, std::span<const Vertex> vertices) -> Graph;
    [[nodiscard]] auto common_neighbours(const Graph & g, Vertex x, Vertex y) -> std::vector<Vertex>;

    /// Every maximal clique once, each sorted, list sorted lexicographically.
    [[nodiscard]] auto maximal_cliques(const Graph & g) -> std::vector<std::vector<Vertex>>;

    /// Row/column coordinates witnessing g = K_m x K_n (row in [0,m), column in [0,n)).
    struct GridLabelling
    {
        std::vector<int> row, column;
    };

    [[nodiscard]] auto rook_grid_labelling(const Graph & g, int m, int n) -> std::optional<GridLabelling>;
    [[nodiscard]] auto is_rook_grid(const Graph & g, int m, int n) -> bool;

    inline constexpr int default_isomorphism_cap = 512;

    [[nodiscard]] auto are_isomorphic(const Graph & a, const Graph & b, int cap = default_isomorphism_cap) -> bool;

    /// Cycle lengths of a 2-regular graph; DomainError otherwise.
    [[nodiscard]] auto cycle_decomposition(const Graph & g) -> CycleProfile;

    [[nodiscard]] auto relabel(const Graph & g, std::span<const Vertex> permutation) -> Graph;
    [[nodiscard]] auto complement(const Graph & g) -> Graph;
}

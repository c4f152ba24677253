#pragma once

#include <gridlocus/field.hh>
#include <gridlocus/graph.hh>
#include <gridlocus/local_grid.hh>

#include <map>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

namespace gridlocus
{
    struct MuGraph
    {
        Vertex x = 0, y = 0;
        std::vector<Vertex> vertices;      // Gamma(x) n Gamma(y), increasing
        Graph graph;                       // induced on vertices, in that order
        CycleProfile profile;
    };

    /// Throws DomainError unless d(x, y) = 2 and the mu-graph is 2-regular.
    [[nodiscard]] auto mu_graph(const Graph & g, Vertex x, Vertex y) -> MuGraph;

    struct MuCensus
    {
        std::map<CycleProfile, long long> counts;     // over unordered distance-2 pairs
        long long pairs = 0;
        /// Every vertex sees the same profile histogram over its own distance-2 set.
        bool per_vertex_uniform = true;
        std::vector<Violation> violations;
    };

    /// Exact census over all distance-2 pairs, checking even cycles of length >= 4, sum of
    /// half-lengths <= n, and no two mu-edges on one n-clique of either neighbourhood.
    /// jobs > 1 shards the source vertices over threads; the result does not depend on it.
    [[nodiscard]] auto mu_census(const LocalGrid & lg, int jobs = 1) -> MuCensus;

    [[nodiscard]] auto to_json(const MuCensus & c) -> nlohmann::json;

    struct DivisorProfileResult
    {
        bool pass = false;
        std::set<long long> d_seen;
        std::set<long long> d_expected;                 // odd divisors of n - 1
        MuCensus census;
        std::vector<std::string> problems;
    };

    /// g must be build_gamma(ctx); throws DomainError when its order does not match.
    [[nodiscard]] auto divisor_profile_check(const Graph & g, const FieldContext & ctx, int jobs = 1) -> DivisorProfileResult;

    struct K2Record
    {
        Vertex x = 0;
        long long k2 = 0, k3 = 0;
        long long k2_short = 0;            // k_{2,2(n-1)}(x)
        long long k2_long = 0;             // k_{2,2n}(x)
        std::optional<long long> ell;
    };

    struct K2Audit
    {
        std::vector<K2Record> records;     // one per vertex
        std::vector<Violation> violations;
    };

    /// Needs every mu-graph to have order at least 2(n-1); throws DomainError otherwise.
    [[nodiscard]] auto k2_identities_audit(const AuditContext & ctx) -> K2Audit;
    [[nodiscard]] auto to_json(const K2Record & r) -> nlohmann::json;
}

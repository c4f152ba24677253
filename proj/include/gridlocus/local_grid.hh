#pragma once

#include <gridlocus/graph.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gridlocus
{
    /// One failed check. `rule` states the property that failed in words.
    struct Violation
    {
        std::string check;
        std::string rule;
        std::vector<Vertex> witnesses;
        std::string detail;
    };

    [[nodiscard]] auto to_json(const Violation & v) -> nlohmann::json;
    [[nodiscard]] auto to_json(const std::vector<Violation> & vs) -> nlohmann::json;

    struct LocalGridDetection
    {
        bool ok = false;
        int m = 0, n = 0;                  // m <= n when ok
        std::optional<Vertex> witness;     // first vertex whose neighbourhood fails
    };

    /// Throws DomainError on a disconnected or empty graph.
    [[nodiscard]] auto detect_locally_grid(const Graph & g) -> LocalGridDetection;

    /**
     * Row and column coordinates of every neighbourhood of a locally n x n grid
     * graph. row(x, v) is the row of v inside [Gamma(x)], or -1 if v is not a
     * neighbour of x. The (n+1)-cliques through x are x plus a row or x plus a
     * column of [Gamma(x)].
     */
    class LocalGrid
    {
        public:
            /// Throws DomainError if g is not locally n x n.
            LocalGrid(const Graph & g, int n);

            [[nodiscard]] auto graph() const -> const Graph & { return *_g; }
            [[nodiscard]] auto n() const -> int { return _n; }
            [[nodiscard]] auto row(Vertex x, Vertex v) const -> int { return decode(_row[index(x, v)]); }
            [[nodiscard]] auto column(Vertex x, Vertex v) const -> int { return decode(_col[index(x, v)]); }

            /// Id in [0, 2n) of the n-clique of [Gamma(x)] containing the edge {u, v}
            /// (rows first), or -1 if {u, v} is not an edge of [Gamma(x)].
            [[nodiscard]] auto line_of_edge(Vertex x, Vertex u, Vertex v) const -> int;

            /// All maximal cliques, each sorted, the list sorted.
            [[nodiscard]] auto maximal_cliques() const -> std::vector<std::vector<Vertex>>;

        private:
            const Graph * _g;
            int _n;
            std::vector<unsigned char> _row, _col;

            [[nodiscard]] auto index(Vertex x, Vertex v) const -> std::size_t
            {
                return static_cast<std::size_t>(x) * _g->order() + v;
            }
            [[nodiscard]] static auto decode(unsigned char c) -> int { return c == 255 ? -1 : c; }
    };

    struct StructuralCensus
    {
        int n = 0;
        long long vertices = 0, edges = 0, cliques = 0, triangles = 0;
        std::vector<Violation> violations;
    };

    [[nodiscard]] auto structural_census(const LocalGrid & lg) -> StructuralCensus;
    [[nodiscard]] auto to_json(const StructuralCensus & c) -> nlohmann::json;

    /// Shared precomputation for the audits: distances, cliques, and clique membership.
    class AuditContext
    {
        public:
            explicit AuditContext(const LocalGrid & lg);

            [[nodiscard]] auto local() const -> const LocalGrid & { return *_lg; }
            [[nodiscard]] auto graph() const -> const Graph & { return _lg->graph(); }
            [[nodiscard]] auto n() const -> int { return _lg->n(); }
            [[nodiscard]] auto distances() const -> const DistanceMatrix & { return _dist; }
            [[nodiscard]] auto cliques() const -> const std::vector<std::vector<Vertex>> & { return _cliques; }
            [[nodiscard]] auto cliques_of(Vertex v) const -> const std::vector<int> & { return _cliques_of[v]; }
            [[nodiscard]] auto c2(Vertex x, Vertex y) const -> int { return graph().common_neighbour_count(x, y); }
            /// Least c2 over all distance-2 pairs, or nullopt if there are none.
            [[nodiscard]] auto min_c2() const -> std::optional<int> { return _min_c2; }
            [[nodiscard]] auto max_c2() const -> std::optional<int> { return _max_c2; }
            /// min over v in C of d(x, v).
            [[nodiscard]] auto clique_distance(Vertex x, int clique) const -> int;

        private:
            const LocalGrid * _lg;
            DistanceMatrix _dist;
            std::vector<std::vector<Vertex>> _cliques;
            std::vector<std::vector<int>> _cliques_of;
            std::optional<int> _min_c2, _max_c2;
    };

    [[nodiscard]] auto clique_distance_audit(const AuditContext & ctx) -> std::vector<Violation>;

    struct ParameterAudit
    {
        std::optional<int> m_star;             // min c2 / 2
        std::vector<Violation> violations;
        std::vector<std::string> notes;        // hypotheses that did not hold, so checks were skipped
    };

    [[nodiscard]] auto parameter_bounds_audit(const AuditContext & ctx) -> ParameterAudit;

    struct MuCliqueReport
    {
        Vertex x = 0;
        int clique = 0;
        int clique_distance = 0;
        std::vector<Vertex> S, T;
        std::vector<std::pair<Vertex, Vertex>> matched_edges;
        long long c2_sum = 0;
    };

    struct MuCliqueAudit
    {
        std::vector<MuCliqueReport> reports;
        std::vector<Violation> violations;
    };

    /// Throws DomainError when n < 3. Reports are kept only when keep_reports is set.
    [[nodiscard]] auto mu_clique_matching_audit(const AuditContext & ctx, bool keep_reports = false) -> MuCliqueAudit;

    /// Throws DomainError, naming a pair, if some mu-graph has order below 2(n-1).
    [[nodiscard]] auto parity_audit(const AuditContext & ctx) -> std::vector<Violation>;

    enum class BoundsRegime { mu_at_least_n_minus_1, mu_at_least_2n_minus_2, mu_equal_2n_minus_2 };

    [[nodiscard]] auto parse_regime(const std::string & s) -> BoundsRegime;
    [[nodiscard]] auto regime_name(BoundsRegime r) -> std::string;

    struct BoundsReport
    {
        int n = 0;
        BoundsRegime regime = BoundsRegime::mu_at_least_n_minus_1;
        long long order_bound = 0;
        int diam_bound = 0;
        double f_n = 0;
        double f_lower = 0, f_upper = 0;     // outward-rounded enclosure of f(n)
        bool f_brackets_integer = false;     // enclosure contains an integer
        bool f_near_integer = false;         // within 1e-12 of an integer
        bool sandwich_holds = false;         // 3/4 (n-1) ln(n-1) < f(n) < 3/4 n ln n
    };

    /// Throws InvalidParameter when n < 2.
    [[nodiscard]] auto theorem_bounds(int n, BoundsRegime regime) -> BoundsReport;
    [[nodiscard]] auto to_json(const BoundsReport & r) -> nlohmann::json;

    struct FiveByFiveRecord
    {
        long long vertices = 0;
        bool order_at_most_300 = false;
        bool order_divisible_by_6 = false;
        bool all_mu_at_least_8 = false;
        std::optional<int> branch;                      // 72 or 78 when all mu >= 8
        std::vector<Violation> violations;
    };

    /// Throws DomainError if the graph is not connected and locally 5 x 5.
    [[nodiscard]] auto five_by_five_audit(const AuditContext & ctx) -> FiveByFiveRecord;
    [[nodiscard]] auto to_json(const FiveByFiveRecord & r) -> nlohmann::json;
}

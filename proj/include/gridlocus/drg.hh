#pragma once

#include <gridlocus/graph.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gridlocus
{
    struct IntersectionArray
    {
        int diameter = 0;
        std::vector<long long> b;    // b_0 .. b_{D-1}
        std::vector<long long> c;    // c_1 .. c_D

        auto operator==(const IntersectionArray &) const -> bool = default;
        [[nodiscard]] auto to_string() const -> std::string;
        /// k_i from the recurrence k_{i+1} c_{i+1} = k_i b_i.
        [[nodiscard]] auto class_sizes() const -> std::vector<long long>;
    };

    [[nodiscard]] auto make_intersection_array(std::vector<long long> b, std::vector<long long> c) -> IntersectionArray;

    struct IntersectionResult
    {
        std::optional<IntersectionArray> array;
        std::optional<std::pair<Vertex, Vertex>> witness;   // first pair whose numbers differ
        std::string reason;
    };

    /// Throws DomainError on a disconnected graph. A non-regular graph fails with a witness.
    [[nodiscard]] auto intersection_numbers(const Graph & g) -> IntersectionResult;

    struct SrgParams
    {
        long long N = 0, k = 0, lambda = 0, nu = 0;

        auto operator==(const SrgParams &) const -> bool = default;
        [[nodiscard]] auto to_string() const -> std::string;
    };

    struct SrgResult
    {
        std::optional<SrgParams> params;
        std::optional<std::pair<Vertex, Vertex>> witness;
        std::string reason;
    };

    /// Throws DomainError unless g is connected with diameter 2.
    [[nodiscard]] auto srg_check(const Graph & g) -> SrgResult;

    struct SrgFeasibility
    {
        bool feasible = false;
        bool conference = false;
        /// Eigenvalue multiplicities, doubled so that half-integers stay exact.
        std::optional<std::pair<long long, long long>> twice_multiplicities;
        std::string detail;
    };

    /// Throws InvalidParameter if k(k - lambda - 1) != (N - k - 1) nu.
    [[nodiscard]] auto srg_feasibility(const SrgParams & p) -> SrgFeasibility;

    struct AntipodalResult
    {
        std::optional<std::vector<std::vector<Vertex>>> blocks;
        std::string reason;
    };

    [[nodiscard]] auto antipodal_partition(const Graph & g) -> AntipodalResult;

    /// Throws DomainError unless the blocks partition V(g).
    [[nodiscard]] auto quotient_graph(const Graph & g, const std::vector<std::vector<Vertex>> & blocks) -> Graph;

    /// One class of the distance partition around x; Gamma_2 is split by c_2 value.
    struct DiagramClass
    {
        int distance = 0;
        std::optional<int> c2;                    // set only for distance-2 classes
        std::vector<Vertex> members;
    };

    struct DistanceDiagram
    {
        Vertex source = 0;
        std::vector<DiagramClass> classes;
        /// edges[i][j]: number of neighbours in class j of each member of class i,
        /// or nullopt when members disagree.
        std::vector<std::vector<std::optional<int>>> edges;
        bool regular = true;

        [[nodiscard]] auto class_sizes() const -> std::vector<long long>;
    };

    /// Throws DomainError on a disconnected graph.
    [[nodiscard]] auto distance_diagram(const Graph & g, Vertex x) -> DistanceDiagram;

    [[nodiscard]] auto to_json(const IntersectionArray & a) -> nlohmann::json;
    [[nodiscard]] auto to_json(const SrgParams & p) -> nlohmann::json;
    [[nodiscard]] auto to_json(const DistanceDiagram & d) -> nlohmann::json;
}

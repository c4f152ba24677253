#pragma once

#include <gridlocus/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gridlocus
{
    /// Cells of K_n x K_n are numbered r * n + c; a cell set is a 64-bit mask, so n <= 8.
    using CellMask = std::uint64_t;

    inline constexpr int max_host_n = 8;

    enum class CandidateKind
    {
        single_cycle,       // one cycle of length 2(n-1)
        two_cycles,         // two cycles of length n-1
        even_union          // any union of even cycles of length >= 4 on 2(n-1) cells
    };

    [[nodiscard]] auto parse_candidate_kind(const std::string & s) -> CandidateKind;
    [[nodiscard]] auto candidate_kind_name(CandidateKind k) -> std::string;

    struct MuCandidate
    {
        int n = 0;
        CellMask cells = 0;
        CycleProfile profile;

        auto operator==(const MuCandidate &) const -> bool = default;
    };

    /// Cycle profile of the subgraph of K_n x K_n induced on cells, or nullopt if it is not 2-regular.
    [[nodiscard]] auto induced_cycle_profile(int n, CellMask cells) -> std::optional<CycleProfile>;

    /// Structured enumeration: rows and columns each hold 0 or 2 cells. Sorted by mask.
    /// Throws InvalidParameter for n < 3, CapacityError for n > max_host_n.
    [[nodiscard]] auto enumerate_candidates(int n, CandidateKind kind) -> std::vector<MuCandidate>;
    /// Throws InvalidParameter unless the profile covers exactly 2(n-1) cells.
    [[nodiscard]] auto enumerate_candidates(int n, const CycleProfile & profile) -> std::vector<MuCandidate>;

    /// Every 2(n-1)-subset tested directly. Throws CapacityError for n > 5.
    [[nodiscard]] auto brute_force_candidates(int n, CandidateKind kind) -> std::vector<MuCandidate>;

    struct SampleAudit
    {
        long long samples = 0, hits = 0, missing = 0;
    };

    /// Draws random 2(n-1)-subsets; every one that passes the direct test must be in `candidates`.
    [[nodiscard]] auto sampled_enumeration_audit(int n, CandidateKind kind, const std::vector<MuCandidate> & candidates,
            long long samples, std::uint64_t rng_seed) -> SampleAudit;

    /// Disjoint, or meeting in exactly two cells joined by a host edge. DomainError for different hosts.
    [[nodiscard]] auto compatible(const MuCandidate & a, const MuCandidate & b) -> bool;

    /// Every cell of the union lies in at most two members.
    [[nodiscard]] auto at_most_two_cover(const std::vector<MuCandidate> & sets) -> bool;
    /// Every cell of the union lies in exactly two members, members are pairwise compatible,
    /// and the shared edges form a perfect matching of the union.
    [[nodiscard]] auto full_mu_clique_conditions(const std::vector<MuCandidate> & sets) -> bool;

    /// The fixed 8-cycle and two-4-cycle seeds, generalized to n: cycles along the diagonal.
    [[nodiscard]] auto canonical_seed(int n, CandidateKind kind) -> MuCandidate;

    struct CompatibilitySystem
    {
        int n = 0;
        std::vector<MuCandidate> candidates;
        int seed = 0;                                 // index into candidates
    };

    /// All even-cycle-union candidates of the host, with the seed located among them.
    [[nodiscard]] auto make_system(int n, const MuCandidate & seed) -> CompatibilitySystem;

    struct SearchResult
    {
        std::vector<long long> level_counts;          // [k] = number of k-sets containing the seed
        int max_level = 0;
        std::vector<std::vector<int>> sets_at_target; // candidate indices, seed first
        long long full_conditions_at_level5 = 0;      // level-5 sets meeting conditions (1), (2), (3)
        long long nodes = 0;
    };

    /// Depth-first extension of the seed under (1') and (2). node_budget 0 means unlimited;
    /// exceeding it throws CapacityError. jobs > 1 shards the first branching level.
    [[nodiscard]] auto extend_search(const CompatibilitySystem & system, int target, long long node_budget = 0,
            int jobs = 1) -> SearchResult;

    [[nodiscard]] auto candidate_checksum(const std::vector<MuCandidate> & candidates) -> std::string;

    struct SeedRun
    {
        std::string name;
        MuCandidate seed;
        long long candidate_count = 0;
        std::string checksum;
        SearchResult search;
        double seconds = 0;
    };

    struct CliqueScan
    {
        int max_clique_in_gamma2 = 0;
        std::optional<std::pair<Vertex, std::vector<Vertex>>> witness;   // x and a k-clique inside Gamma_2(x)
    };

    /// Largest clique inside any Gamma_2(x); witness set when one of size >= k exists.
    [[nodiscard]] auto gamma2_clique_scan(const Graph & g, int k) -> CliqueScan;

    struct Certificate
    {
        int n = 5;
        int target = 6;
        std::vector<SeedRun> canonical;
        std::vector<SeedRun> random_seeds;
        std::optional<CliqueScan> direct_scan;
        bool ok = false;
        std::vector<std::string> problems;
    };

    /// Both canonical seeds, `random_per_kind` random alternate seeds per kind, and the
    /// direct clique scan over Gamma^(5).
    [[nodiscard]] auto lemma_no_6clique_certificate(int random_per_kind = 10, std::uint64_t rng_seed = 1,
            int jobs = 1, bool direct_scan = true) -> Certificate;

    [[nodiscard]] auto cells_json(int n, CellMask cells) -> nlohmann::json;
    [[nodiscard]] auto to_json(const SeedRun & r) -> nlohmann::json;
    [[nodiscard]] auto to_json(const Certificate & c) -> nlohmann::json;
}

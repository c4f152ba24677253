#include <doctest.h>

#include "oracles.hh"

#include <gridlocus/appendix.hh>
#include <gridlocus/errors.hh>
#include <gridlocus/symplectic.hh>

#include <bit>
#include <map>

using namespace gridlocus;

namespace
{
    auto cells_of(CellMask m) -> std::vector<int>
    {
        std::vector<int> out;
        for (int i = 0 ; i < 64 ; ++i)
            if (m >> i & 1)
                out.push_back(i);
        return out;
    }

    // every k-subset of n*n cells, tested with the oracle
    auto oracle_profile_counts(int n) -> std::map<std::vector<int>, long long>
    {
        int cells = n * n, k = 2 * (n - 1);
        std::map<std::vector<int>, long long> out;
        std::vector<int> pick(k);
        for (int i = 0 ; i < k ; ++i)
            pick[i] = i;
        while (true) {
            auto lengths = oracle::grid_cycle_lengths(n, pick);
            bool ok = ! lengths.empty();
            for (auto l : lengths)
                ok = ok && l >= 4 && l % 2 == 0;
            if (ok)
                ++out[lengths];
            int i = k - 1;
            while (i >= 0 && pick[i] == cells - k + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1 ; j < k ; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        return out;
    }

    auto oracle_compatible(int n, CellMask a, CellMask b) -> bool
    {
        auto shared = cells_of(a & b);
        if (shared.empty())
            return true;
        if (shared.size() != 2)
            return false;
        return shared[0] / n == shared[1] / n || shared[0] % n == shared[1] % n;
    }

    auto oracle_cover_ok(const std::vector<CellMask> & sets) -> bool
    {
        std::map<int, int> cover;
        for (auto s : sets)
            for (auto c : cells_of(s))
                if (++cover[c] > 2)
                    return false;
        return true;
    }
}

TEST_CASE("candidate counts on the 5 x 5 host")
{
    auto counts = oracle_profile_counts(5);
    CHECK(counts.size() == 2);
    CHECK(counts[std::vector<int>{ 8 }] == 1800);
    CHECK(counts[std::vector<int>{ 4, 4 }] == 450);

    CHECK(enumerate_candidates(5, CandidateKind::single_cycle).size() == 1800);
    CHECK(enumerate_candidates(5, CandidateKind::two_cycles).size() == 450);
    CHECK(enumerate_candidates(5, CandidateKind::even_union).size() == 2250);
    CHECK(enumerate_candidates(5, make_profile({ 4, 4 })).size() == 450);
    CHECK_THROWS_AS((void) enumerate_candidates(5, make_profile({ 4 })), InvalidParameter);
    CHECK_THROWS_AS((void) enumerate_candidates(2, CandidateKind::even_union), InvalidParameter);
    CHECK_THROWS_AS((void) enumerate_candidates(9, CandidateKind::even_union), CapacityError);
}

TEST_CASE("structured enumeration agrees with brute force")
{
    for (int n = 3 ; n <= 5 ; ++n)
        for (auto kind : { CandidateKind::single_cycle, CandidateKind::two_cycles, CandidateKind::even_union })
            CHECK(enumerate_candidates(n, kind) == brute_force_candidates(n, kind));
    CHECK(enumerate_candidates(3, CandidateKind::even_union).size() == 9);
    CHECK(brute_force_candidates(4, CandidateKind::two_cycles).empty());
    CHECK_THROWS_AS((void) brute_force_candidates(6, CandidateKind::even_union), CapacityError);

    for (int n = 3 ; n <= 4 ; ++n) {
        auto counts = oracle_profile_counts(n);
        long long total = 0;
        for (auto & [lengths, c] : counts)
            total += c;
        CHECK(static_cast<long long>(enumerate_candidates(n, CandidateKind::even_union).size()) == total);
    }
}

TEST_CASE("candidates are induced even cycle unions")
{
    for (auto & c : enumerate_candidates(5, CandidateKind::even_union)) {
        auto lengths = oracle::grid_cycle_lengths(5, cells_of(c.cells));
        CHECK(lengths == c.profile.lengths);
        CHECK(std::popcount(c.cells) == 8);
        CHECK(induced_cycle_profile(5, c.cells) == c.profile);
    }
    CHECK(induced_cycle_profile(5, 0b111) == make_profile({ 3 }));
    CHECK_FALSE(induced_cycle_profile(5, 0b11));
}

TEST_CASE("sampled enumeration audit")
{
    auto candidates = enumerate_candidates(6, CandidateKind::even_union);
    auto a = sampled_enumeration_audit(6, CandidateKind::even_union, candidates, 200000, 7);
    CHECK(a.samples == 200000);
    CHECK(a.missing == 0);
}

TEST_CASE("compatibility")
{
    auto seed8 = canonical_seed(5, CandidateKind::single_cycle);
    auto seed44 = canonical_seed(5, CandidateKind::two_cycles);
    CHECK(seed8.profile.lengths == std::vector<int>{ 8 });
    CHECK(seed44.profile.lengths == std::vector<int>{ 4, 4 });
    CHECK(compatible(seed8, seed8) == false);

    auto all = enumerate_candidates(5, CandidateKind::even_union);
    for (std::size_t i = 0 ; i < all.size() ; i += 3)
        CHECK(compatible(seed8, all[i]) == (all[i] != seed8 && oracle_compatible(5, seed8.cells, all[i].cells)));

    auto other = canonical_seed(4, CandidateKind::single_cycle);
    CHECK_THROWS_AS((void) compatible(seed8, other), DomainError);
}

TEST_CASE("search levels against a naive count")
{
    for (auto kind : { CandidateKind::single_cycle, CandidateKind::two_cycles }) {
        auto seed = canonical_seed(5, kind);
        auto sys = make_system(5, seed);
        auto res = extend_search(sys, 6);

        std::vector<CellMask> level2;
        for (auto & c : sys.candidates)
            if (c != seed && oracle_compatible(5, seed.cells, c.cells) && oracle_cover_ok({ seed.cells, c.cells }))
                level2.push_back(c.cells);
        long long level3 = 0;
        for (std::size_t i = 0 ; i < level2.size() ; ++i)
            for (std::size_t j = i + 1 ; j < level2.size() ; ++j)
                if (oracle_compatible(5, level2[i], level2[j]) && oracle_cover_ok({ seed.cells, level2[i], level2[j] }))
                    ++level3;

        REQUIRE(res.level_counts.size() >= 4);
        CHECK(res.level_counts[1] == 1);
        CHECK(res.level_counts[2] == static_cast<long long>(level2.size()));
        CHECK(res.level_counts[3] == level3);
        CHECK(res.max_level == 5);
        CHECK(res.sets_at_target.empty());
    }
}

TEST_CASE("frozen level counts")
{
    auto r8 = extend_search(make_system(5, canonical_seed(5, CandidateKind::single_cycle)), 6);
    CHECK(r8.level_counts == std::vector<long long>{ 0, 1, 153, 840, 296, 36, 0 });
    CHECK(r8.full_conditions_at_level5 == 20);

    auto r44 = extend_search(make_system(5, canonical_seed(5, CandidateKind::two_cycles)), 6);
    CHECK(r44.level_counts == std::vector<long long>{ 0, 1, 169, 1152, 368, 36, 0 });
    CHECK(r44.full_conditions_at_level5 == 20);

    auto r3 = extend_search(make_system(3, canonical_seed(3, CandidateKind::single_cycle)), 3);
    CHECK(r3.level_counts == std::vector<long long>{ 0, 1, 4, 2 });
    CHECK(r3.sets_at_target.size() == 2);
    for (auto & s : r3.sets_at_target) {
        std::vector<MuCandidate> sets;
        for (auto i : s)
            sets.push_back(make_system(3, canonical_seed(3, CandidateKind::single_cycle)).candidates[i]);
        CHECK(at_most_two_cover(sets));
    }
}

TEST_CASE("search results do not depend on jobs, budget is enforced")
{
    auto sys = make_system(5, canonical_seed(5, CandidateKind::single_cycle));
    auto one = extend_search(sys, 6, 0, 1);
    auto three = extend_search(sys, 6, 0, 3);
    CHECK(one.level_counts == three.level_counts);
    CHECK(one.full_conditions_at_level5 == three.full_conditions_at_level5);
    CHECK_THROWS_AS((void) extend_search(sys, 6, 10), CapacityError);
}

TEST_CASE("full mu-clique conditions")
{
    auto seed = canonical_seed(3, CandidateKind::single_cycle);
    CHECK(at_most_two_cover({ seed }));
    CHECK_FALSE(at_most_two_cover({ seed, seed, seed }));
    CHECK_FALSE(full_mu_clique_conditions({ seed }));
}

TEST_CASE("checksums are deterministic")
{
    auto a = enumerate_candidates(5, CandidateKind::even_union);
    auto b = enumerate_candidates(5, CandidateKind::even_union);
    CHECK(candidate_checksum(a) == candidate_checksum(b));
    b.pop_back();
    CHECK(candidate_checksum(a) != candidate_checksum(b));
}

TEST_CASE("certificate")
{
    auto cert = lemma_no_6clique_certificate(2, 3, 1, true);
    CHECK(cert.ok);
    CHECK(cert.problems.empty());
    CHECK(cert.canonical.size() == 2);
    CHECK(cert.random_seeds.size() == 4);
    REQUIRE(cert.direct_scan);
    CHECK(cert.direct_scan->max_clique_in_gamma2 == 5);
    for (auto & run : cert.canonical) {
        CHECK(run.candidate_count == 2250);
        CHECK(run.search.max_level == 5);
    }
    auto j = to_json(cert);
    CHECK(j.contains("canonical"));
}

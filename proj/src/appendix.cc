#include <gridlocus/appendix.hh>
#include <gridlocus/errors.hh>
#include <gridlocus/field.hh>
#include <gridlocus/symplectic.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <random>
#include <thread>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace gridlocus
{
    namespace
    {
        auto bit(int v) -> CellMask { return CellMask{ 1 } << v; }

        struct Lines
        {
            vector<CellMask> row, col;
        };

        auto host_lines(int n) -> Lines
        {
            Lines l{ vector<CellMask>(n, 0), vector<CellMask>(n, 0) };
            for (int r = 0 ; r < n ; ++r)
                for (int c = 0 ; c < n ; ++c) {
                    l.row[r] |= bit(r * n + c);
                    l.col[c] |= bit(r * n + c);
                }
            return l;
        }

        auto check_host(int n) -> void
        {
            if (n < 3)
                throw InvalidParameter("host K_n x K_n needs n >= 3, got " + to_string(n));
            if (n > max_host_n)
                throw CapacityError("host K_" + to_string(n) + " x K_" + to_string(n) + " exceeds the 64-cell limit");
        }

        auto kind_matches(int n, CandidateKind kind, const CycleProfile & p) -> bool
        {
            if (! std::all_of(p.lengths.begin(), p.lengths.end(), [] (int l) { return l >= 4 && l % 2 == 0; }))
                return false;
            switch (kind) {
                case CandidateKind::single_cycle:
                    return p.lengths == vector<int>{ 2 * (n - 1) };
                case CandidateKind::two_cycles:
                    return p.lengths == vector<int>{ n - 1, n - 1 };
                case CandidateKind::even_union:
                    return p.total() == 2 * (n - 1);
            }
            return false;
        }

        auto same_line(int n, int a, int b) -> bool
        {
            return a / n == b / n || a % n == b % n;
        }
    }

    auto parse_candidate_kind(const string & s) -> CandidateKind
    {
        if (s == "cyc8" || s == "single" || s == "single_cycle")
            return CandidateKind::single_cycle;
        if (s == "cyc44" || s == "two" || s == "two_cycles")
            return CandidateKind::two_cycles;
        if (s == "any" || s == "even_union")
            return CandidateKind::even_union;
        throw InvalidParameter("unknown candidate kind '" + s + "'");
    }

    auto candidate_kind_name(CandidateKind k) -> string
    {
        switch (k) {
            case CandidateKind::single_cycle: return "single_cycle";
            case CandidateKind::two_cycles: return "two_cycles";
            case CandidateKind::even_union: return "even_union";
        }
        return "?";
    }

    auto induced_cycle_profile(int n, CellMask cells) -> optional<CycleProfile>
    {
        auto lines = host_lines(n);
        auto nbrs = [&] (int v) { return (lines.row[v / n] | lines.col[v % n]) & cells & ~bit(v); };

        for (CellMask w = cells ; w ; w &= w - 1)
            if (std::popcount(nbrs(std::countr_zero(w))) != 2)
                return std::nullopt;

        vector<int> lengths;
        CellMask left = cells;
        while (left) {
            int start = std::countr_zero(left), prev = -1, cur = start, len = 0;
            do {
                left &= ~bit(cur);
                ++len;
                CellMask next = nbrs(cur);
                if (prev >= 0)
                    next &= ~bit(prev);
                int nxt = std::countr_zero(next);
                prev = cur;
                cur = nxt;
            } while (cur != start);
            lengths.push_back(len);
        }
        return make_profile(std::move(lengths));
    }

    auto enumerate_candidates(int n, const CycleProfile & profile) -> vector<MuCandidate>
    {
        check_host(n);
        if (profile.total() != 2 * (n - 1))
            throw InvalidParameter("profile " + profile.to_string() + " does not cover 2(n-1) = "
                    + to_string(2 * (n - 1)) + " cells");
        vector<MuCandidate> out;
        for (auto & c : enumerate_candidates(n, CandidateKind::even_union))
            if (c.profile == profile)
                out.push_back(c);
        return out;
    }

    auto enumerate_candidates(int n, CandidateKind kind) -> vector<MuCandidate>
    {
        check_host(n);
        vector<MuCandidate> out;
        vector<int> col_count(n, 0);
        int want = 2 * (n - 1);

        // each row takes 0 or 2 cells, each column ends with 0 or 2
        auto recurse = [&] (auto & self, int r, CellMask cells, int used) -> void {
            if (used == want) {
                if (std::all_of(col_count.begin(), col_count.end(), [] (int c) { return c == 0 || c == 2; })) {
                    auto p = induced_cycle_profile(n, cells);
                    if (p && kind_matches(n, kind, *p))
                        out.push_back({ n, cells, *p });
                }
                return;
            }
            if (r == n || used + 2 * (n - r) < want)
                return;
            self(self, r + 1, cells, used);
            for (int a = 0 ; a < n ; ++a) {
                if (col_count[a] == 2)
                    continue;
                for (int b = a + 1 ; b < n ; ++b) {
                    if (col_count[b] == 2)
                        continue;
                    ++col_count[a];
                    ++col_count[b];
                    self(self, r + 1, cells | bit(r * n + a) | bit(r * n + b), used + 2);
                    --col_count[a];
                    --col_count[b];
                }
            }
        };
        recurse(recurse, 0, 0, 0);
        std::sort(out.begin(), out.end(), [] (auto & x, auto & y) { return x.cells < y.cells; });
        return out;
    }

    auto brute_force_candidates(int n, CandidateKind kind) -> vector<MuCandidate>
    {
        check_host(n);
        if (n > 5)
            throw CapacityError("brute-force candidate enumeration is limited to n <= 5");
        int cells = n * n, k = 2 * (n - 1);
        vector<MuCandidate> out;
        CellMask limit = bit(cells);
        for (CellMask s = bit(k) - 1 ; s < limit ; ) {
            auto p = induced_cycle_profile(n, s);
            if (p && kind_matches(n, kind, *p))
                out.push_back({ n, s, *p });
            CellMask c = s & -s, r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
        return out;
    }

    auto sampled_enumeration_audit(int n, CandidateKind kind, const vector<MuCandidate> & candidates,
            long long samples, std::uint64_t rng_seed) -> SampleAudit
    {
        check_host(n);
        vector<CellMask> sorted;
        for (auto & c : candidates)
            sorted.push_back(c.cells);
        std::sort(sorted.begin(), sorted.end());

        std::mt19937_64 rng(rng_seed);
        vector<int> cells(n * n);
        for (int i = 0 ; i < n * n ; ++i)
            cells[i] = i;

        SampleAudit a;
        a.samples = samples;
        for (long long i = 0 ; i < samples ; ++i) {
            // bias towards hits: half the draws pick 2 cells from each of n-1 random rows
            CellMask s = 0;
            if (i % 2 == 0) {
                std::shuffle(cells.begin(), cells.end(), rng);
                for (int j = 0 ; j < 2 * (n - 1) ; ++j)
                    s |= bit(cells[j]);
            }
            else {
                vector<int> rows(n);
                for (int j = 0 ; j < n ; ++j)
                    rows[j] = j;
                std::shuffle(rows.begin(), rows.end(), rng);
                for (int j = 0 ; j < n - 1 ; ++j) {
                    vector<int> cols(n);
                    for (int c = 0 ; c < n ; ++c)
                        cols[c] = c;
                    std::shuffle(cols.begin(), cols.end(), rng);
                    s |= bit(rows[j] * n + cols[0]) | bit(rows[j] * n + cols[1]);
                }
            }
            auto p = induced_cycle_profile(n, s);
            if (p && kind_matches(n, kind, *p)) {
                ++a.hits;
                if (! std::binary_search(sorted.begin(), sorted.end(), s))
                    ++a.missing;
            }
        }
        return a;
    }

    auto compatible(const MuCandidate & a, const MuCandidate & b) -> bool
    {
        if (a.n != b.n)
            throw DomainError("candidates live on different hosts");
        CellMask m = a.cells & b.cells;
        if (m == 0)
            return true;
        if (std::popcount(m) != 2)
            return false;
        int u = std::countr_zero(m), v = std::countr_zero(m & (m - 1));
        return same_line(a.n, u, v);
    }

    auto at_most_two_cover(const vector<MuCandidate> & sets) -> bool
    {
        CellMask once = 0, twice = 0;
        for (auto & s : sets) {
            if (twice & s.cells)
                return false;
            twice |= once & s.cells;
            once |= s.cells;
        }
        return true;
    }

    auto full_mu_clique_conditions(const vector<MuCandidate> & sets) -> bool
    {
        CellMask once = 0, twice = 0;
        for (auto & s : sets) {
            if (twice & s.cells)
                return false;
            twice |= once & s.cells;
            once |= s.cells;
        }
        if (once != twice)
            return false;

        CellMask matched = 0;
        for (std::size_t i = 0 ; i < sets.size() ; ++i)
            for (std::size_t j = i + 1 ; j < sets.size() ; ++j) {
                if (! compatible(sets[i], sets[j]))
                    return false;
                CellMask m = sets[i].cells & sets[j].cells;
                if (m == 0)
                    continue;
                if (matched & m)
                    return false;
                matched |= m;
            }
        return matched == once;
    }

    auto canonical_seed(int n, CandidateKind kind) -> MuCandidate
    {
        check_host(n);
        CellMask cells = 0;
        auto diagonal_cycle = [&] (int offset, int h) {
            for (int i = 0 ; i < h ; ++i) {
                cells |= bit((offset + i) * n + offset + i);
                cells |= bit((offset + i) * n + offset + (i + 1) % h);
            }
        };
        switch (kind) {
            case CandidateKind::single_cycle:
                diagonal_cycle(0, n - 1);
                break;
            case CandidateKind::two_cycles:
                if ((n - 1) % 2 != 0 || n - 1 < 4)
                    throw InvalidParameter("two cycles of length n-1 need n-1 even and at least 4");
                diagonal_cycle(0, (n - 1) / 2);
                diagonal_cycle((n - 1) / 2, (n - 1) / 2);
                break;
            case CandidateKind::even_union:
                throw InvalidParameter("no canonical seed for the general kind");
        }
        return { n, cells, *induced_cycle_profile(n, cells) };
    }

    auto make_system(int n, const MuCandidate & seed) -> CompatibilitySystem
    {
        CompatibilitySystem s;
        s.n = n;
        s.candidates = enumerate_candidates(n, CandidateKind::even_union);
        auto it = std::find(s.candidates.begin(), s.candidates.end(), seed);
        if (it == s.candidates.end())
            throw InvalidParameter("seed is not a mu-candidate of the host");
        s.seed = it - s.candidates.begin();
        return s;
    }

    namespace
    {
        using Bits = vector<std::uint64_t>;

        struct Searcher
        {
            const CompatibilitySystem & sys;
            const vector<Bits> & compat;
            int target;
            long long budget;
            std::atomic<long long> & nodes;

            vector<long long> counts;
            vector<vector<int>> at_target;
            long long full5 = 0;
            vector<int> chosen;

            auto visit(const Bits & allowed, CellMask once, CellMask twice) -> void
            {
                int level = chosen.size();
                ++counts[level];
                if (budget && nodes.fetch_add(1) + 1 > budget)
                    throw CapacityError("node budget of " + to_string(budget) + " exceeded");
                if (level == 5) {
                    vector<MuCandidate> sets;
                    for (auto i : chosen)
                        sets.push_back(sys.candidates[i]);
                    if (full_mu_clique_conditions(sets))
                        ++full5;
                }
                if (level == target) {
                    at_target.push_back(chosen);
                    return;
                }
                int last = level > 1 ? chosen.back() : -1;
                for (std::size_t w = 0 ; w < allowed.size() ; ++w)
                    for (auto word = allowed[w] ; word ; word &= word - 1) {
                        int z = w * 64 + std::countr_zero(word);
                        if (z <= last)
                            continue;
                        descend(allowed, once, twice, z);
                    }
            }

            auto descend(const Bits & allowed, CellMask once, CellMask twice, int z) -> void
            {
                CellMask cz = sys.candidates[z].cells;
                if (cz & twice)
                    return;
                Bits next(allowed.size());
                for (std::size_t i = 0 ; i < next.size() ; ++i)
                    next[i] = allowed[i] & compat[z][i];
                chosen.push_back(z);
                visit(next, once | cz, twice | (once & cz));
                chosen.pop_back();
            }
        };
    }

    auto extend_search(const CompatibilitySystem & sys, int target, long long node_budget, int jobs) -> SearchResult
    {
        if (target < 1)
            throw InvalidParameter("target size must be at least 1");
        int C = sys.candidates.size();
        int W = (C + 63) / 64;
        vector<Bits> compat(C, Bits(W, 0));
        for (int i = 0 ; i < C ; ++i)
            for (int j = i + 1 ; j < C ; ++j)
                if (compatible(sys.candidates[i], sys.candidates[j])) {
                    compat[i][j / 64] |= std::uint64_t{ 1 } << (j % 64);
                    compat[j][i / 64] |= std::uint64_t{ 1 } << (i % 64);
                }

        Bits root = compat[sys.seed];
        CellMask seed_cells = sys.candidates[sys.seed].cells;
        vector<int> first;
        for (int z = 0 ; z < C ; ++z)
            if ((root[z / 64] >> (z % 64)) & 1)
                first.push_back(z);

        std::atomic<long long> nodes{ 0 };
        jobs = std::max(1, jobs);
        vector<Searcher> workers;
        for (int j = 0 ; j < jobs ; ++j) {
            workers.push_back(Searcher{ sys, compat, target, node_budget, nodes, vector<long long>(target + 1, 0), {}, 0, {} });
            workers.back().chosen.push_back(sys.seed);
        }

        SearchResult result;
        result.level_counts.assign(target + 1, 0);
        result.level_counts[1] = 1;
        std::exception_ptr failure;
        std::mutex failure_lock;

        auto run = [&] (int j) {
            try {
                for (std::size_t f = j ; f < first.size() ; f += jobs) {
                    // deeper levels only take candidates after first[f]
                    Bits allowed = root;
                    for (int z = 0 ; z <= first[f] ; ++z)
                        allowed[z / 64] &= ~(std::uint64_t{ 1 } << (z % 64));
                    Bits next(W);
                    for (int i = 0 ; i < W ; ++i)
                        next[i] = allowed[i] & compat[first[f]][i];
                    auto & s = workers[j];
                    if (target == 1)
                        break;
                    s.chosen.push_back(first[f]);
                    CellMask cz = sys.candidates[first[f]].cells;
                    s.visit(next, seed_cells | cz, seed_cells & cz);
                    s.chosen.pop_back();
                }
            }
            catch (...) {
                std::lock_guard guard(failure_lock);
                if (! failure)
                    failure = std::current_exception();
            }
        };

        if (jobs == 1)
            run(0);
        else {
            vector<std::thread> threads;
            for (int j = 0 ; j < jobs ; ++j)
                threads.emplace_back(run, j);
            for (auto & t : threads)
                t.join();
        }

        for (auto & s : workers) {
            for (int k = 2 ; k <= target ; ++k)
                result.level_counts[k] += s.counts[k];
            result.full_conditions_at_level5 += s.full5;
            for (auto & set : s.at_target)
                result.sets_at_target.push_back(set);
        }
        std::sort(result.sets_at_target.begin(), result.sets_at_target.end());
        result.nodes = nodes.load();
        for (int k = 1 ; k <= target ; ++k)
            if (result.level_counts[k] > 0)
                result.max_level = k;

        if (failure) {
            try {
                std::rethrow_exception(failure);
            }
            catch (const CapacityError & e) {
                string partial;
                for (int k = 1 ; k <= target ; ++k)
                    partial += (k > 1 ? "," : "") + to_string(result.level_counts[k]);
                throw CapacityError(string(e.what()) + "; partial level counts " + partial);
            }
        }
        return result;
    }

    auto candidate_checksum(const vector<MuCandidate> & candidates) -> string
    {
        std::uint64_t h = 14695981039346656037ull;
        for (auto & c : candidates)
            for (int b = 0 ; b < 8 ; ++b) {
                h ^= (c.cells >> (8 * b)) & 0xff;
                h *= 1099511628211ull;
            }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    auto gamma2_clique_scan(const Graph & g, int k) -> CliqueScan
    {
        CliqueScan scan;
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            auto p = bfs_profile(g, x);
            vector<Vertex> far;
            for (Vertex v = 0 ; v < g.order() ; ++v)
                if (p.dist[v] == 2)
                    far.push_back(v);
            auto sub = induced(g, far);
            for (auto & c : maximal_cliques(sub)) {
                scan.max_clique_in_gamma2 = std::max<int>(scan.max_clique_in_gamma2, c.size());
                if (static_cast<int>(c.size()) >= k && ! scan.witness) {
                    vector<Vertex> members;
                    for (auto i : c)
                        members.push_back(far[i]);
                    scan.witness = std::pair{ x, members };
                }
            }
        }
        return scan;
    }

    namespace
    {
        auto timed_run(const string & name, const CompatibilitySystem & sys, int target, int jobs) -> SeedRun
        {
            SeedRun run;
            run.name = name;
            run.seed = sys.candidates[sys.seed];
            run.candidate_count = sys.candidates.size();
            run.checksum = candidate_checksum(sys.candidates);
            auto start = std::chrono::steady_clock::now();
            run.search = extend_search(sys, target, 0, jobs);
            run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return run;
        }
    }

    auto lemma_no_6clique_certificate(int random_per_kind, std::uint64_t rng_seed, int jobs, bool direct_scan) -> Certificate
    {
        Certificate cert;
        const int n = 5, target = 6;
        auto base = make_system(n, canonical_seed(n, CandidateKind::single_cycle));

        for (auto kind : { CandidateKind::single_cycle, CandidateKind::two_cycles }) {
            auto sys = make_system(n, canonical_seed(n, kind));
            cert.canonical.push_back(timed_run(kind == CandidateKind::single_cycle ? "cyc8" : "cyc44", sys, target, jobs));
            auto & r = cert.canonical.back().search;
            for (int k = 3 ; k <= 5 ; ++k)
                if (r.level_counts[k] == 0)
                    cert.problems.push_back(cert.canonical.back().name + ": level " + to_string(k) + " is empty");
            if (r.level_counts[6] != 0)
                cert.problems.push_back(cert.canonical.back().name + ": found " + to_string(r.level_counts[6]) + " sets of six");
        }

        std::mt19937_64 rng(rng_seed);
        for (auto kind : { CandidateKind::single_cycle, CandidateKind::two_cycles }) {
            vector<int> pool;
            for (std::size_t i = 0 ; i < base.candidates.size() ; ++i)
                if (kind_matches(n, kind, base.candidates[i].profile))
                    pool.push_back(i);
            int expected = cert.canonical[kind == CandidateKind::single_cycle ? 0 : 1].search.max_level;
            for (int t = 0 ; t < random_per_kind ; ++t) {
                auto sys = base;
                sys.seed = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
                cert.random_seeds.push_back(timed_run(string("random-") + candidate_kind_name(kind), sys, target, jobs));
                if (cert.random_seeds.back().search.max_level != expected)
                    cert.problems.push_back("random seed " + to_string(sys.seed) + " reached level "
                            + to_string(cert.random_seeds.back().search.max_level) + ", canonical seed reached "
                            + to_string(expected));
            }
        }

        if (direct_scan) {
            auto ctx = make_field_context(5, 1);
            auto scan = gamma2_clique_scan(build_gamma(ctx), target);
            if (scan.witness)
                cert.problems.push_back("Gamma^(5) has a 6-clique inside Gamma_2 of vertex " + to_string(scan.witness->first));
            cert.direct_scan = scan;
        }
        cert.ok = cert.problems.empty();
        return cert;
    }

    auto cells_json(int n, CellMask cells) -> nlohmann::json
    {
        auto a = nlohmann::json::array();
        for (CellMask w = cells ; w ; w &= w - 1) {
            int v = std::countr_zero(w);
            a.push_back({ v / n, v % n });
        }
        return a;
    }

    auto to_json(const SeedRun & r) -> nlohmann::json
    {
        return {
            { "name", r.name },
            { "seed", cells_json(r.seed.n, r.seed.cells) },
            { "seed_profile", r.seed.profile.lengths },
            { "candidate_count", r.candidate_count },
            { "candidate_checksum", r.checksum },
            { "level_counts", r.search.level_counts },
            { "max_level", r.search.max_level },
            { "target_sets", r.search.sets_at_target.size() },
            { "level5_full_conditions", r.search.full_conditions_at_level5 },
            { "nodes", r.search.nodes },
            { "seconds", r.seconds } };
    }

    auto to_json(const Certificate & c) -> nlohmann::json
    {
        nlohmann::json j{ { "n", c.n }, { "target", c.target }, { "ok", c.ok }, { "problems", c.problems } };
        j["canonical"] = nlohmann::json::array();
        for (auto & r : c.canonical)
            j["canonical"].push_back(to_json(r));
        j["random_seeds"] = nlohmann::json::array();
        for (auto & r : c.random_seeds)
            j["random_seeds"].push_back(to_json(r));
        if (c.direct_scan) {
            nlohmann::json d{ { "max_clique_in_gamma2", c.direct_scan->max_clique_in_gamma2 } };
            if (c.direct_scan->witness)
                d["witness"] = { { "x", c.direct_scan->witness->first }, { "clique", c.direct_scan->witness->second } };
            j["direct_scan"] = d;
        }
        return j;
    }
}

#include <gridlocus/appendix.hh>
#include <gridlocus/drg.hh>
#include <gridlocus/errors.hh>
#include <gridlocus/field.hh>
#include <gridlocus/graph_io.hh>
#include <gridlocus/local_grid.hh>
#include <gridlocus/mu.hh>
#include <gridlocus/symplectic.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <set>

using namespace gridlocus;
using nlohmann::json;
using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    constexpr int exit_ok = 0, exit_violation = 1, exit_invalid = 2, exit_io = 3;

    auto gamma_field(int n) -> FieldContext
    {
        unsigned p = 0, m = 0;
        if (n < 3 || ! prime_power_decomposition(n, p, m) || p == 2)
            throw InvalidParameter("n must be an odd prime power, got " + to_string(n));
        return make_field_context(p, m);
    }

    auto write_output(const string & path, const string & text) -> void
    {
        if (path.empty() || path == "-") {
            cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (! out || ! (out << text))
            throw ParseError("cannot write " + path);
    }

    struct ConstructOptions
    {
        int n = 0;
        string out;
        string format = "graph6";
    };

    auto cmd_construct(const ConstructOptions & o) -> int
    {
        auto ctx = gamma_field(o.n);
        auto g = build_gamma(ctx);
        DistanceMatrix dist(g);
        string text = o.format == "json" ? to_json(g).dump() + "\n" : to_graph6(g) + "\n";
        write_output(o.out, text);
        json summary{ { "n", o.n }, { "vertices", g.order() }, { "degree", g.regular_degree().value_or(-1) },
            { "diameter", dist.diameter() } };
        (o.out.empty() ? cerr : cout) << summary.dump() << "\n";
        return exit_ok;
    }

    struct VerifyOptions
    {
        string path;
        optional<int> gamma;
        string suite = "all";
        int jobs = 1;
    };

    const vector<string> suite_names{ "grid", "census", "mu", "drg", "parity", "5x5" };

    auto cmd_verify(const VerifyOptions & o) -> int
    {
        if (o.path.empty() == ! o.gamma)
            throw InvalidParameter("give exactly one of a graph path or --gamma n");

        optional<FieldContext> ctx;
        Graph g;
        if (o.gamma) {
            ctx = gamma_field(*o.gamma);
            g = build_gamma(*ctx);
        }
        else
            g = read_graph_file(o.path);

        bool all = o.suite == "all";
        auto wanted = [&] (const string & s) { return all || o.suite == s; };

        json report{ { "vertices", g.order() }, { "edges", g.edge_count() }, { "suite", o.suite } };
        vector<string> notes;
        long long violations = 0;
        bool unmet = false;
        auto note_unmet = [&] (const string & why) {
            notes.push_back(why);
            if (! all)
                unmet = true;
        };
        auto count = [&] (const vector<Violation> & vs) { violations += vs.size(); return to_json(vs); };

        if (g.order() == 0 || ! is_connected(g)) {
            report["violations"] = 1;
            report["notes"] = { "graph is empty or disconnected" };
            report["ok"] = false;
            cout << report.dump(2) << "\n";
            return exit_violation;
        }

        auto detection = detect_locally_grid(g);
        report["locally_grid"] = { { "ok", detection.ok }, { "m", detection.m }, { "n", detection.n } };
        if (detection.witness)
            report["locally_grid"]["witness"] = *detection.witness;
        bool square = detection.ok && detection.m == detection.n;
        if (! square) {
            ++violations;
            notes.push_back("not locally n x n grid; neighbourhood audits skipped");
        }

        if (wanted("drg")) {
            json d;
            auto ia = intersection_numbers(g);
            if (ia.array) {
                d["intersection_array"] = to_json(*ia.array);
                if (ia.array->diameter == 2) {
                    auto srg = srg_check(g);
                    if (srg.params) {
                        d["srg"] = to_json(*srg.params);
                        auto f = srg_feasibility(*srg.params);
                        d["srg_feasible"] = f.feasible;
                    }
                }
            }
            else {
                ++violations;
                d["not_distance_regular"] = { { "reason", ia.reason }, { "witness", { ia.witness->first, ia.witness->second } } };
            }
            auto ap = antipodal_partition(g);
            if (ap.blocks) {
                auto q = quotient_graph(g, *ap.blocks);
                bool complete = q.edge_count() == static_cast<long long>(q.order()) * (q.order() - 1) / 2;
                d["antipodal"] = { { "blocks", ap.blocks->size() }, { "block_size", ap.blocks->front().size() },
                    { "quotient_complete", complete } };
            }
            else
                d["antipodal"] = { { "reason", ap.reason } };
            d["distance_diagram"] = to_json(distance_diagram(g, 0));
            report["drg"] = d;
        }

        if (square) {
            LocalGrid lg(g, detection.n);
            AuditContext actx(lg);

            if (wanted("grid")) {
                auto census = structural_census(lg);
                auto params = parameter_bounds_audit(actx);
                report["grid"] = { { "census", to_json(census) }, { "clique_distance", count(clique_distance_audit(actx)) },
                    { "parameter_bounds", count(params.violations) } };
                violations += census.violations.size();
                for (auto & nt : params.notes)
                    notes.push_back(nt);
            }

            if (wanted("census")) {
                if (ctx) {
                    auto d = divisor_profile_check(g, *ctx, o.jobs);
                    report["census"] = to_json(d.census);
                    report["census"]["divisor_law"] = { { "pass", d.pass }, { "d_seen", d.d_seen },
                        { "d_expected", d.d_expected }, { "problems", d.problems } };
                    violations += d.census.violations.size() + (d.pass ? 0 : 1);
                }
                else {
                    auto c = mu_census(lg, o.jobs);
                    report["census"] = to_json(c);
                    violations += c.violations.size();
                }
            }

            if (wanted("mu")) {
                if (detection.n < 3)
                    note_unmet("hypothesis unmet: mu-clique audit needs n >= 3");
                else
                    report["mu"] = count(mu_clique_matching_audit(actx).violations);
            }

            if (wanted("parity")) {
                try {
                    json p{ { "parity", count(parity_audit(actx)) } };
                    auto k2 = k2_identities_audit(actx);
                    p["k2_identities"] = count(k2.violations);
                    p["vertex0"] = to_json(k2.records.front());
                    report["parity"] = p;
                }
                catch (const DomainError & e) {
                    note_unmet(e.what());
                }
            }

            if (wanted("5x5")) {
                if (detection.n != 5)
                    note_unmet("hypothesis unmet: the 5x5 suite needs a locally 5 x 5 grid graph");
                else {
                    auto r = five_by_five_audit(actx);
                    report["5x5"] = to_json(r);
                    violations += r.violations.size();
                }
            }
        }

        report["violations"] = violations;
        report["notes"] = notes;
        report["ok"] = violations == 0 && ! unmet;
        cout << report.dump(2) << "\n";
        return violations == 0 && ! unmet ? exit_ok : exit_violation;
    }

    struct AppendixOptions
    {
        optional<string> seed;
        int target = 6;
        int host = 5;
        bool expect_nonempty = false;
        std::uint64_t rng_seed = 1;
        int random_per_kind = 10;
        bool direct_scan = true;
        bool emit_sets = false;
        long long node_budget = 0;
        string out;
        int jobs = 1;
    };

    auto cmd_appendix(const AppendixOptions & o) -> int
    {
        json cert;
        vector<long long> target_counts;

        if (! o.seed && o.host == 5 && o.target == 6) {
            auto c = lemma_no_6clique_certificate(o.random_per_kind, o.rng_seed, o.jobs, o.direct_scan);
            cert = to_json(c);
            for (auto & r : c.canonical)
                target_counts.push_back(r.search.level_counts.back());
            for (auto & r : c.random_seeds)
                target_counts.push_back(r.search.level_counts.back());
            if (! c.ok && ! o.expect_nonempty)
                target_counts.push_back(1);
        }
        else {
            vector<CompatibilitySystem> systems;
            vector<string> names;
            string seed = o.seed.value_or("cyc8");
            if (seed.rfind("random:", 0) == 0) {
                int k = std::stoi(seed.substr(7));
                if (k < 1)
                    throw InvalidParameter("random:K needs K >= 1");
                auto base = make_system(o.host, canonical_seed(o.host, CandidateKind::single_cycle));
                std::mt19937_64 rng(o.rng_seed);
                for (int i = 0 ; i < k ; ++i) {
                    auto sys = base;
                    sys.seed = std::uniform_int_distribution<std::size_t>(0, base.candidates.size() - 1)(rng);
                    systems.push_back(sys);
                    names.push_back("random-" + to_string(sys.seed));
                }
            }
            else {
                auto kind = parse_candidate_kind(seed);
                systems.push_back(make_system(o.host, canonical_seed(o.host, kind)));
                names.push_back(seed);
            }

            cert = { { "n", o.host }, { "target", o.target }, { "runs", json::array() } };
            for (std::size_t i = 0 ; i < systems.size() ; ++i) {
                auto & sys = systems[i];
                SeedRun run;
                run.name = names[i];
                run.seed = sys.candidates[sys.seed];
                run.candidate_count = sys.candidates.size();
                run.checksum = candidate_checksum(sys.candidates);
                run.search = extend_search(sys, o.target, o.node_budget, o.jobs);
                auto j = to_json(run);
                if (o.emit_sets) {
                    j["sets"] = json::array();
                    for (auto & set : run.search.sets_at_target) {
                        json s = json::array();
                        for (auto idx : set)
                            s.push_back(cells_json(sys.n, sys.candidates[idx].cells));
                        j["sets"].push_back(s);
                    }
                }
                cert["runs"].push_back(j);
                target_counts.push_back(run.search.level_counts.back());
            }
        }

        write_output(o.out, cert.dump(2) + "\n");
        bool empty = std::all_of(target_counts.begin(), target_counts.end(), [] (long long c) { return c == 0; });
        bool nonempty = std::all_of(target_counts.begin(), target_counts.end(), [] (long long c) { return c > 0; });
        return (o.expect_nonempty ? nonempty : empty) ? exit_ok : exit_violation;
    }

    auto cmd_bounds(int n, const string & regime) -> int
    {
        cout << to_json(theorem_bounds(n, parse_regime(regime))).dump(2) << "\n";
        return exit_ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Locally grid graphs: construction, audits and the five-by-five search" };
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "Worker threads for censuses and searches")->check(CLI::PositiveNumber);

    ConstructOptions co;
    auto construct = app.add_subcommand("construct", "Build Gamma^(n) and write it out");
    construct->add_option("n", co.n, "Odd prime power")->required();
    construct->add_option("--out", co.out, "Output path (stdout if omitted)");
    construct->add_option("--format", co.format)->check(CLI::IsMember({ "graph6", "json" }));

    VerifyOptions vo;
    auto verify = app.add_subcommand("verify", "Run audits on a graph file or on Gamma^(n)");
    verify->add_option("path", vo.path, "graph6 or JSON graph file");
    verify->add_option("--gamma", vo.gamma, "Build Gamma^(n) instead of reading a file");
    vector<string> suites = suite_names;
    suites.push_back("all");
    verify->add_option("--suite", vo.suite)->check(CLI::IsMember(suites));

    AppendixOptions ao;
    auto appendix = app.add_subcommand("appendix", "Exhaustive search for compatible mu-graph candidates in K_n x K_n");
    appendix->add_option("--seed", ao.seed, "cyc8, cyc44 or random:K");
    appendix->add_option("--target", ao.target, "Set size to search for");
    appendix->add_option("--host", ao.host, "Host K_n x K_n");
    appendix->add_flag("--expect-nonempty", ao.expect_nonempty, "Succeed iff the target level is nonempty");
    appendix->add_option("--rng-seed", ao.rng_seed, "Seed for random alternate mu-graphs");
    appendix->add_option("--random-per-kind", ao.random_per_kind, "Random seeds per kind in the full certificate");
    appendix->add_flag("!--no-direct-scan", ao.direct_scan, "Skip the clique scan over Gamma^(5)");
    appendix->add_flag("--emit-sets", ao.emit_sets, "Include every set found at the target level");
    appendix->add_option("--node-budget", ao.node_budget, "Abort after this many search nodes (0 = no limit)");
    appendix->add_option("--out", ao.out, "Certificate path (stdout if omitted)");

    int bn = 0;
    string regime;
    auto bounds = app.add_subcommand("bounds", "Order and diameter bounds");
    bounds->add_option("n", bn)->required();
    bounds->add_option("regime", regime, "n-1, 2(n-1) or =2(n-1)")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*construct)
            return cmd_construct(co);
        if (*verify) {
            vo.jobs = jobs;
            return cmd_verify(vo);
        }
        if (*appendix) {
            ao.jobs = jobs;
            return cmd_appendix(ao);
        }
        return cmd_bounds(bn, regime);
    }
    catch (const InvalidParameter & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    catch (const CapacityError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    catch (const ParseError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
    catch (const DomainError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_violation;
    }
    catch (const std::invalid_argument & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
}

// hopseat: solve, verify and inspect honeymoon seating schedules.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopseat/conditions.hpp"
#include "hopseat/document.hpp"
#include "hopseat/schedule.hpp"
#include "hopseat/search.hpp"
#include "hopseat/solve.hpp"
#include "hopseat/starters.hpp"

using namespace hopseat;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUnsupported = 2, kVerify = 3, kBudget = 4, kParse = 5 };

int exit_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::VerificationFailed: return kVerify;
        case ErrorCode::BudgetExceeded: return kBudget;
        case ErrorCode::ParseError: return kParse;
        default: return kUnsupported;
    }
}

// Writes through a sibling temp file so readers never see a partial document.
void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

std::string fixtures_path(const std::string& flag) {
    if (const char* env = std::getenv("HOPSEAT_FIXTURES"); env && *env) return env;
    return flag;
}

FixtureStore open_store(const std::string& path) {
    if (path.empty() || !std::filesystem::exists(path)) return FixtureStore{};
    return FixtureStore::load(path);
}

void save_store(const FixtureStore& store, const std::string& path, size_t before) {
    if (path.empty() || store.size() == before) return;
    store.save(path + ".tmp");
    std::filesystem::rename(path + ".tmp", path);
}

struct SolveArgs {
    int s = 0;
    std::vector<int> tables;
    std::string out;
    long budget_nodes = 10'000'000;
    double budget_secs = 0;
    std::string fixtures;
    std::string n_override;
};

int cmd_solve(const SolveArgs& a) {
    std::vector<int> halves;
    for (int t : a.tables) {
        if (t < 4 || t % 2 != 0) {
            std::cerr << "table size " << t << " must be an even integer >= 4\n";
            return kUnsupported;
        }
        halves.push_back(t / 2);
    }
    int s = a.s;
    if (!a.n_override.empty()) {
        int m = 0;
        for (int h : halves) m += h;
        int n = s + m;
        if (a.n_override == "even") n += n % 2;
        else if (a.n_override == "odd") n += 1 - n % 2;
        else n = std::stoi(a.n_override);
        s = n - m;
    }
    const std::string fpath = fixtures_path(a.fixtures);
    try {
        FixtureStore store = open_store(fpath);
        const size_t before = store.size();
        SolveOptions opts;
        opts.store = &store;
        opts.node_budget = a.budget_nodes;
        opts.time_budget = a.budget_secs;
        Solution sol = solve_detailed(make_problem_spec(s, halves), opts);
        save_store(store, fpath, before);
        std::cerr << "route: " << sol.construction.route << "\n";
        for (const auto& r : sol.construction.repairs) std::cerr << "repair: " << r << "\n";
        const std::string doc = write_document(sol.schedule);
        if (a.out.empty()) std::cout << doc;
        else write_atomically(a.out, doc);
        return kOk;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e.code());
    }
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kParse;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    Schedule s;
    try {
        s = read_document(buf.str());
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kParse;
    }
    VerificationReport rep = verify_schedule(s, s.spec);
    json out{{"ok", rep.ok()}, {"nights", s.nights.size()}, {"gamma", s.spec.gamma}, {"failures", rep.failures()}};
    std::cout << out.dump(1) << "\n";
    return rep.ok() ? kOk : kFailed;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string out;
    for (const auto& v : vs) out += (out.empty() ? "" : " ") + to_string(v);
    return out;
}

std::string int_list(const std::vector<int>& v) {
    std::string out;
    for (int x : v) out += (out.empty() ? "" : ",") + (x < 0 ? std::string("inf") : std::to_string(x));
    return out;
}

int cmd_inspect_starters(const std::string& lemma, int m, int k, bool as_json, const std::string& fixtures) {
    try {
        FixtureStore store = open_store(fixtures_path(fixtures));
        StarterSet set = starter_set(parse_lemma(lemma), m, k, &store);
        const StarterRecipe& r = set.recipe;
        json j{{"lemma", lemma_name(r.lemma)}, {"n", r.n}, {"k", r.k}, {"modulus", r.modulus},
               {"infinity", r.has_infinity}, {"development", development_name(r.development)}, {"repairs", set.repairs}};
        json pieces = json::array();
        for (const auto& p : set.pieces) {
            auto diffs = cycle_differences(p, r.modulus);
            json jp{{"label", p.label}};
            json cycles = json::array(), deuces = json::array();
            for (size_t c = 0; c < p.cycles.size(); ++c) cycles.push_back({{"vertices", vertex_list(p.cycles[c].verts)}, {"differences", diffs[c]}});
            for (size_t d = 0; d < p.deuces.size(); ++d)
                deuces.push_back({{"vertices", vertex_list({p.deuces[d].a, p.deuces[d].b})}, {"group", p.deuces[d].group},
                                  {"difference", diffs[p.cycles.size() + d][0]}});
            jp["cycles"] = cycles;
            jp["deuces"] = deuces;
            pieces.push_back(jp);
        }
        j["pieces"] = pieces;
        if (as_json) {
            std::cout << j.dump(1) << "\n";
            return kOk;
        }
        std::cout << "lemma " << lemma_name(r.lemma) << " k=" << r.k << " n=" << r.n << " modulus=" << r.modulus
                  << (r.has_infinity ? "+inf" : "") << " development=" << development_name(r.development) << "\n";
        for (const auto& p : set.pieces) {
            auto diffs = cycle_differences(p, r.modulus);
            std::cout << p.label << "\n";
            for (size_t c = 0; c < p.cycles.size(); ++c)
                std::cout << "  C" << p.cycles[c].length() << " " << vertex_list(p.cycles[c].verts) << "  differences " << int_list(diffs[c]) << "\n";
            for (size_t d = 0; d < p.deuces.size(); ++d)
                std::cout << "  E" << (p.deuces[d].group + 1) << " " << vertex_list({p.deuces[d].a, p.deuces[d].b}) << "  difference "
                          << int_list(diffs[p.cycles.size() + d]) << "\n";
        }
        for (const auto& rep : set.repairs) std::cout << "repair: " << rep << "\n";
        return kOk;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e.code());
    }
}

int cmd_inspect_orbits(int n, bool full, int fold, bool as_json) {
    try {
        if (n < 3 || n % 2 == 0) throw Error(ErrorCode::BadParameters, "orbit tables need odd n >= 3");
        if (fold != 2 && fold != 4) throw Error(ErrorCode::BadParameters, "fold must be 2 or 4");
        OrbitTable t = orbit_table(n, !full, fold);
        if (as_json) {
            json rows = json::array();
            for (const auto& o : t.orbits)
                rows.push_back({{"id", o.id}, {"color", o.color}, {"difference", o.difference.inf ? json("inf") : json(o.difference.d)}, {"size", o.size}});
            std::cout << json{{"modulus", t.modulus}, {"infinity", t.fixes_infinity}, {"fold", t.fold}, {"orbits", rows}}.dump(1) << "\n";
            return kOk;
        }
        std::cout << "orbits of " << fold << "K_" << n << " over Z_" << t.modulus << (t.fixes_infinity ? " + inf" : "") << ": "
                  << t.orbits.size() << "\n";
        for (const auto& o : t.orbits)
            std::cout << "  " << o.id << "  color=" << o.color << "  difference="
                      << (o.difference.inf ? std::string("inf") : std::to_string(o.difference.d)) << "  size=" << o.size << "\n";
        return kOk;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kUnsupported;
    }
}

int cmd_fixtures_build(const std::string& path, long budget) {
    FixtureStore store = open_store(path);
    SolveOptions opts;
    opts.store = &store;
    opts.node_budget = budget;
    int failed = 0;
    auto specs = sweep_specs(10, 25);
    for (const auto& s : two_table_specs(3, 8, 2)) specs.push_back(s);
    for (const auto& spec : specs) {
        try {
            construct(spec, opts);
        } catch (const Error& e) {
            ++failed;
            std::cerr << e.what() << "\n";
        }
    }
    store.save(path + ".tmp");
    std::filesystem::rename(path + ".tmp", path);
    std::cout << store.size() << " search bases in " << path << (failed ? ", " + std::to_string(failed) + " specs failed" : "") << "\n";
    return failed ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Honeymoon seating schedules: solve, verify, inspect"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Build and verify a schedule");
    solve->add_option("--s", sa.s, "number of 2-tables")->required();
    solve->add_option("--tables", sa.tables, "round table sizes (comma list, full sizes)")->required()->delimiter(',');
    solve->add_option("--out", sa.out, "output path (default stdout)");
    solve->add_option("--budget-nodes", sa.budget_nodes, "search node budget per attempt");
    solve->add_option("--budget-secs", sa.budget_secs, "search time budget per attempt");
    solve->add_option("--fixtures", sa.fixtures, "search cache path");
    solve->add_option("--n-override", sa.n_override, "force n: a number, 'even' or 'odd'");

    std::string vpath;
    auto* verify = app.add_subcommand("verify", "Verify a schedule document");
    verify->add_option("path", vpath)->required();

    auto* inspect = app.add_subcommand("inspect", "Dump starters or orbit tables");
    inspect->require_subcommand(1);
    std::string lemma, ifix;
    int m = 0, k = 0, n = 0, fold = 4;
    bool as_json = false, full = false;
    auto* starters = inspect->add_subcommand("starters", "starter pieces with difference lists");
    starters->add_option("--lemma", lemma)->required();
    starters->add_option("--m", m);
    starters->add_option("--k", k)->required();
    starters->add_option("--fixtures", ifix);
    starters->add_flag("--json", as_json);
    auto* orbits = inspect->add_subcommand("orbits", "edge orbits of the rotation");
    orbits->add_option("--n", n)->required();
    orbits->add_option("--fold", fold);
    orbits->add_flag("--full", full, "label by Z_n (default Z_{n-1} + inf)");
    orbits->add_flag("--json", as_json);

    auto* fixtures = app.add_subcommand("fixtures", "Manage the search cache");
    fixtures->require_subcommand(1);
    std::string fpath = "fixtures/bases.txt";
    long fbudget = 10'000'000;
    auto* build = fixtures->add_subcommand("build", "search every base the acceptance grids need");
    build->add_option("--out", fpath);
    build->add_option("--budget-nodes", fbudget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUnsupported;
    }
    if (*solve) return cmd_solve(sa);
    if (*verify) return cmd_verify(vpath);
    if (*starters) return cmd_inspect_starters(lemma, m, k, as_json, ifix);
    if (*orbits) return cmd_inspect_orbits(n, full, fold, as_json);
    if (*build) return cmd_fixtures_build(fixtures_path(fpath), fbudget);
    return kUnsupported;
}

#include "hopseat/solve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "hopseat/schedule.hpp"
#include "hopseat/search.hpp"
#include "hopseat/starters.hpp"

namespace hopseat {

namespace {

HOPDecomposition full_rotation(const std::vector<Piece>& starters, int n, const std::set<int>& required, const SimpleGraph& g) {
    return assemble_combination(develop_full_rotation(starters, n, required), g);
}

Flavor flavor_of(Development d) {
    switch (d) {
        case Development::HalfA: return Flavor::A;
        case Development::HalfB: return Flavor::B;
        default: return Flavor::D;
    }
}

HOPDecomposition develop_set(const StarterSet& s) {
    const StarterRecipe& r = s.recipe;
    switch (r.development) {
        case Development::FullRotation: return full_rotation(s.pieces, r.n, r.differences, SimpleGraph::complete(r.n));
        case Development::HalfA:
        case Development::HalfB:
        case Development::HalfD: return develop_half_rotation(s.pieces, flavor_of(r.development), r.n);
        case Development::Subgroup: return HOPDecomposition{r.n, r.n, false, develop_subgroup(s.pieces, r.n, r.symmetry)};
        case Development::BlockCompose: {
            if (s.blocks.size() != 1) throw Error(ErrorCode::BlockMismatch, "block composition needs one inner factorization");
            const int parts = r.n / r.block;
            HOPDecomposition outer = full_rotation(s.pieces, r.n, r.differences, SimpleGraph::equipartite_residues(r.n, parts));
            return compose_blockwise(r.n, r.block, develop_set(s.blocks[0]), outer);
        }
    }
    throw Error(ErrorCode::BadParameters, "unknown development");
}

std::vector<int> odd_divisors_desc(long x) {
    std::vector<int> out;
    for (long d = x; d >= 1; --d)
        if (x % d == 0 && d % 2 == 1) out.push_back(static_cast<int>(d));
    return out;
}

struct Attempts {
    bool budget_hit = false;
    std::vector<std::string> tried;
};

std::optional<Construction> try_search(SearchTask t, const SolveOptions& opts, Attempts& log) {
    t.node_budget = opts.node_budget;
    t.time_budget = opts.time_budget;
    SearchResult res = search_cached(t, opts.store);
    log.tried.push_back(t.id() + ": " + status_name(res.status));
    if (res.status == SearchStatus::BudgetExceeded) log.budget_hit = true;
    if (res.status != SearchStatus::Found) return std::nullopt;
    Construction c;
    c.route = "search " + t.id();
    const int n = t.n;
    switch (t.kind) {
        case SearchKind::Plain:
            c.decomposition = assemble_combination(develop_subgroup(res.pieces, n, t.symmetry), SimpleGraph::complete(n));
            break;
        case SearchKind::Half: c.decomposition = develop_half_rotation(res.pieces, t.flavor, n); break;
        case SearchKind::Direct: c.decomposition = HOPDecomposition{n, n, false, develop_subgroup(res.pieces, n, t.symmetry)}; break;
    }
    return c;
}

std::optional<Construction> explicit_route(const ProblemSpec& spec, const SolveOptions& opts) {
    const int n = spec.n;
    const auto& lens = spec.half_sizes;
    Construction c;
    if (lens.size() == 2 && lens[0] == 2 && lens[1] >= 3) {
        const int m = lens[1];
        if ((n - 1) % (2 * (m + 2)) == 0 && n > 1) {
            const int k = (n - 1) / (2 * (m + 2));
            auto starters = starter_c2cm_n_equiv_1(m, k, &c.repairs);
            c.decomposition = full_rotation(starters, n, all_differences(n), SimpleGraph::complete(n));
            c.route = std::string(lemma_name(StarterLemma::C2CmMod1)) + " k=" + std::to_string(k) + " FullRotation";
            return c;
        }
        if (m % 2 == 1 && n % (m + 2) == 0 && (n / (m + 2)) % 2 == 1 && n / (m + 2) >= 3) {
            const int l = n / (m + 2), k = (l - 1) / 2;
            auto starters = starter_c2cm_equipartite(m, k, &c.repairs);
            HOPDecomposition outer =
                full_rotation(starters, n, equipartite_differences(n, l), SimpleGraph::equipartite_residues(n, l));
            Construction inner = construct(make_problem_spec(0, {2, m}), opts);
            c.decomposition = compose_blockwise(n, m + 2, inner.decomposition, outer);
            c.route = std::string(lemma_name(StarterLemma::C2CmEquipartite)) + " k=" + std::to_string(k) + " BlockCompose[" +
                      inner.route + "]";
            return c;
        }
    }
    if (lens == std::vector<int>{2} && n % 4 == 1) {
        c.decomposition = full_rotation(deuces_starter(n), n, all_differences(n), SimpleGraph::complete(n));
        c.route = std::string(lemma_name(StarterLemma::Deuces)) + " k=" + std::to_string((n - 1) / 4) + " FullRotation";
        return c;
    }
    try {
        StarterSet s = small_case_starter(spec, opts.store);
        c.decomposition = develop_set(s);
        c.repairs = s.repairs;
        c.route = std::string(lemma_name(s.recipe.lemma)) + " k=" + std::to_string(s.recipe.k) + " " +
                  development_name(s.recipe.development);
        return c;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UnsupportedCase) throw;
    }
    return std::nullopt;
}

}  // namespace

Construction construct(const ProblemSpec& spec, const SolveOptions& opts) {
    const int n = spec.n;
    if (n % 2 == 0) throw Error(ErrorCode::UnsupportedParameters, "n = " + std::to_string(n) + " is even; every construction needs odd n");
    if (n < 3) throw Error(ErrorCode::UnsupportedParameters, "n < 3");
    if (auto c = explicit_route(spec, opts)) return *c;

    Attempts log;
    std::vector<int> cycles;
    int twos = 0;
    for (int h : spec.half_sizes) {
        if (h == 2) ++twos;
        else cycles.push_back(h);
    }
    // Cycle-plus-matchings decomposition of K_n, then the four-copy combination.
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    if (pairs % spec.m == 0) {
        const long P = pairs / spec.m;
        for (int q : odd_divisors_desc(std::gcd(static_cast<long>(n), P))) {
            SearchTask t;
            t.kind = SearchKind::Plain;
            t.n = n;
            t.cycle_lengths = cycles;
            t.deuces = twos;
            t.symmetry = q;
            if (auto c = try_search(t, opts, log)) return *c;
        }
    }
    {
        SearchTask t;
        t.kind = SearchKind::Half;
        t.n = n;
        t.cycle_lengths = spec.half_sizes;
        t.flavor = twos > 0 ? Flavor::B : Flavor::D;
        if (auto c = try_search(t, opts, log)) return *c;
    }
    for (int q : odd_divisors_desc(std::gcd(static_cast<long>(n), spec.gamma))) {
        SearchTask t;
        t.kind = SearchKind::Direct;
        t.n = n;
        t.cycle_lengths = spec.half_sizes;
        t.symmetry = q;
        if (auto c = try_search(t, opts, log)) return *c;
    }
    std::string why;
    for (const auto& s : log.tried) why += (why.empty() ? "" : "; ") + s;
    if (log.budget_hit) throw Error(ErrorCode::BudgetExceeded, "no construction within budget (" + why + ")");
    throw Error(ErrorCode::UnsupportedParameters, "no explicit construction applies and every search is infeasible (" + why + ")");
}

Solution solve_detailed(const ProblemSpec& spec, const SolveOptions& opts) {
    Solution out;
    out.construction = construct(spec, opts);
    const auto problems = hop_problems(out.construction.decomposition);
    if (!problems.empty()) throw Error(ErrorCode::VerificationFailed, out.construction.route + ": " + problems.front());
    out.schedule = emit_schedule(lift_phi(out.construction.decomposition, spec), spec);
    VerificationReport rep = verify_schedule(out.schedule, spec);
    if (!rep.ok()) throw Error(ErrorCode::VerificationFailed, out.construction.route + ": " + rep.failures().front());
    return out;
}

Schedule solve(const ProblemSpec& spec, const SolveOptions& opts) { return solve_detailed(spec, opts).schedule; }

std::vector<ProblemSpec> sweep_specs(int max_m, int max_n) {
    std::vector<ProblemSpec> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int lo) {
        if (rem == 0) {
            int m = std::accumulate(cur.begin(), cur.end(), 0);
            for (int n = m; n <= max_n; ++n)
                if (n % 2 == 1 && (static_cast<long>(n) * (n - 1)) % (2 * m) == 0) out.push_back(make_problem_spec(n - m, cur));
            return;
        }
        for (int x = lo; x <= rem; ++x) {
            cur.push_back(x);
            rec(rem - x, x);
            cur.pop_back();
        }
    };
    for (int m = 2; m <= max_m; ++m) rec(m, 2);
    return out;
}

std::vector<ProblemSpec> two_table_specs(int lo, int hi, int kmax) {
    std::vector<ProblemSpec> out;
    for (int m = lo; m <= hi; ++m)
        for (int k = 1; k <= kmax; ++k) {
            out.push_back(make_problem_spec(2 * (m + 2) * k + 1 - (m + 2), {2, m}));
            if (m % 2 == 1) out.push_back(make_problem_spec((2 * k + 1) * (m + 2) - (m + 2), {2, m}));
        }
    return out;
}

}  // namespace hopseat

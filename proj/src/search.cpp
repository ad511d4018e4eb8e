#include "hopseat/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace hopseat {

namespace {

using Clock = std::chrono::steady_clock;

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

long luby(long i) {
    // 1-based Luby sequence: 1 1 2 1 1 2 4 ...
    long k = 1;
    while ((1L << k) - 1 < i) ++k;
    while (true) {
        if (i == (1L << k) - 1) return 1L << (k - 1);
        i -= (1L << (k - 1)) - 1;
        k = 1;
        while ((1L << k) - 1 < i) ++k;
    }
}

struct Budget {
    long total_limit = 0;
    long total_used = 0;
    long run_limit = 0;
    long run_used = 0;
    bool run_cut = false;
    bool total_cut = false;
    bool has_deadline = false;
    Clock::time_point deadline;

    bool tick() {
        ++run_used;
        ++total_used;
        if (total_used > total_limit) total_cut = true;
        if (has_deadline && (total_used & 1023) == 0 && Clock::now() > deadline) total_cut = true;
        if (run_used > run_limit) run_cut = true;
        return !(run_cut || total_cut);
    }
    bool cut() const { return run_cut || total_cut; }
};

template <class T>
void shuffle_det(std::vector<T>& v, std::mt19937& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = rng() % i;
        std::swap(v[i - 1], v[j]);
    }
}

struct Slot {
    bool cycle = true;
    int len = 0;
    int group = 0;
    bool forced = false;
};

// Base-piece search for plain decompositions of K_n under the subgroup of Z_n of order q.
class PlainEngine {
public:
    explicit PlainEngine(const SearchTask& t) : n_(t.n), q_(t.symmetry), alpha_(t.deuces), lens_(t.cycle_lengths) {
        std::sort(lens_.begin(), lens_.end(), std::greater<int>());
        const int g = n_ / q_;
        orb_.assign(static_cast<size_t>(n_) * n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b) {
                if (orb_[a * n_ + b] >= 0) continue;
                int id = norb_++;
                rep_.push_back({a, b});
                for (int j = 0; j < q_; ++j) {
                    int x = (a + j * g) % n_, y = (b + j * g) % n_;
                    orb_[x * n_ + y] = orb_[y * n_ + x] = id;
                }
            }
        per_piece_ = std::accumulate(lens_.begin(), lens_.end(), 0) + 2 * alpha_;
        pieces_ = per_piece_ > 0 && norb_ % per_piece_ == 0 ? norb_ / per_piece_ : -1;
    }

    bool feasible() const { return pieces_ >= 0; }

    bool run(Budget& budget, std::mt19937& rng) {
        budget_ = &budget;
        rng_ = &rng;
        used_.assign(norb_, 0);
        blocked_cyc_.assign(n_, 0);
        grp_[0].assign(n_, 0);
        grp_[1].assign(n_, 0);
        cur_.assign(pieces_, {});
        plans_.assign(pieces_, {});
        return solve_piece(0);
    }

    std::vector<Piece> result() const {
        std::vector<Piece> out;
        for (int k = 0; k < pieces_; ++k) {
            Piece p;
            p.label = "base" + std::to_string(k + 1);
            for (const auto& c : cur_[k].cycles) {
                std::vector<Vertex> vs;
                for (int v : c) vs.push_back(Vertex::finite(v, n_));
                p.cycles.push_back(make_cycle(vs));
            }
            for (const auto& d : cur_[k].deuces)
                p.deuces.push_back(Deuce{Vertex::finite(d[0], n_), Vertex::finite(d[1], n_), d[2]});
            out.push_back(std::move(p));
        }
        return out;
    }

private:
    struct Rec {
        std::vector<std::vector<int>> cycles;
        std::vector<std::array<int, 3>> deuces;
    };

    int n_, q_, alpha_;
    std::vector<int> lens_;
    std::vector<int> orb_;
    std::vector<std::pair<int, int>> rep_;
    int norb_ = 0;
    int per_piece_ = 0;
    int pieces_ = 0;

    Budget* budget_ = nullptr;
    std::mt19937* rng_ = nullptr;
    std::vector<char> used_, blocked_cyc_;
    std::vector<char> grp_[2];
    std::vector<Rec> cur_;
    std::vector<std::vector<Slot>> plans_;

    int o(int a, int b) const { return orb_[a * n_ + b]; }
    bool cycle_free(int v) const { return !blocked_cyc_[v] && !grp_[0][v] && !grp_[1][v]; }

    bool solve_piece(int k) {
        if (k == pieces_) return true;
        if (!budget_->tick()) return false;
        int first = 0;
        while (first < norb_ && used_[first]) ++first;
        if (first == norb_) return false;
        auto [a, b] = rep_[first];
        std::vector<int> options;  // cycle length, or 0 for a deuce
        for (int L : lens_)
            if (std::find(options.begin(), options.end(), L) == options.end()) options.push_back(L);
        if (alpha_ > 0) options.push_back(0);
        for (int opt : options) {
            std::vector<Slot> plan;
            bool skipped = false;
            if (opt > 0) plan.push_back({true, opt, 0, true});
            else plan.push_back({false, 0, 0, true});
            for (int L : lens_) {
                if (opt > 0 && L == opt && !skipped) {
                    skipped = true;
                    continue;
                }
                plan.push_back({true, L, 0, false});
            }
            for (int g = 0; g < 2; ++g)
                for (int i = 0; i < alpha_ - (opt == 0 && g == 0 ? 1 : 0); ++i) plan.push_back({false, 0, g, false});
            plans_[k] = plan;
            used_[first] = 1;
            if (opt > 0) {
                blocked_cyc_[a] = blocked_cyc_[b] = 1;
                std::vector<int> path{a, b};
                if (extend(k, 0, path, opt, false)) return true;
                blocked_cyc_[a] = blocked_cyc_[b] = 0;
            } else {
                grp_[0][a] = grp_[0][b] = 1;
                cur_[k].deuces.push_back({a, b, 0});
                if (fill(k, 1)) return true;
                cur_[k].deuces.pop_back();
                grp_[0][a] = grp_[0][b] = 0;
            }
            used_[first] = 0;
            if (budget_->cut()) return false;
        }
        return false;
    }

    bool fill(int k, size_t si) {
        const auto& plan = plans_[k];
        if (si == plan.size()) {
            auto saved_cyc = blocked_cyc_;
            auto saved0 = grp_[0], saved1 = grp_[1];
            std::fill(blocked_cyc_.begin(), blocked_cyc_.end(), 0);
            std::fill(grp_[0].begin(), grp_[0].end(), 0);
            std::fill(grp_[1].begin(), grp_[1].end(), 0);
            if (solve_piece(k + 1)) return true;
            blocked_cyc_ = std::move(saved_cyc);
            grp_[0] = std::move(saved0);
            grp_[1] = std::move(saved1);
            return false;
        }
        const Slot& slot = plan[si];
        if (slot.cycle) {
            int lower = -1;
            if (si > 0 && plan[si - 1].cycle && !plan[si - 1].forced && plan[si - 1].len == slot.len)
                lower = cur_[k].cycles.back()[0];
            std::vector<int> cand;
            for (int v = lower + 1; v < n_; ++v)
                if (cycle_free(v)) cand.push_back(v);
            shuffle_det(cand, *rng_);
            for (int v : cand) {
                if (!budget_->tick()) return false;
                blocked_cyc_[v] = 1;
                std::vector<int> path{v};
                if (extend(k, si, path, slot.len, true)) return true;
                blocked_cyc_[v] = 0;
                if (budget_->cut()) return false;
            }
            return false;
        }
        const int g = slot.group;
        std::array<int, 2> prev{-1, -1};
        if (si > 0 && !plan[si - 1].cycle && !plan[si - 1].forced && plan[si - 1].group == g) {
            const auto& d = cur_[k].deuces.back();
            prev = {d[0], d[1]};
        }
        std::vector<std::pair<int, int>> cand;
        for (int a = std::max(prev[0], 0); a < n_; ++a) {
            if (blocked_cyc_[a] || grp_[g][a]) continue;
            for (int b = a + 1; b < n_; ++b) {
                if (a == prev[0] && b <= prev[1]) continue;
                if (blocked_cyc_[b] || grp_[g][b] || used_[o(a, b)]) continue;
                cand.push_back({a, b});
            }
        }
        shuffle_det(cand, *rng_);
        for (auto [a, b] : cand) {
            if (!budget_->tick()) return false;
            used_[o(a, b)] = 1;
            grp_[g][a] = grp_[g][b] = 1;
            cur_[k].deuces.push_back({a, b, g});
            if (fill(k, si + 1)) return true;
            cur_[k].deuces.pop_back();
            grp_[g][a] = grp_[g][b] = 0;
            used_[o(a, b)] = 0;
            if (budget_->cut()) return false;
        }
        return false;
    }

    bool extend(int k, size_t si, std::vector<int>& path, int L, bool free) {
        const int u = path.back();
        if (static_cast<int>(path.size()) == L) {
            const int w = path[0];
            const int oc = o(u, w);
            if (used_[oc]) return false;
            if (free && !(path[1] < path.back())) return false;
            used_[oc] = 1;
            cur_[k].cycles.push_back(path);
            if (fill(k, si + 1)) return true;
            cur_[k].cycles.pop_back();
            used_[oc] = 0;
            return false;
        }
        std::vector<int> cand;
        const bool last = static_cast<int>(path.size()) == L - 1;
        for (int v = free ? path[0] + 1 : 0; v < n_; ++v) {
            if (!cycle_free(v)) continue;
            int ov = o(u, v);
            if (used_[ov]) continue;
            if (last) {
                int oc = o(v, path[0]);
                if (used_[oc] || oc == ov) continue;
            }
            cand.push_back(v);
        }
        shuffle_det(cand, *rng_);
        for (int v : cand) {
            if (!budget_->tick()) return false;
            int ov = o(u, v);
            used_[ov] = 1;
            blocked_cyc_[v] = 1;
            path.push_back(v);
            if (extend(k, si, path, L, free)) return true;
            path.pop_back();
            blocked_cyc_[v] = 0;
            used_[ov] = 0;
            if (budget_->cut()) return false;
        }
        return false;
    }
};

// Starter search over Z_{n-1} + x_inf (vertex index n-1 is x_inf).
class HalfEngine {
public:
    explicit HalfEngine(const SearchTask& t)
        : n_(t.n), M_(t.n - 1), h_((t.n - 1) / 2), flavor_(t.flavor), lens_(t.cycle_lengths), direct_(t.kind == SearchKind::Direct) {
        fold_ = flavor_ == Flavor::A && !direct_ ? 2 : 4;
        if (direct_) {
            setup_direct(t.symmetry);
            return;
        }
        std::sort(lens_.begin(), lens_.end(), std::greater<int>());
        const int V = n_;
        const int ncodes = V * V * 4;
        oid_.assign(ncodes, -1);
        opos_.assign(ncodes, 0);
        olong_.assign(ncodes, 0);
        odiam_.assign(ncodes, 0);
        std::map<std::string, int> ids;
        for (int u = 0; u < V; ++u)
            for (int v = 0; v < V; ++v) {
                if (u == v) continue;
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y) {
                        if (fold_ == 2 && y == 1) continue;
                        int c = code(u, v, x, y);
                        DecoratedEdge e = decorated(u, v, x, y);
                        EdgeOrbit eo = orbit_of(e, M_);
                        auto it = ids.find(eo.id);
                        if (it == ids.end()) {
                            it = ids.emplace(eo.id, static_cast<int>(ids.size())).first;
                            members_.emplace_back();
                            osize_.push_back(eo.size);
                        }
                        oid_[c] = it->second;
                        opos_[c] = eo.position;
                        olong_[c] = eo.size == M_;
                        odiam_[c] = edge_difference(e.u, e.v, M_).is_diameter;
                        if (u < v) members_[it->second].push_back(c);
                    }
            }
        norb_ = static_cast<int>(ids.size());
        // Orbit ids are assigned in map order; re-rank by (difference, id) for a stable "lowest" orbit.
        order_.resize(norb_);
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<std::string> names(norb_);
        for (auto& [name, id] : ids) names[id] = name;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) { return names[a] < names[b]; });
        const int m = std::accumulate(lens_.begin(), lens_.end(), 0);
        const long gamma_num = 2L * n_ * (n_ - 1);
        if (m <= 0 || gamma_num % m != 0) {
            pieces_ = -1;
            return;
        }
        const long gamma = gamma_num / m;
        if (flavor_ == Flavor::D) pieces_ = gamma % h_ == 0 ? static_cast<int>(gamma / h_) : -1;
        else pieces_ = gamma % M_ == 0 ? static_cast<int>(gamma / M_) : -1;
        if (flavor_ == Flavor::B && std::find(lens_.begin(), lens_.end(), 2) == lens_.end()) pieces_ = -1;
    }

    bool feasible() const { return pieces_ > 0 && n_ % 2 == 1 && n_ >= 3; }

    // Whole 4K_n over Z_n; orbits are the translates under the order-q subgroup.
    void setup_direct(int q) {
        std::sort(lens_.begin(), lens_.end(), std::greater<int>());
        const int ncodes = n_ * n_ * 4;
        const int g = n_ / q;
        oid_.assign(ncodes, -1);
        opos_.assign(ncodes, 0);
        olong_.assign(ncodes, 0);
        odiam_.assign(ncodes, 0);
        std::map<int, int> ids;
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v) {
                if (u == v) continue;
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y) {
                        int canon = ncodes;
                        for (int j = 0; j < q; ++j) {
                            int a = (u + j * g) % n_, b = (v + j * g) % n_;
                            canon = std::min({canon, code(a, b, x, y), code(b, a, y, x)});
                        }
                        auto it = ids.find(canon);
                        if (it == ids.end()) {
                            it = ids.emplace(canon, static_cast<int>(ids.size())).first;
                            members_.emplace_back();
                            osize_.push_back(q);
                        }
                        const int c = code(u, v, x, y);
                        oid_[c] = it->second;
                        if (u < v) members_[it->second].push_back(c);
                    }
            }
        norb_ = static_cast<int>(ids.size());
        for (auto& [canon, id] : ids) order_.push_back(id);
        const int m = std::accumulate(lens_.begin(), lens_.end(), 0);
        const long gamma_num = 2L * n_ * (n_ - 1);
        pieces_ = -1;
        if (m > 0 && m <= n_ && gamma_num % m == 0 && (gamma_num / m) % q == 0) pieces_ = static_cast<int>(gamma_num / m / q);
    }

    bool run(Budget& budget, std::mt19937& rng) {
        budget_ = &budget;
        rng_ = &rng;
        hits_.assign(norb_, 0);
        pend_.assign(norb_, 0);
        blocked_.assign(n_, 0);
        cur_.assign(pieces_, {});
        plans_.assign(pieces_, {});
        if (!direct_ && flavor_ == Flavor::B) {
            // Piece 0 owns the diameter 2-cycle on x_0 x_h; its edges are not orbit-counted.
            std::vector<Slot> plan;
            bool placed = false;
            for (int L : lens_) {
                if (L == 2 && !placed) {
                    placed = true;
                    continue;
                }
                plan.push_back({true, L, 0, false});
            }
            plans_[0] = plan;
            blocked_[0] = blocked_[h_] = 1;
            cur_[0].cycles.push_back({{0, h_}, {0, 1}, {}});
            return fill(0, 0);
        }
        return solve_piece(0);
    }

    std::vector<Piece> result() const {
        std::vector<Piece> out;
        for (int k = 0; k < pieces_; ++k) {
            Piece p;
            p.label = (direct_ ? "factor" : "starter") + std::to_string(k + 1);
            for (const auto& c : cur_[k].cycles) {
                std::vector<Vertex> vs;
                for (int v : c.verts) vs.push_back(vertex(v));
                if (fold_ == 4) {
                    p.cycles.push_back(cycle_from_bits(vs, c.bits));
                } else {
                    std::vector<Color> cols;
                    for (int col : c.colors) cols.push_back(col == 0 ? Color::PlainPink : Color::PlainBlack);
                    p.cycles.push_back(make_cycle(vs, cols));
                }
            }
            out.push_back(std::move(p));
        }
        return out;
    }

private:
    struct Cyc {
        std::vector<int> verts;
        std::vector<int> bits;    // fold 4
        std::vector<int> colors;  // fold 2: edge j color, 0 pink 1 black
    };
    struct Rec {
        std::vector<Cyc> cycles;
    };

    int n_, M_, h_;
    Flavor flavor_;
    int fold_ = 4;
    std::vector<int> lens_;
    bool direct_ = false;
    std::vector<int> oid_, opos_;
    std::vector<char> olong_, odiam_;
    std::vector<std::vector<int>> members_;
    std::vector<int> osize_;
    std::vector<int> order_;
    int norb_ = 0;
    int pieces_ = 0;

    Budget* budget_ = nullptr;
    std::mt19937* rng_ = nullptr;
    std::vector<int> hits_, pend_;
    std::vector<char> blocked_;
    std::vector<Rec> cur_;
    std::vector<std::vector<Slot>> plans_;

    int code(int u, int v, int x, int y) const { return ((u * n_ + v) * 2 + x) * 2 + y; }
    Vertex vertex(int v) const {
        if (direct_) return Vertex::finite(v, n_);
        return v == M_ ? Vertex::infinity(M_) : Vertex::finite(v, M_);
    }

    // fold 4: (x, y) are the end bits at u and v. fold 2: x is the color (0 pink, 1 black).
    DecoratedEdge decorated(int u, int v, int x, int y) const {
        Vertex a = vertex(u), b = vertex(v);
        if (fold_ == 2) return {a, b, x == 0 ? Color::PlainPink : Color::PlainBlack};
        if (x == 0 && y == 0) return {a, b, Color::Blue};
        if (x == 1 && y == 1) return {a, b, Color::Pink};
        if (x == 0) return {a, b, Color::BlackArc};
        return {b, a, Color::BlackArc};
    }

    bool single_hit() const { return direct_ || flavor_ == Flavor::B; }
    int cap(int oid) const { return single_hit() ? 1 : (osize_[oid] == M_ ? 2 : 1); }

    bool can_use(int c) const {
        const int id = oid_[c];
        if (direct_) return hits_[id] == 0;
        if (flavor_ == Flavor::B) return !odiam_[c] && hits_[id] == 0;
        if (hits_[id] == 0) return true;
        if (!olong_[c] || hits_[id] >= 2) return false;
        return opos_[c] == (pend_[id] + h_) % M_;
    }
    void use(int c) {
        const int id = oid_[c];
        if (hits_[id]++ == 0) pend_[id] = opos_[c];
    }
    void unuse(int c) { hits_[oid_[c]]--; }

    bool solve_piece(int k) {
        if (k == pieces_) return true;
        if (!budget_->tick()) return false;
        int first = -1;
        for (int id : order_) {
            if (!direct_ && flavor_ == Flavor::B) {
                bool diam = !members_[id].empty() && odiam_[members_[id][0]];
                if (diam) continue;
            }
            if (hits_[id] < cap(id)) {
                first = id;
                break;
            }
        }
        if (first < 0) return false;
        std::vector<int> forced;
        for (int c : members_[first])
            if (can_use(c)) forced.push_back(c);
        bool any_used = false;
        for (int id = 0; id < norb_ && !any_used; ++id) any_used = hits_[id] > 0;
        if (single_hit() || !any_used) forced.resize(std::min<size_t>(forced.size(), 1));
        std::vector<int> options;
        for (int L : lens_)
            if (std::find(options.begin(), options.end(), L) == options.end()) options.push_back(L);
        shuffle_det(forced, *rng_);
        for (int c : forced) {
            const int u = c / 4 / n_, v = (c / 4) % n_;
            const int x = (c / 2) % 2, y = c % 2;
            for (int L : options) {
                std::vector<Slot> plan{{true, L, 0, true}};
                bool skipped = false;
                for (int l2 : lens_) {
                    if (l2 == L && !skipped) {
                        skipped = true;
                        continue;
                    }
                    plan.push_back({true, l2, 0, false});
                }
                plans_[k] = plan;
                Cyc cyc;
                cyc.verts = {u, v};
                if (fold_ == 4) cyc.bits = {x, 1 - y};
                else cyc.colors = {x};
                use(c);
                blocked_[u] = blocked_[v] = 1;
                if (extend(k, 0, cyc, L, false)) return true;
                blocked_[u] = blocked_[v] = 0;
                unuse(c);
                if (budget_->cut()) return false;
            }
        }
        return false;
    }

    bool fill(int k, size_t si) {
        const auto& plan = plans_[k];
        if (si == plan.size()) {
            auto saved = blocked_;
            std::fill(blocked_.begin(), blocked_.end(), 0);
            if (solve_piece(k + 1)) return true;
            blocked_ = std::move(saved);
            return false;
        }
        const Slot& slot = plan[si];
        int lower = -1;
        if (si > 0 && !plan[si - 1].forced && plan[si - 1].len == slot.len) lower = cur_[k].cycles.back().verts[0];
        std::vector<int> cand;
        for (int v = lower + 1; v < n_; ++v)
            if (!blocked_[v]) cand.push_back(v);
        shuffle_det(cand, *rng_);
        for (int v : cand) {
            if (!budget_->tick()) return false;
            blocked_[v] = 1;
            std::vector<int> first_bits = fold_ == 4 ? (slot.len == 2 ? std::vector<int>{0} : std::vector<int>{0, 1}) : std::vector<int>{0};
            for (int b : first_bits) {
                Cyc cyc;
                cyc.verts = {v};
                if (fold_ == 4) cyc.bits = {b};
                if (extend(k, si, cyc, slot.len, true)) return true;
                if (budget_->cut()) break;
            }
            blocked_[v] = 0;
            if (budget_->cut()) return false;
        }
        return false;
    }

    int edge_code_fold2(int u, int v, int color) const { return code(u, v, color, 0); }

    bool extend(int k, size_t si, Cyc& cyc, int L, bool free) {
        const int u = cyc.verts.back();
        const int len = static_cast<int>(cyc.verts.size());
        if (len == L) {
            const int w = cyc.verts[0];
            if (free && L >= 3 && !(cyc.verts[1] < cyc.verts.back())) return false;
            std::vector<int> closers;
            if (fold_ == 4) {
                closers.push_back(code(u, w, cyc.bits.back(), 1 - cyc.bits[0]));
            } else {
                int pink = 0;
                for (int col : cyc.colors) pink += col == 0;
                for (int col = 0; col < 2; ++col) {
                    if (L == 2 && col == cyc.colors[0]) continue;
                    if (L >= 3 && (pink + (col == 0)) % 2 != 0) continue;
                    closers.push_back(edge_code_fold2(u, w, col));
                }
            }
            for (int c : closers) {
                if (!can_use(c)) continue;
                use(c);
                if (fold_ == 2) cyc.colors.push_back((c / 2) % 2);
                cur_[k].cycles.push_back(cyc);
                if (fill(k, si + 1)) return true;
                cur_[k].cycles.pop_back();
                if (fold_ == 2) cyc.colors.pop_back();
                unuse(c);
            }
            return false;
        }
        struct Cand {
            int v, choice, code;
        };
        std::vector<Cand> cand;
        for (int v = free ? cyc.verts[0] + 1 : 0; v < n_; ++v) {
            if (blocked_[v]) continue;
            for (int ch = 0; ch < 2; ++ch) {
                int c = fold_ == 4 ? code(u, v, cyc.bits.back(), 1 - ch) : edge_code_fold2(u, v, ch);
                if (can_use(c)) cand.push_back({v, ch, c});
            }
        }
        shuffle_det(cand, *rng_);
        for (const auto& cd : cand) {
            if (!budget_->tick()) return false;
            if (!can_use(cd.code)) continue;
            use(cd.code);
            blocked_[cd.v] = 1;
            cyc.verts.push_back(cd.v);
            if (fold_ == 4) cyc.bits.push_back(cd.choice);
            else cyc.colors.push_back(cd.choice);
            if (extend(k, si, cyc, L, free)) return true;
            cyc.verts.pop_back();
            if (fold_ == 4) cyc.bits.pop_back();
            else cyc.colors.pop_back();
            blocked_[cd.v] = 0;
            unuse(cd.code);
            if (budget_->cut()) return false;
        }
        return false;
    }
};

template <class Engine>
SearchResult run_restarts(const SearchTask& task, Engine& engine) {
    SearchResult res;
    if (!engine.feasible()) {
        res.status = SearchStatus::Exhausted;
        return res;
    }
    Budget budget;
    budget.total_limit = task.node_budget;
    if (task.time_budget > 0) {
        budget.has_deadline = true;
        budget.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(task.time_budget));
    }
    const long unit = 2048;
    for (long r = 1;; ++r) {
        budget.run_limit = unit * luby(r);
        budget.run_used = 0;
        budget.run_cut = false;
        std::mt19937 rng(task.seed * 2654435761u + static_cast<unsigned>(r));
        bool found = engine.run(budget, rng);
        if (found) {
            res.status = SearchStatus::Found;
            res.pieces = engine.result();
            break;
        }
        if (!budget.cut()) {
            res.status = SearchStatus::Exhausted;
            break;
        }
        if (budget.total_cut) {
            res.status = SearchStatus::BudgetExceeded;
            break;
        }
    }
    res.nodes = budget.total_used;
    return res;
}

}  // namespace

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::Exhausted: return "Exhausted";
        case SearchStatus::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

std::string SearchTask::id() const {
    std::vector<int> lens = cycle_lengths;
    std::sort(lens.begin(), lens.end());
    if (kind == SearchKind::Plain)
        return "plain n=" + std::to_string(n) + " q=" + std::to_string(symmetry) + " cycles=" + join_ints(lens) +
               " deuces=" + std::to_string(deuces);
    if (kind == SearchKind::Direct)
        return "direct n=" + std::to_string(n) + " q=" + std::to_string(symmetry) + " cycles=" + join_ints(lens);
    return std::string("half n=") + std::to_string(n) + " flavor=" + flavor_name(flavor) + " cycles=" + join_ints(lens);
}

std::vector<Piece> develop_subgroup(const std::vector<Piece>& pieces, int n, int q) {
    std::vector<Piece> out;
    const int g = n / q;
    for (const auto& p : pieces)
        for (int j = 0; j < q; ++j) {
            Piece s = shift_piece(p, static_cast<long>(j) * g);
            s.label = p.label + "+" + std::to_string(j * g);
            out.push_back(std::move(s));
        }
    return out;
}

void validate_solution(const SearchTask& task, const std::vector<Piece>& pieces) {
    auto fail = [&](const std::string& why) { throw Error(ErrorCode::FixtureInvalid, task.id() + ": " + why); };
    std::vector<int> want = task.cycle_lengths;
    std::sort(want.begin(), want.end());
    if (task.kind == SearchKind::Plain) {
        if (task.symmetry <= 0 || task.n % task.symmetry != 0) fail("symmetry order does not divide n");
        for (const auto& p : pieces) {
            if (p.cycle_lengths() != want) fail("piece '" + p.label + "' has the wrong cycle lengths");
            int cnt[2] = {0, 0};
            for (const auto& d : p.deuces) cnt[d.group & 1]++;
            if (cnt[0] != task.deuces || cnt[1] != task.deuces) fail("piece '" + p.label + "' has the wrong matchings");
            if (!piece_disjoint(p)) fail("piece '" + p.label + "' is not vertex-disjoint");
            for (const auto& v : p.vertices())
                if (v.inf || v.modulus != task.n) fail("piece not labeled over Z_n");
        }
        try {
            require_plain_decomposition(develop_subgroup(pieces, task.n, task.symmetry), SimpleGraph::complete(task.n));
        } catch (const Error& e) {
            fail(e.what());
        }
        return;
    }
    for (const auto& p : pieces)
        if (p.cycle_lengths() != want) fail("starter '" + p.label + "' has the wrong cycle lengths");
    if (task.kind == SearchKind::Direct) {
        if (task.symmetry <= 0 || task.n % task.symmetry != 0) fail("symmetry order does not divide n");
        for (const auto& p : pieces)
            for (const auto& v : p.vertices())
                if (v.inf || v.modulus != task.n) fail("piece not labeled over Z_n");
        HOPDecomposition d{task.n, task.n, false, develop_subgroup(pieces, task.n, task.symmetry)};
        auto problems = hop_problems(d);
        if (!problems.empty()) fail(problems.front());
        return;
    }
    CoverageReport rep;
    try {
        rep = check_starter_conditions(pieces, task.flavor, task.n);
    } catch (const Error& e) {
        fail(e.what());
    }
    if (!rep.ok()) fail(rep.summary());
    auto d = develop_half_rotation(pieces, task.flavor, task.n);
    auto problems = hop_problems(d);
    if (!problems.empty()) fail(problems.front());
    for (const auto& p : d.pieces)
        if (p.cycle_lengths() != want) fail("developed piece has the wrong cycle lengths");
}

SearchResult search(const SearchTask& task) {
    if (task.n < 3 || task.node_budget <= 0) throw Error(ErrorCode::BadParameters, "search task needs n >= 3 and a positive budget");
    SearchResult res;
    if (task.kind == SearchKind::Plain) {
        if (task.symmetry <= 0 || task.n % task.symmetry != 0 || task.symmetry % 2 == 0)
            throw Error(ErrorCode::BadParameters, "symmetry order must be an odd divisor of n");
        for (int L : task.cycle_lengths)
            if (L < 3) throw Error(ErrorCode::BadParameters, "plain cycles need length >= 3");
        PlainEngine engine(task);
        res = run_restarts(task, engine);
    } else {
        if (task.n % 2 == 0) throw Error(ErrorCode::BadParameters, "rotation searches need odd n");
        if (task.kind == SearchKind::Direct && (task.symmetry <= 0 || task.n % task.symmetry != 0 || task.symmetry % 2 == 0))
            throw Error(ErrorCode::BadParameters, "symmetry order must be an odd divisor of n");
        for (int L : task.cycle_lengths)
            if (L < 2) throw Error(ErrorCode::BadParameters, "cycle length < 2");
        HalfEngine engine(task);
        res = run_restarts(task, engine);
    }
    if (res.status == SearchStatus::Found) validate_solution(task, res.pieces);
    return res;
}

SearchResult oracle_decompose(int n, const std::vector<int>& cycle_lengths, long node_budget) {
    SearchTask t;
    t.kind = SearchKind::Plain;
    t.n = n;
    t.cycle_lengths = cycle_lengths;
    t.node_budget = node_budget;
    const int per = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
    const long edges = static_cast<long>(n) * (n - 1) / 2;
    if (per <= 0 || edges % per != 0 || per > n) return SearchResult{SearchStatus::Exhausted, {}, 0};
    const long pieces = edges / per;
    t.symmetry = 1;
    for (int q = n; q > 1; --q)
        if (n % q == 0 && q % 2 == 1 && pieces % q == 0) {
            t.symmetry = q;
            break;
        }
    SearchResult res = search(t);
    if (res.status == SearchStatus::Found) res.pieces = develop_subgroup(res.pieces, n, t.symmetry);
    return res;
}

// ---- fixtures ----

namespace {

std::string vertex_token(const Vertex& v) { return v.inf ? "inf" : std::to_string(v.index); }

char edge_tag(const DecoratedEdge& e, const Vertex& from) {
    switch (e.color) {
        case Color::None: return '-';
        case Color::Blue: return 'b';
        case Color::Pink: return 'p';
        case Color::PlainPink: return 'P';
        case Color::PlainBlack: return 'K';
        case Color::BlackArc: return e.u == from ? '>' : '<';
    }
    return '?';
}

Vertex parse_vertex(const std::string& tok, int modulus) {
    if (tok == "inf") return Vertex::infinity(modulus);
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size() || v < 0 || v >= modulus) throw Error(ErrorCode::FixtureInvalid, "bad vertex '" + tok + "'");
    return Vertex::finite(v, modulus);
}

}  // namespace

std::string FixtureStore::format_pieces(const std::vector<Piece>& pieces) {
    std::ostringstream os;
    for (const auto& p : pieces) {
        os << "piece " << p.label << "\n";
        for (const auto& c : p.cycles) {
            os << "cycle";
            for (int j = 0; j < c.length(); ++j) os << " " << vertex_token(c.verts[j]) << " " << edge_tag(c.edges[j], c.verts[j]);
            os << "\n";
        }
        for (const auto& d : p.deuces) os << "deuce " << vertex_token(d.a) << " " << vertex_token(d.b) << " " << d.group << "\n";
    }
    return os.str();
}

std::vector<Piece> FixtureStore::parse_pieces(const std::vector<std::string>& lines, int modulus) {
    std::vector<Piece> out;
    for (const auto& line : lines) {
        std::istringstream is(line);
        std::string kw;
        is >> kw;
        if (kw == "piece") {
            Piece p;
            is >> p.label;
            out.push_back(p);
            continue;
        }
        if (out.empty()) throw Error(ErrorCode::FixtureInvalid, "component before any piece");
        if (kw == "cycle") {
            std::vector<std::string> toks;
            std::string tok;
            while (is >> tok) toks.push_back(tok);
            if (toks.size() < 4 || toks.size() % 2 != 0) throw Error(ErrorCode::FixtureInvalid, "bad cycle line: " + line);
            ColoredCycle c;
            for (size_t j = 0; j < toks.size(); j += 2) c.verts.push_back(parse_vertex(toks[j], modulus));
            const size_t l = c.verts.size();
            for (size_t j = 0; j < l; ++j) {
                const Vertex& a = c.verts[j];
                const Vertex& b = c.verts[(j + 1) % l];
                const std::string& t = toks[2 * j + 1];
                if (t.size() != 1) throw Error(ErrorCode::FixtureInvalid, "bad edge tag '" + t + "'");
                switch (t[0]) {
                    case '-': c.edges.push_back({a, b, Color::None}); break;
                    case 'b': c.edges.push_back({a, b, Color::Blue}); break;
                    case 'p': c.edges.push_back({a, b, Color::Pink}); break;
                    case 'P': c.edges.push_back({a, b, Color::PlainPink}); break;
                    case 'K': c.edges.push_back({a, b, Color::PlainBlack}); break;
                    case '>': c.edges.push_back({a, b, Color::BlackArc}); break;
                    case '<': c.edges.push_back({b, a, Color::BlackArc}); break;
                    default: throw Error(ErrorCode::FixtureInvalid, "bad edge tag '" + t + "'");
                }
            }
            validate_cycle(c);
            out.back().cycles.push_back(std::move(c));
        } else if (kw == "deuce") {
            std::string a, b;
            int g = -1;
            if (!(is >> a >> b >> g) || (g != 0 && g != 1)) throw Error(ErrorCode::FixtureInvalid, "bad deuce line: " + line);
            out.back().deuces.push_back(Deuce{parse_vertex(a, modulus), parse_vertex(b, modulus), g});
        } else {
            throw Error(ErrorCode::FixtureInvalid, "unknown line: " + line);
        }
    }
    return out;
}

FixtureStore FixtureStore::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FixtureInvalid, "cannot open " + path);
    FixtureStore store;
    std::string line;
    if (!std::getline(in, line) || line != kHeader) throw Error(ErrorCode::FixtureInvalid, path + ": missing header '" + kHeader + "'");
    std::string id;
    int modulus = 0;
    std::vector<std::string> body;
    auto flush = [&]() {
        if (id.empty()) return;
        SearchTask t;
        bool parsed = false;
        // Rebuild the task from its id so the entry can be re-validated.
        std::istringstream is(id);
        std::string kind;
        is >> kind;
        std::map<std::string, std::string> kv;
        std::string tok;
        while (is >> tok) {
            auto eq = tok.find('=');
            if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        try {
            t.n = std::stoi(kv.at("n"));
            std::string lens = kv.at("cycles");
            std::stringstream ls(lens);
            std::string part;
            while (std::getline(ls, part, ','))
                if (!part.empty()) t.cycle_lengths.push_back(std::stoi(part));
            if (kind == "plain") {
                t.kind = SearchKind::Plain;
                t.symmetry = std::stoi(kv.at("q"));
                t.deuces = std::stoi(kv.at("deuces"));
                parsed = true;
            } else if (kind == "direct") {
                t.kind = SearchKind::Direct;
                t.symmetry = std::stoi(kv.at("q"));
                parsed = true;
            } else if (kind == "half") {
                t.kind = SearchKind::Half;
                std::string f = kv.at("flavor");
                t.flavor = f == "A" ? Flavor::A : f == "D" ? Flavor::D : Flavor::B;
                parsed = true;
            }
        } catch (const std::exception&) {
            parsed = false;
        }
        if (!parsed || t.id() != id) throw Error(ErrorCode::FixtureInvalid, "unparseable task id '" + id + "'");
        if (modulus != t.modulus()) throw Error(ErrorCode::FixtureInvalid, id + ": modulus mismatch");
        auto pieces = parse_pieces(body, modulus);
        validate_solution(t, pieces);
        store.entries_[id] = std::move(pieces);
        id.clear();
        body.clear();
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("task ", 0) == 0) {
            flush();
            id = line.substr(5);
        } else if (line.rfind("modulus ", 0) == 0) {
            modulus = std::stoi(line.substr(8));
        } else if (line == "end") {
            flush();
        } else {
            body.push_back(line);
        }
    }
    flush();
    return store;
}

void FixtureStore::save(const std::string& path) const {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error(ErrorCode::FixtureInvalid, "cannot write " + path);
        out << kHeader << "\n";
        for (const auto& [id, pieces] : entries_) {
            int modulus = 0;
            for (const auto& p : pieces)
                for (const auto& v : p.vertices()) modulus = v.modulus;
            out << "task " << id << "\n" << "modulus " << modulus << "\n" << format_pieces(pieces) << "end\n";
        }
    }
    std::rename(tmp.c_str(), path.c_str());
}

std::optional<std::vector<Piece>> FixtureStore::find(const SearchTask& task) const {
    auto it = entries_.find(task.id());
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void FixtureStore::put(const SearchTask& task, const std::vector<Piece>& pieces) {
    validate_solution(task, pieces);
    entries_[task.id()] = pieces;
}

SearchResult search_cached(const SearchTask& task, FixtureStore* store) {
    if (store) {
        if (auto hit = store->find(task)) return SearchResult{SearchStatus::Found, *hit, 0};
    }
    auto res = search(task);
    if (res.status == SearchStatus::Found && store) store->put(task, res.pieces);
    return res;
}

}  // namespace hopseat

#include "wseq/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "wseq/assoc.hpp"
#include "wseq/conjugation.hpp"

namespace wseq {

std::string to_string(CondType t) { return t == CondType::Roumieu ? "roumieu" : "beurling"; }

CondType parse_cond_type(const std::string& s) {
    if (s == "roumieu" || s == "I" || s == "R") return CondType::Roumieu;
    if (s == "beurling" || s == "II" || s == "B") return CondType::Beurling;
    throw DomainError("unknown condition type '" + s + "' (roumieu|beurling)");
}

std::string roman(int item) {
    static const char* r[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
    if (item < 1 || item > 8) throw DomainError("item out of range");
    return r[item - 1];
}

// ---------------------------------------------------------------------------
// MatrixContext

MatrixContext::MatrixContext(WeightMatrix M, Config cfg) : M_(std::move(M)), cfg_(std::move(cfg)) {
    if (M_.size() == 0) throw DomainError("empty weight matrix");
}

namespace {

WeightSequence make_entry(const WeightMatrix& M, double x, int J) {
    auto it = std::find(M.indices.begin(), M.indices.end(), x);
    if (it != M.indices.end()) return extended(M.sequences[std::size_t(it - M.indices.begin())], J);
    if (!M.generator) throw DomainError("index " + std::to_string(x) + " is not in the matrix");
    return (*M.generator)(x, J);
}

int native_J(const WeightMatrix& M, double x) {
    auto it = std::find(M.indices.begin(), M.indices.end(), x);
    return it == M.indices.end() ? 0 : M.sequences[std::size_t(it - M.indices.begin())].J();
}

}  // namespace

const WeightSequence& MatrixContext::seq(double x, int J) {
    auto key = std::make_pair(x, J);
    auto it = seqs_.find(key);
    if (it != seqs_.end()) return it->second;
    return seqs_.emplace(key, make_entry(M_, x, J)).first->second;
}

const WeightFunction& MatrixContext::weight(double x, int J_min) {
    const int Jw = std::max(cfg_.J_eval, J_min);
    auto it = weights_.find(x);
    if (it != weights_.end() && it->second.first >= Jw) return it->second.second;
    WeightSequence base;
    try {
        base = make_entry(M_, x, Jw);
    } catch (const HorizonError&) {
        // tabulation-only entry: the weight's horizon is mu_J of the stored table
        base = make_entry(M_, x, native_J(M_, x));
    }
    weights_[x] = {Jw, associated_weight(base)};
    return weights_[x].second;
}

const WeightSequence& MatrixContext::multi(double x, double l, int J) {
    auto key = std::make_pair(std::make_pair(x, l), J);
    auto it = multis_.find(key);
    if (it != multis_.end()) return it->second;
    const int Jm = int(std::ceil(l * J)) + 2;
    return multis_.emplace(key, multi_index_sequence(make_entry(M_, x, Jm), l, J)).first->second;
}

std::vector<double> MatrixContext::candidates(double x, CondType t) const {
    std::vector<double> out;
    for (double y : M_.indices)
        if (t == CondType::Roumieu ? y >= x : y <= x) out.push_back(y);
    return out;
}

std::vector<double> MatrixContext::halo(CondType t) const {
    if (!M_.generator || M_.is_singleton()) return {};
    const std::vector<double> ys = t == CondType::Roumieu
                                       ? std::vector<double>{M_.indices.back() * 2, M_.indices.back() * 4}
                                       : std::vector<double>{M_.indices.front() / 2, M_.indices.front() / 4};
    // families with a bounded parameter range (geom-matrix needs C >= 1) drop the rest
    std::vector<double> out;
    for (double y : ys) {
        try {
            (*M_.generator)(y, 2);
            out.push_back(y);
        } catch (const DomainError&) {
        }
    }
    return out;
}

bool MatrixContext::extendable() const {
    if (!cfg_.extension_check) return false;
    for (const auto& s : M_.sequences)
        if (!s.has_generator()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// decision helpers

namespace {

struct Samples {
    std::vector<double> u;  // log of the argument
    std::vector<double> v;
};
using Sampler = std::function<Samples(int J)>;

Samples int_samples(int J, const std::function<double(int)>& f) {
    Samples s;
    for (int j = 1; j <= J; ++j) {
        s.u.push_back(std::log(double(j)));
        s.v.push_back(f(j));
    }
    return s;
}

// geometric real grid on [1, J]
Samples real_samples(int J, int n, const std::function<double(double)>& f) {
    Samples s;
    for (int i = 0; i < n; ++i) {
        double u = std::log(double(J)) * i / (n - 1);
        s.u.push_back(u);
        s.v.push_back(f(std::exp(u)));
    }
    return s;
}

struct Cell {
    Verdict v = Verdict::False;
    json w = json::object();
};

using Pass = std::function<bool(const TailEstimate&)>;

Cell decide(const Sampler& s, TailMode mode, const Pass& pass, const Config& cfg, bool ext) {
    Samples a = s(cfg.J);
    TailEstimate e = tail_limit_log(a.u, a.v, mode, cfg.kappa_div);
    const bool p = pass(e);
    Cell c;
    c.v = verdict_from_bool(p);
    c.w = {{"tail", to_json(e)}};
    if (mode == TailMode::Limsup) c.w["sup"] = *std::max_element(a.v.begin(), a.v.end());
    if (ext) {
        try {
            Samples b = s(2 * cfg.J);
            TailEstimate e2 = tail_limit_log(b.u, b.v, mode, cfg.kappa_div);
            const bool p2 = pass(e2);
            c.w["extension_agrees"] = p == p2;
            if (p != p2) {
                // pre-asymptotic at J: accept the 2J verdict only if 4J confirms it
                c.v = Verdict::Inconclusive;
                Samples d = s(4 * cfg.J);
                TailEstimate e4 = tail_limit_log(d.u, d.v, mode, cfg.kappa_div);
                if (pass(e4) == p2) {
                    c.v = verdict_from_bool(p2);
                    c.w = {{"tail", to_json(e4)}, {"escalated_J", 4 * cfg.J}, {"extension_agrees", true}};
                }
            }
        } catch (const HorizonError&) {
            c.w["extension"] = "horizon";
        }
    }
    return c;
}

Pass bounded_pass() {
    return [](const TailEstimate& e) { return !e.plus_inf(); };
}

Pass liminf_gt(double thr) {
    return [thr](const TailEstimate& e) { return e.plus_inf() || (!e.minus_inf() && e.estimate > thr); };
}

Cell decide_bounded(const Sampler& s, const Config& cfg, bool ext) {
    return decide(s, TailMode::Limsup, bounded_pass(), cfg, ext);
}

// y grid on [lo, hi] for the weight-function side; HorizonError if too short.
Samples y_samples(double lo, double hi, int n, const std::function<double(double)>& f) {
    if (!(hi - lo > 1e-6)) throw HorizonError("weight range too short for the requested shift");
    Samples s;
    s.u = linspace(lo, hi, n);
    for (double y : s.u) s.v.push_back(f(y));
    return s;
}

using CellFn = std::function<Cell(double a, double b)>;

// For every index x the first candidate y (sampled entries ascending, then the halo)
// whose cell passes. The cell sees a = the index bounded from above (x for Roumieu,
// y for Beurling) and b = the other one.
ConditionVerdict forall_exists(MatrixContext& ctx, CondType t, const std::string& name, const CellFn& cell) {
    const WeightMatrix& M = ctx.matrix();
    ConditionVerdict r;
    r.condition = name;
    r.J = ctx.config().J;
    r.grids = {{"indices", M.indices}, {"halo", ctx.halo(t)}, {"type", to_string(t)}};
    Verdict all = Verdict::True;
    for (double x : M.indices) {
        Verdict best = Verdict::False;
        json tried = json::array();
        auto attempt = [&](double y, bool halo) {
            const double a = t == CondType::Roumieu ? x : y;
            const double b = t == CondType::Roumieu ? y : x;
            Cell c;
            try {
                c = cell(a, b);
            } catch (const HorizonError& e) {
                c.v = Verdict::Inconclusive;
                c.w = {{"horizon", e.what()}};
            }
            if (c.v == Verdict::True) {
                json w = c.w;
                w["x"] = x;
                w["y"] = y;
                if (halo) w["halo"] = true;
                r.witnesses.push_back(w);
                return true;
            }
            if (c.v == Verdict::Inconclusive) best = Verdict::Inconclusive;
            json d = c.w;
            d["y"] = y;
            d["verdict"] = to_string(c.v);
            tried.push_back(d);
            return false;
        };
        bool found = false;
        for (double y : ctx.candidates(x, t))
            if ((found = attempt(y, false))) break;
        if (!found)
            for (double y : ctx.halo(t))
                if ((found = attempt(y, true))) break;
        if (found)
            best = Verdict::True;
        else
            r.witnesses.push_back({{"x", x}, {"y", nullptr}, {"tried", tried}});
        all = verdict_and(all, best);
    }
    r.verdict = all;
    return r;
}

using ParamFn = std::function<ConditionVerdict(double)>;

// forall p in grid; stops at the first false.
ConditionVerdict forall_param(const std::string& name, const std::string& key, const std::vector<double>& grid,
                              const ParamFn& fn) {
    ConditionVerdict r;
    r.condition = name;
    r.verdict = Verdict::True;
    json per = json::array();
    for (double p : grid) {
        ConditionVerdict v = fn(p);
        r.J = v.J;
        r.grids = v.grids;
        per.push_back({{key, p}, {"verdict", to_string(v.verdict)}, {"witnesses", v.witnesses}});
        r.verdict = verdict_and(r.verdict, v.verdict);
        if (r.verdict == Verdict::False) break;
    }
    r.grids[key + "_grid"] = grid;
    r.witnesses = per;
    return r;
}

// exists p in grid (ascending); stops at the first true.
ConditionVerdict exists_param(const std::string& name, const std::string& key, const std::vector<double>& grid,
                              const ParamFn& fn) {
    ConditionVerdict r;
    r.condition = name;
    r.verdict = Verdict::False;
    json per = json::array();
    for (double p : grid) {
        ConditionVerdict v = fn(p);
        r.J = v.J;
        r.grids = v.grids;
        if (v.is_true()) {
            r.verdict = Verdict::True;
            r.witnesses = v.witnesses;
            for (auto& w : r.witnesses) w[key] = p;
            break;
        }
        if (v.verdict == Verdict::Inconclusive) r.verdict = Verdict::Inconclusive;
        per.push_back({{key, p}, {"verdict", to_string(v.verdict)}, {"witnesses", v.witnesses}});
    }
    if (!r.is_true()) r.witnesses = per;
    r.grids[key + "_grid"] = grid;
    return r;
}

std::string type_tag(CondType t) { return t == CondType::Roumieu ? "I" : "II"; }

// --- shared cell bodies ---------------------------------------------------

// j log C + log M^a_j - log M^b_j bounded above
Cell cell_L(MatrixContext& ctx, double a, double b, double C) {
    const double lc = std::log(C);
    Sampler s = [&, a, b, lc](int J) {
        const WeightSequence& A = ctx.seq(a, J);
        const WeightSequence& B = ctx.seq(b, J);
        return int_samples(J, [&](int j) { return j * lc + A.log_M(j) - B.log_M(j); });
    };
    return decide_bounded(s, ctx.config(), ctx.extendable());
}

// (log M^a_{2j} - 2 log M^b_j) / (2j) bounded above
Cell cell_mg(MatrixContext& ctx, double a, double b) {
    Sampler s = [&, a, b](int J) {
        const WeightSequence& A = ctx.seq(a, 2 * J);
        const WeightSequence& B = ctx.seq(b, J);
        return int_samples(J, [&](int j) { return (A.log_M(2 * j) - 2 * B.log_M(j)) / (2.0 * j); });
    };
    return decide_bounded(s, ctx.config(), ctx.extendable());
}

// omega_b(C t) - omega_a(t) bounded above
Cell cell_omega_shift(MatrixContext& ctx, double a, double b, double C) {
    const WeightFunction& wa = ctx.weight(a);
    const WeightFunction& wb = ctx.weight(b);
    const double lc = std::log(C);
    const double hi = std::min(wa.y_horizon(), wb.y_horizon() - lc);
    Samples s = y_samples(0.0, hi, ctx.config().t_points, [&](double y) { return wb.phi(y + lc) - wa.phi(y); });
    Sampler fixed = [s](int) { return s; };
    return decide_bounded(fixed, ctx.config(), false);
}

// limsup omega_b(h t) / omega_a(t) finite
Cell ratio_cell(const WeightFunction& wa, const WeightFunction& wb, double h, const Config& cfg) {
    const double lh = std::log(h);
    const double lo = wa.y_at_level(1.0);
    const double hi = std::min(wa.y_horizon(), wb.y_horizon() - lh);
    Samples s = y_samples(lo, hi, cfg.t_points, [&](double y) { return wb.phi(y + lh) / wa.phi(y); });
    Sampler fixed = [s](int) { return s; };
    Cell c = decide_bounded(fixed, cfg, false);
    c.w["h"] = h;
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// single-purpose checks

ConditionVerdict check_mg_single(const WeightSequence& M, const Config& cfg) {
    ConditionVerdict r;
    r.condition = "mg";
    r.J = cfg.J;
    Sampler s = [&](int J) {
        // a bare table only reaches j <= J/2
        if (!M.has_generator()) J = std::min(J, M.J() / 2);
        WeightSequence A = extended(M, 2 * J);
        return int_samples(J, [&](int j) { return (A.log_M(2 * j) - 2 * A.log_M(j)) / (2.0 * j); });
    };
    Cell c;
    try {
        c = decide_bounded(s, cfg, cfg.extension_check && M.has_generator());
    } catch (const HorizonError& e) {
        c.v = Verdict::Inconclusive;
        c.w = {{"horizon", e.what()}};
    }
    r.verdict = c.v;
    r.witnesses = json::array({c.w});
    return r;
}

ConditionVerdict check_matrix_mg(const WeightMatrix& M, CondType t, const Config& cfg) {
    MatrixContext ctx(M, cfg);
    ConditionVerdict r = forall_exists(ctx, t, "mg-" + to_string(t),
                                       [&](double a, double b) { return cell_mg(ctx, a, b); });
    return r;
}

ConditionVerdict check_matrix_L(const WeightMatrix& M, CondType t, const Config& cfg) {
    MatrixContext ctx(M, cfg);
    return forall_exists(ctx, t, "L-" + to_string(t), [&](double a, double b) { return cell_L(ctx, a, b, 2.0); });
}

ConditionVerdict check_mixed_omega1(const std::vector<std::pair<double, WeightFunction>>& ws, CondType t,
                                    const Config& cfg) {
    if (ws.empty()) throw DomainError("empty weight-function matrix");
    ConditionVerdict r;
    r.condition = "mixed-omega1-" + to_string(t);
    Verdict all = Verdict::True;
    json idx = json::array();
    for (const auto& [x, wx] : ws) {
        idx.push_back(x);
        Verdict best = Verdict::False;
        bool found = false;
        for (const auto& [y, wy] : ws) {
            if (t == CondType::Roumieu ? y < x : y > x) continue;
            const WeightFunction& wa = t == CondType::Roumieu ? wx : wy;
            const WeightFunction& wb = t == CondType::Roumieu ? wy : wx;
            Cell c;
            try {
                c = ratio_cell(wa, wb, 2.0, cfg);
            } catch (const HorizonError& e) {
                c.v = Verdict::Inconclusive;
                c.w = {{"horizon", e.what()}};
            }
            if (c.v == Verdict::True) {
                c.w["x"] = x;
                c.w["y"] = y;
                r.witnesses.push_back(c.w);
                found = true;
                break;
            }
            if (c.v == Verdict::Inconclusive) best = Verdict::Inconclusive;
        }
        if (found)
            best = Verdict::True;
        else
            r.witnesses.push_back({{"x", x}, {"y", nullptr}});
        all = verdict_and(all, best);
    }
    r.verdict = all;
    r.grids = {{"indices", idx}, {"t_points", cfg.t_points}};
    return r;
}

ConditionVerdict check_mixed_omega1(const WeightMatrix& M, CondType t, const Config& cfg) {
    MatrixContext ctx(M, cfg);
    ConditionVerdict r = check_thm32_condition(ctx, t, 2);
    r.condition = "mixed-omega1-" + to_string(t);
    return r;
}

// ---------------------------------------------------------------------------
// Lemma-type L equivalences

ConditionVerdict check_lemma31_condition(MatrixContext& ctx, CondType t, int item) {
    const Config& cfg = ctx.config();
    const std::string name = "lemma31-" + type_tag(t) + "-" + roman(item);
    switch (item) {
        case 1:
            return forall_param(name, "C", cfg.r_grid, [&](double C) {
                return forall_exists(ctx, t, name, [&, C](double a, double b) { return cell_L(ctx, a, b, C); });
            });
        case 2: {
            ConditionVerdict r =
                forall_exists(ctx, t, name, [&](double a, double b) { return cell_L(ctx, a, b, 2.0); });
            r.grids["C"] = 2.0;
            return r;
        }
        case 3: {
            ConditionVerdict r =
                forall_exists(ctx, t, name, [&](double a, double b) { return cell_omega_shift(ctx, a, b, 2.0); });
            r.grids["C"] = 2.0;
            return r;
        }
        case 4:
            return forall_param(name, "C", cfg.r_grid, [&](double C) {
                return forall_exists(ctx, t, name,
                                     [&, C](double a, double b) { return cell_omega_shift(ctx, a, b, C); });
            });
        default: throw DomainError("lemma31 has items 1..4");
    }
}

// ---------------------------------------------------------------------------
// mixed (omega_1) equivalences

namespace {

// liminf (1/(Lj)) log M^b_{Lj} - (1/j) log M^a_j > log r for some L
Cell cell_root_ratio(MatrixContext& ctx, double a, double b, double r) {
    const Config& cfg = ctx.config();
    Cell last;
    for (int L = 1; L <= cfg.L_max; ++L) {
        Sampler s = [&, a, b, L](int J) {
            const WeightSequence& A = ctx.seq(a, J);
            const WeightSequence& B = ctx.seq(b, L * J);
            return int_samples(J, [&](int j) { return B.log_M(L * j) / (L * j) - A.log_M(j) / j; });
        };
        Cell c = decide(s, TailMode::Liminf, liminf_gt(std::log(r)), cfg, ctx.extendable());
        c.w["L"] = L;
        if (c.v == Verdict::True) return c;
        if (c.v == Verdict::Inconclusive || last.v != Verdict::Inconclusive) last = c;
    }
    return last;
}

// exists B (resp. b = a 2^k): j log C + log M^{a;pa}_j - log M^{b;pb}_j bounded, for every
// a-parameter in `as` (item v) or the single one given (item vi).
Cell cell_multi(MatrixContext& ctx, CondType t, double a, double b, double C, const std::vector<double>& as) {
    const Config& cfg = ctx.config();
    const double lc = std::log(C);
    Verdict best = Verdict::False;
    json fails = json::array();
    for (int k = 0; k <= cfg.B_max_exp; ++k) {
        const double B = std::ldexp(1.0, k);
        Verdict all = Verdict::True;
        json per = json::array();
        for (double al : as) {
            const double pa = t == CondType::Roumieu ? al : al / B;
            const double pb = t == CondType::Roumieu ? al * B : al;
            Sampler s = [&, a, b, pa, pb, lc](int J) {
                const WeightSequence& A = ctx.multi(a, pa, J);
                const WeightSequence& Bs = ctx.multi(b, pb, J);
                return int_samples(J, [&](int j) { return j * lc + A.log_M(j) - Bs.log_M(j); });
            };
            Cell c;
            try {
                c = decide_bounded(s, cfg, ctx.extendable());
            } catch (const HorizonError& e) {
                c.v = Verdict::Inconclusive;
                c.w = {{"horizon", e.what()}};
            }
            json cell = {{"a", al}, {"verdict", to_string(c.v)}};
            if (c.w.contains("horizon")) cell["horizon"] = c.w["horizon"];
            if (c.w.contains("extension_agrees")) cell["extension_agrees"] = c.w["extension_agrees"];
            per.push_back(cell);
            all = verdict_and(all, c.v);
            if (all == Verdict::False) break;
        }
        if (all == Verdict::True) {
            Cell ok;
            ok.v = Verdict::True;
            ok.w = {{"B", B}};
            return ok;
        }
        if (all == Verdict::Inconclusive) best = Verdict::Inconclusive;
        fails.push_back({{"B", B}, {"per_a", per}});
    }
    Cell c;
    c.v = best;
    c.w = {{"B_tried", fails}};
    return c;
}

// conjugate-side L ratio (1/(bj)) phi*_b(bj) - (1/j) phi*_a(j), over integer or real j.
// The Beurling form (1/j) phi*_x(j) - (b/j) phi*_y(j/b) is the same expression after j -> bj,
// which keeps j/b inside the sampled range for large b.
Cell cell_conj_ratio(MatrixContext& ctx, double a, double b, double r, bool real_j) {
    const Config& cfg = ctx.config();
    const double thr = std::log(r);
    Cell last;
    for (double beta : cfg.vii_b_grid) {
        Sampler s = [&, a, b, beta](int J) {
            const WeightFunction& wa = ctx.weight(a, J + 2);
            const WeightFunction& wb = ctx.weight(b, int(std::ceil(beta * J)) + 2);
            auto f = [&](double j) { return phi_star(wb, beta * j) / (beta * j) - phi_star(wa, j) / j; };
            if (real_j) return real_samples(J, 2 * cfg.t_points, f);
            return int_samples(J, [&](int j) { return f(double(j)); });
        };
        Cell c;
        try {
            c = decide(s, TailMode::Liminf, liminf_gt(thr), cfg, ctx.extendable());
        } catch (const HorizonError& e) {
            c.v = Verdict::Inconclusive;
            c.w = {{"horizon", e.what()}};
        }
        c.w["b"] = beta;
        if (c.v == Verdict::True) return c;
        if (c.v == Verdict::Inconclusive || last.v != Verdict::Inconclusive) last = c;
    }
    return last;
}

}  // namespace

ConditionVerdict check_thm32_condition(MatrixContext& ctx, CondType t, int item) {
    const Config& cfg = ctx.config();
    const std::string name = "thm32-" + type_tag(t) + "-" + roman(item);
    auto ratio = [&](double h) {
        return forall_exists(ctx, t, name, [&, h](double a, double b) {
            return ratio_cell(ctx.weight(a), ctx.weight(b), h, cfg);
        });
    };
    auto root = [&](double r) {
        return forall_exists(ctx, t, name, [&, r](double a, double b) { return cell_root_ratio(ctx, a, b, r); });
    };
    auto conj = [&](double r, bool real_j) {
        return forall_exists(ctx, t, name,
                             [&, r, real_j](double a, double b) { return cell_conj_ratio(ctx, a, b, r, real_j); });
    };
    switch (item) {
        case 1: return forall_param(name, "h", cfg.r_grid, ratio);
        case 2: {
            ConditionVerdict r = ratio(2.0);
            r.grids["h"] = 2.0;
            return r;
        }
        case 3: return exists_param(name, "r", cfg.r_grid, root);
        case 4: return forall_param(name, "r", cfg.r_grid, root);
        case 5:
            return forall_param(name, "C", cfg.r_grid, [&](double C) {
                return forall_exists(ctx, t, name,
                                     [&, C](double a, double b) { return cell_multi(ctx, t, a, b, C, cfg.l_grid); });
            });
        case 6:
            return forall_param(name, "C", cfg.r_grid, [&](double C) {
                return forall_param(name, "a", cfg.l_grid, [&, C](double al) {
                    return forall_exists(ctx, t, name, [&, C, al](double a, double b) {
                        return cell_multi(ctx, t, a, b, C, {al});
                    });
                });
            });
        case 7: return forall_param(name, "r", cfg.r_grid, [&](double r) { return conj(r, false); });
        case 8: return forall_param(name, "r", cfg.r_grid, [&](double r) { return conj(r, true); });
        default: throw DomainError("thm32 has items 1..8");
    }
}

// ---------------------------------------------------------------------------
// mixed moderate growth equivalences

namespace {

// max over splits of (log M^a_n - log M^b_j - log M^b_{n-j}) / n
Cell cell_mg_literal(MatrixContext& ctx, double a, double b) {
    Sampler s = [&, a, b](int J) {
        const WeightSequence& A = ctx.seq(a, J);
        const WeightSequence& B = ctx.seq(b, J);
        return int_samples(J, [&](int n) {
            double best = -kInf;
            for (int j = 0; j <= n; ++j) best = std::max(best, A.log_M(n) - B.log_M(j) - B.log_M(n - j));
            return best / n;
        });
    };
    return decide_bounded(s, ctx.config(), ctx.extendable());
}

// exists H: 2 omega_b(t) <= omega_a(H t) + H
Cell cell_omega6_mixed(MatrixContext& ctx, double a, double b) {
    const Config& cfg = ctx.config();
    const WeightFunction& wa = ctx.weight(a);
    const WeightFunction& wb = ctx.weight(b);
    json tried = json::array();
    bool evaluated = false;
    for (double H : cfg.H_grid) {
        const double lh = std::log(H);
        const double hi = std::min(wb.y_horizon(), wa.y_horizon() - lh);
        if (hi < 1.0) {
            tried.push_back({{"H", H}, {"skipped", "horizon"}});
            continue;
        }
        Samples s = y_samples(0.0, hi, cfg.t_points, [&](double y) { return 2 * wb.phi(y) - wa.phi(y + lh); });
        TailEstimate e = tail_limit_log(s.u, s.v, TailMode::Limsup, cfg.kappa_div);
        const double sup = *std::max_element(s.v.begin(), s.v.end());
        evaluated = true;
        if (!e.plus_inf() && sup <= H) {
            Cell c;
            c.v = Verdict::True;
            c.w = {{"H", H}, {"sup", sup}, {"tail", to_json(e)}};
            return c;
        }
        tried.push_back({{"H", H}, {"sup", sup}, {"divergence", to_string(e.divergence)}});
    }
    Cell c;
    c.v = evaluated ? Verdict::False : Verdict::Inconclusive;
    c.w = {{"H_tried", tried}};
    return c;
}

// (1/(jq)) phi*_a(jq) - (1/j) phi*_b(j) bounded above
Cell cell_conj_mg(MatrixContext& ctx, double a, double b, double q, bool real_j) {
    const Config& cfg = ctx.config();
    Sampler s = [&, a, b, q, real_j](int J) {
        const WeightFunction& wa = ctx.weight(a, int(std::ceil(q * J)) + 2);
        const WeightFunction& wb = ctx.weight(b, J + 2);
        auto f = [&](double j) { return phi_star(wa, q * j) / (q * j) - phi_star(wb, j) / j; };
        if (real_j) return real_samples(J, 2 * cfg.t_points, f);
        return int_samples(J, [&](int j) { return f(double(j)); });
    };
    Cell c = decide_bounded(s, cfg, ctx.extendable());
    c.w["q"] = q;
    return c;
}

}  // namespace

ConditionVerdict check_prop41_condition(MatrixContext& ctx, CondType t, int item) {
    const Config& cfg = ctx.config();
    const std::string name = "prop41-" + type_tag(t) + "-" + roman(item);
    switch (item) {
        case 1: return forall_exists(ctx, t, name, [&](double a, double b) { return cell_mg_literal(ctx, a, b); });
        case 2: {
            ConditionVerdict r =
                forall_exists(ctx, t, name, [&](double a, double b) { return cell_omega6_mixed(ctx, a, b); });
            r.grids["H_grid"] = cfg.H_grid;
            return r;
        }
        case 3: return forall_exists(ctx, t, name, [&](double a, double b) { return cell_mg(ctx, a, b); });
        case 4:
        case 5: {
            const bool real_j = item == 5;
            return exists_param(name, "q", cfg.mg_q_grid, [&](double q) {
                return forall_exists(ctx, t, name, [&, q, real_j](double a, double b) {
                    return cell_conj_mg(ctx, a, b, q, real_j);
                });
            });
        }
        default: throw DomainError("prop41 has items 1..5");
    }
}

ConditionVerdict check_lemma31_condition(const WeightMatrix& M, CondType t, int item, const Config& cfg) {
    MatrixContext ctx(M, cfg);
    return check_lemma31_condition(ctx, t, item);
}

ConditionVerdict check_thm32_condition(const WeightMatrix& M, CondType t, int item, const Config& cfg) {
    MatrixContext ctx(M, cfg);
    return check_thm32_condition(ctx, t, item);
}

ConditionVerdict check_prop41_condition(const WeightMatrix& M, CondType t, int item, const Config& cfg) {
    MatrixContext ctx(M, cfg);
    return check_prop41_condition(ctx, t, item);
}

std::vector<std::string> condition_ids() {
    std::vector<std::string> ids = {"L-roumieu", "L-beurling", "mg-roumieu", "mg-beurling",
                                    "mixed-omega1-roumieu", "mixed-omega1-beurling"};
    for (std::string tt : {"I", "II"}) {
        for (int i = 1; i <= 4; ++i) ids.push_back("lemma31-" + tt + "-" + roman(i));
        for (int i = 1; i <= 8; ++i) ids.push_back("thm32-" + tt + "-" + roman(i));
        for (int i = 1; i <= 5; ++i) ids.push_back("prop41-" + tt + "-" + roman(i));
    }
    return ids;
}

ConditionVerdict check_condition(const std::string& id, MatrixContext& ctx) {
    auto dash = id.rfind('-');
    if (dash == std::string::npos) throw DomainError("unknown condition '" + id + "'");
    const std::string head = id.substr(0, dash), tail = id.substr(dash + 1);
    if (head == "L") return check_matrix_L(ctx.matrix(), parse_cond_type(tail), ctx.config());
    if (head == "mg") return check_matrix_mg(ctx.matrix(), parse_cond_type(tail), ctx.config());
    if (head == "mixed-omega1") {
        ConditionVerdict r = check_thm32_condition(ctx, parse_cond_type(tail), 2);
        r.condition = id;
        return r;
    }
    // <suite>-<I|II>-<roman>
    auto dash2 = head.rfind('-');
    if (dash2 == std::string::npos) throw DomainError("unknown condition '" + id + "'");
    const std::string suite = head.substr(0, dash2);
    const CondType t = parse_cond_type(head.substr(dash2 + 1));
    int item = 0;
    for (int i = 1; i <= 8; ++i)
        if (roman(i) == tail) item = i;
    if (item == 0) throw DomainError("unknown item '" + tail + "'");
    if (suite == "lemma31") return check_lemma31_condition(ctx, t, item);
    if (suite == "thm32") return check_thm32_condition(ctx, t, item);
    if (suite == "prop41") return check_prop41_condition(ctx, t, item);
    throw DomainError("unknown condition '" + id + "'");
}

}  // namespace wseq

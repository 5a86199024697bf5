#include "wseq/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "wseq/conjugation.hpp"
#include "wseq/indices.hpp"

namespace wseq {

Verdict agreement_of(const std::vector<Verdict>& vs) {
    bool t = false, f = false, inc = false;
    for (Verdict v : vs) {
        t |= v == Verdict::True;
        f |= v == Verdict::False;
        inc |= v == Verdict::Inconclusive;
    }
    if (t && f) return Verdict::False;
    if (inc) return Verdict::Inconclusive;
    return Verdict::True;
}

std::vector<std::string> suite_ids() { return {"lemma31", "thm32", "prop41", "thm39", "thm44", "thm52", "thm56"}; }

json to_json(const SuiteReport& r) {
    json cells = json::array();
    for (const auto& c : r.cells)
        cells.push_back({{"type", c.type}, {"id", c.id}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    json classes = json::array();
    for (const auto& k : r.classes) {
        json ids = json::array();
        for (std::size_t m : k.members) ids.push_back(r.cells[m].id);
        classes.push_back({{"name", k.name}, {"members", ids}, {"agreement", to_string(k.agreement)}});
    }
    return json{{"suite", r.suite},         {"subject", r.subject},
                {"cells", cells},           {"classes", classes},
                {"agreement", to_string(r.agreement)}, {"config", r.config},
                {"timestamp", r.timestamp}};
}

namespace {

using PairEval = std::function<std::pair<Verdict, json>(double a, double b)>;

// forall x exists y over sampled candidates (then the halo); a is the index bounded from
// above (x for Roumieu, y for Beurling).
std::pair<Verdict, json> forall_exists_pairs(const std::vector<double>& xs,
                                             const std::function<std::vector<double>(double)>& cands,
                                             CondType t, const PairEval& eval) {
    Verdict all = Verdict::True;
    json per = json::array();
    for (double x : xs) {
        Verdict best = Verdict::False;
        json tried = json::array();
        for (double y : cands(x)) {
            const double a = t == CondType::Roumieu ? x : y;
            const double b = t == CondType::Roumieu ? y : x;
            std::pair<Verdict, json> r;
            try {
                r = eval(a, b);
            } catch (const HorizonError& e) {
                r = {Verdict::Inconclusive, {{"horizon", e.what()}}};
            }
            tried.push_back({{"y", y}, {"verdict", to_string(r.first)}, {"detail", r.second}});
            if (r.first == Verdict::True) {
                best = Verdict::True;
                break;
            }
            if (r.first == Verdict::Inconclusive) best = Verdict::Inconclusive;
        }
        per.push_back({{"x", x}, {"verdict", to_string(best)}, {"tried", tried}});
        all = verdict_and(all, best);
    }
    return {all, per};
}

std::vector<double> with_halo(const MatrixContext& ctx, double x, CondType t) {
    std::vector<double> c = ctx.candidates(x, t);
    for (double h : ctx.halo(t)) c.push_back(h);
    return c;
}

int index_J(const Config& cfg) {
    const double qmax = *std::max_element(cfg.qk_grid.begin(), cfg.qk_grid.end());
    return int(std::ceil(qmax * cfg.J)) + 2;
}

std::pair<Verdict, json> index_pred(const IndexEstimate& e, bool want_finite) {
    const bool ok = want_finite ? !e.infinite() : e.positive();
    return {verdict_from_bool(ok), to_json(e)};
}

// alpha(omega_{M^a}, omega_{M^b}) < inf
PairEval alpha_omega1_cell(MatrixContext& ctx) {
    return [&ctx](double a, double b) {
        return index_pred(alpha_omega1(ctx.weight(a), ctx.weight(b), ctx.config()), true);
    };
}
// beta(M^a, Omega_{M^b}) > 0
PairEval beta_L_cell(MatrixContext& ctx) {
    return [&ctx](double a, double b) {
        const int need = index_J(ctx.config());
        return index_pred(beta_L(ctx.weight(a, need), ctx.weight(b, need), ctx.config()), false);
    };
}
// alpha(M^b, Omega_{M^a}) < inf
PairEval alpha_mg_cell(MatrixContext& ctx) {
    return [&ctx](double a, double b) {
        const int need = index_J(ctx.config());
        return index_pred(alpha_mg(ctx.weight(b, need), ctx.weight(a, need), ctx.config()), true);
    };
}
// beta(omega_{M^b}, omega_{M^a}) > 0
PairEval beta_omega6_cell(MatrixContext& ctx) {
    return [&ctx](double a, double b) {
        return index_pred(beta_omega6(ctx.weight(b), ctx.weight(a), ctx.config()), false);
    };
}

SuiteCell cond_cell(MatrixContext& ctx, CondType t, const std::string& id) {
    SuiteCell c;
    c.type = to_string(t);
    c.id = id;
    ConditionVerdict v = check_condition(id, ctx);
    c.verdict = v.verdict;
    c.detail = to_json(v);
    return c;
}

SuiteCell index_cell(MatrixContext& ctx, CondType t, const std::string& id, const PairEval& eval) {
    SuiteCell c;
    c.type = to_string(t);
    c.id = id;
    auto [v, per] = forall_exists_pairs(ctx.matrix().indices, [&](double x) { return with_halo(ctx, x, t); }, t,
                                        eval);
    c.verdict = v;
    c.detail = {{"per_x", per}};
    return c;
}

// conjunction of two cells under one label
SuiteCell both(const std::string& id, SuiteCell a, SuiteCell b) {
    SuiteCell c;
    c.type = a.type;
    c.id = id;
    c.verdict = verdict_and(a.verdict, b.verdict);
    c.detail = {{a.id, {{"verdict", to_string(a.verdict)}, {"detail", a.detail}}},
                {b.id, {{"verdict", to_string(b.verdict)}, {"detail", b.detail}}}};
    return c;
}

std::string tag(CondType t) { return t == CondType::Roumieu ? "I" : "II"; }

// Weight family {omega^x} for the weight-function-matrix suite, decreasing in x.
std::vector<std::pair<double, WeightFunction>> weight_family(const FamilyDescriptor& d, const Config& cfg) {
    std::vector<std::pair<double, WeightFunction>> ws;
    if (d.kind() == "weight") {
        ws.push_back({1.0, make_weight(d, cfg)});
        return ws;
    }
    if (d.id == "bmt-matrix") {
        FamilyDescriptor w{d.str("weight", "power"), d.params};
        w.params.erase("weight");
        w.params.erase("ls");
        WeightFunction base = make_weight(w, cfg);
        std::vector<double> ls = d.list("ls", cfg.l_grid);
        std::sort(ls.begin(), ls.end());
        for (double l : ls) ws.push_back({l, scaled_weight(base, 1.0 / l)});
        return ws;
    }
    MatrixContext ctx(make_weight_matrix(d, cfg), cfg);
    for (double x : ctx.matrix().indices) ws.push_back({x, ctx.weight(x, index_J(cfg))});
    return ws;
}

void run_type(const std::string& base, CondType t, const FamilyDescriptor& subject, const Config& cfg,
              SuiteReport& rep) {
    const std::size_t first = rep.cells.size();
    auto add = [&](SuiteCell c) { rep.cells.push_back(std::move(c)); };
    if (base == "thm56") {
        auto ws = weight_family(subject, cfg);
        std::vector<WeightFunction> fam;
        for (const auto& p : ws) fam.push_back(p.second);
        WeightMatrix N = matrix_from_weight_family(fam, cfg.J);
        // entries of N carry indices 1..n in the order of ws
        std::vector<double> xs;
        for (std::size_t i = 0; i < ws.size(); ++i) xs.push_back(double(i + 1));
        MatrixContext ctx(N, cfg);
        add(both("i", cond_cell(ctx, t, "mg-" + to_string(t)), cond_cell(ctx, t, "thm32-" + tag(t) + "-ii")));
        auto w_at = [&](double k) -> const WeightFunction& { return ws[std::size_t(k) - 1].second; };
        auto cands = [&](double x) {
            std::vector<double> c;
            for (double y : xs)
                if (t == CondType::Roumieu ? y >= x : y <= x) c.push_back(y);
            return c;
        };
        auto beta = [&](double a, double b) { return index_pred(beta_omega6(w_at(b), w_at(a), cfg), false); };
        auto alpha = [&](double a, double b) { return index_pred(alpha_omega1(w_at(a), w_at(b), cfg), true); };
        SuiteCell cb, ca;
        cb.type = ca.type = to_string(t);
        cb.id = "beta-omega6";
        ca.id = "alpha-omega1";
        auto rb = forall_exists_pairs(xs, cands, t, beta);
        auto ra = forall_exists_pairs(xs, cands, t, alpha);
        cb.verdict = rb.first;
        cb.detail = {{"per_x", rb.second}};
        ca.verdict = ra.first;
        ca.detail = {{"per_x", ra.second}};
        add(both("iii", cb, ca));
        rep.cells.back().detail["source_indices"] = [&] {
            json a = json::array();
            for (const auto& p : ws) a.push_back(p.first);
            return a;
        }();
    } else {
        MatrixContext ctx(make_weight_matrix(subject, cfg), cfg);
        const std::string T = tag(t);
        if (base == "lemma31") {
            for (int i = 1; i <= 4; ++i) add(cond_cell(ctx, t, "lemma31-" + T + "-" + roman(i)));
        } else if (base == "thm32") {
            for (int i = 1; i <= 8; ++i) add(cond_cell(ctx, t, "thm32-" + T + "-" + roman(i)));
        } else if (base == "prop41") {
            for (int i = 1; i <= 5; ++i) add(cond_cell(ctx, t, "prop41-" + T + "-" + roman(i)));
        } else if (base == "thm39") {
            add(cond_cell(ctx, t, "thm32-" + T + "-ii"));
            add(index_cell(ctx, t, "alpha-omega1", alpha_omega1_cell(ctx)));
            add(index_cell(ctx, t, "beta-L", beta_L_cell(ctx)));
        } else if (base == "thm44") {
            add(cond_cell(ctx, t, "prop41-" + T + "-iii"));
            add(index_cell(ctx, t, "alpha-mg", alpha_mg_cell(ctx)));
            add(index_cell(ctx, t, "beta-omega6", beta_omega6_cell(ctx)));
        } else if (base == "thm52") {
            add(both("i", cond_cell(ctx, t, "prop41-" + T + "-iii"), cond_cell(ctx, t, "thm32-" + T + "-ii")));
            add(both("iii", index_cell(ctx, t, "alpha-mg", alpha_mg_cell(ctx)),
                     index_cell(ctx, t, "beta-L", beta_L_cell(ctx))));
            add(both("iv", index_cell(ctx, t, "beta-omega6", beta_omega6_cell(ctx)),
                     index_cell(ctx, t, "alpha-omega1", alpha_omega1_cell(ctx))));
        } else {
            throw DomainError("unknown suite '" + base + "'");
        }
    }
    SuiteClass k;
    k.name = base + "-" + tag(t);
    std::vector<Verdict> vs;
    for (std::size_t i = first; i < rep.cells.size(); ++i) {
        k.members.push_back(i);
        vs.push_back(rep.cells[i].verdict);
    }
    k.agreement = agreement_of(vs);
    rep.classes.push_back(k);
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const FamilyDescriptor& subject, const Config& cfg) {
    std::string base = suite;
    std::vector<CondType> types = {CondType::Roumieu, CondType::Beurling};
    const auto dash = suite.find('-');
    if (dash != std::string::npos) {
        base = suite.substr(0, dash);
        types = {parse_cond_type(suite.substr(dash + 1))};
    }
    const auto ids = suite_ids();
    if (std::find(ids.begin(), ids.end(), base) == ids.end()) throw DomainError("unknown suite '" + suite + "'");

    SuiteReport rep;
    rep.suite = suite;
    rep.subject = to_json(subject);
    rep.config = to_json(cfg);
    rep.timestamp = cfg.timestamp;
    for (CondType t : types) run_type(base, t, subject, cfg, rep);
    std::vector<Verdict> ks;
    for (const auto& k : rep.classes) ks.push_back(k.agreement);
    rep.agreement = Verdict::True;
    for (Verdict v : ks) rep.agreement = verdict_and(rep.agreement, v);
    return rep;
}

}  // namespace wseq

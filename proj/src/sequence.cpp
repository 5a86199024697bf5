#include "wseq/sequence.hpp"

#include <algorithm>
#include <cmath>

namespace wseq {

WeightSequence sequence_from_logs(std::vector<double> log_values, std::string family, json params) {
    if (log_values.empty()) throw DomainError("empty sequence");
    WeightSequence s;
    s.family = std::move(family);
    s.params = std::move(params);
    s.log_values = std::move(log_values);
    return s;
}

WeightSequence sequence_from_generator(std::string family, json params, SeqGenerator gen, int J) {
    if (J < 2) throw DomainError("J must be at least 2");
    WeightSequence s;
    s.family = std::move(family);
    s.params = std::move(params);
    s.log_values = gen(J);
    if (int(s.log_values.size()) != J + 1) throw DomainError("generator returned wrong length");
    s.generator = std::make_shared<const SeqGenerator>(std::move(gen));
    return s;
}

WeightSequence extended(const WeightSequence& M, int J2) {
    if (J2 <= M.J()) {
        WeightSequence s = M;
        s.log_values.resize(std::size_t(J2) + 1);
        return s;
    }
    if (!M.generator)
        throw HorizonError("sequence '" + M.family + "' has no generator beyond J=" +
                           std::to_string(M.J()));
    WeightSequence s = M;
    s.log_values = (*M.generator)(J2);
    return s;
}

QuotientSequence quotients(const WeightSequence& M) {
    QuotientSequence q;
    q.log_mu.assign(M.log_values.size(), 0.0);
    for (std::size_t j = 1; j < M.log_values.size(); ++j)
        q.log_mu[j] = M.log_values[j] - M.log_values[j - 1];
    return q;
}

WeightSequence from_quotients(const QuotientSequence& q) {
    std::vector<double> lv(q.log_mu.size(), 0.0);
    for (std::size_t j = 1; j < lv.size(); ++j) lv[j] = lv[j - 1] + q.log_mu[j];
    return sequence_from_logs(std::move(lv), "from-quotients");
}

bool is_log_convex(const WeightSequence& M, double tol) {
    const auto& v = M.log_values;
    for (std::size_t j = 1; j + 1 < v.size(); ++j)
        if (v[j + 1] + v[j - 1] - 2 * v[j] < -tol * (1.0 + std::fabs(v[j]))) return false;
    return true;
}

ConditionVerdict check_lc(const WeightSequence& M, const Config& cfg) {
    ConditionVerdict r;
    r.condition = "lc";
    r.J = M.J();
    r.grids = {{"root_threshold", std::log(cfg.lc_root_min)}};
    const auto& v = M.log_values;
    auto fail = [&](std::string what, int j) {
        r.verdict = Verdict::False;
        r.diagnostics = {{"violation", std::move(what)}, {"index", j}};
        return r;
    };
    if (std::fabs(v[0]) > 1e-12) return fail("normalization M_0 = 1", 0);
    if (v.size() > 1 && v[1] < -1e-12) return fail("normalization M_1 >= 1", 1);
    for (std::size_t j = 1; j + 1 < v.size(); ++j)
        if (v[j + 1] + v[j - 1] - 2 * v[j] < -1e-12 * (1.0 + std::fabs(v[j])))
            return fail("log-convexity M_{j-1} M_{j+1} >= M_j^2", int(j));
    for (std::size_t j = 2; j < v.size(); ++j)
        if (v[j] / double(j) < v[j - 1] / double(j - 1) - 1e-12 * (1.0 + std::fabs(v[j])))
            return fail("root monotonicity M_j^(1/j) nondecreasing", int(j));
    if (M.J() < 8) {
        r.verdict = Verdict::Inconclusive;
        r.diagnostics = {{"reason", "J < 8: root divergence heuristic needs a longer table"}};
        return r;
    }
    const double thr = std::log(cfg.lc_root_min);
    double root = v.back() / M.J();
    int J_used = M.J();
    if (root < thr && M.generator) {
        // slow families (s < 1, slowvar) only clear the threshold further out
        WeightSequence ext = extended(M, std::max(M.J(), cfg.J_eval));
        const auto& w = ext.log_values;
        for (std::size_t j = v.size(); j < w.size(); ++j)
            if (w[j] / double(j) < w[j - 1] / double(j - 1) - 1e-12 * (1.0 + std::fabs(w[j])))
                return fail("root monotonicity M_j^(1/j) nondecreasing", int(j));
        root = w.back() / ext.J();
        J_used = ext.J();
    }
    r.diagnostics = {{"log_root_at_J", root}, {"J_root", J_used}};
    if (root < thr) return fail("root divergence log(M_J)/J >= log R_min", J_used);
    r.verdict = Verdict::True;
    return r;
}

json to_json(const BoundedDecision& d) {
    return json{{"verdict", to_string(d.verdict)},
                {"tail", to_json(d.tail)},
                {"sup", std::isfinite(d.sup) ? json(d.sup) : json("+inf")},
                {"extension_agrees", d.extension_agrees}};
}

BoundedDecision bounded_above(const std::function<std::vector<double>(int J)>& sample, int J,
                              bool extend, const Config& cfg) {
    auto decide = [&](int Jh, BoundedDecision& d) {
        std::vector<double> vals = sample(Jh);
        std::vector<double> args(vals.size());
        for (std::size_t i = 0; i < args.size(); ++i) args[i] = double(i + 1);
        d.tail = tail_limit(args, vals, TailMode::Limsup, cfg.kappa_div);
        d.sup = *std::max_element(vals.begin(), vals.end());
        return !d.tail.plus_inf();
    };
    BoundedDecision d;
    bool b = decide(J, d);
    d.verdict = verdict_from_bool(b);
    if (extend) {
        BoundedDecision d2;
        bool b2 = false;
        try {
            b2 = decide(2 * J, d2);
        } catch (const HorizonError&) {
            return d;
        }
        d.extension_agrees = b == b2;
        if (!d.extension_agrees) d.verdict = Verdict::Inconclusive;
    }
    return d;
}

namespace {

std::vector<double> root_difference(const WeightSequence& M, const WeightSequence& N, int J) {
    WeightSequence a = extended(M, J), b = extended(N, J);
    std::vector<double> out(static_cast<std::size_t>(J));
    for (int j = 1; j <= J; ++j) out[std::size_t(j - 1)] = (a.log_M(j) - b.log_M(j)) / j;
    return out;
}

}  // namespace

ConditionVerdict preceq(const WeightSequence& M, const WeightSequence& N, const Config& cfg) {
    ConditionVerdict r;
    r.condition = "preceq";
    const int J = std::min(M.J(), N.J());
    r.J = J;
    const bool ext = cfg.extension_check && M.has_generator() && N.has_generator();
    BoundedDecision d = bounded_above([&](int Jh) { return root_difference(M, N, Jh); }, J, ext, cfg);
    r.verdict = d.verdict;
    r.witnesses = json::array({{{"sup_log_ratio_root", d.sup}}});
    r.diagnostics = to_json(d);
    return r;
}

ConditionVerdict equivalent(const WeightSequence& M, const WeightSequence& N, const Config& cfg) {
    ConditionVerdict a = preceq(M, N, cfg), b = preceq(N, M, cfg);
    ConditionVerdict r;
    r.condition = "equivalent";
    r.J = a.J;
    r.verdict = verdict_and(a.verdict, b.verdict);
    r.witnesses = json::array({a.witnesses[0], b.witnesses[0]});
    r.diagnostics = {{"M_preceq_N", a.diagnostics}, {"N_preceq_M", b.diagnostics}};
    return r;
}

WeightMatrix make_matrix(std::vector<double> indices, std::vector<WeightSequence> seqs,
                         std::string family, json params) {
    if (indices.empty()) throw DomainError("empty weight matrix");
    if (indices.size() != seqs.size()) throw DomainError("index/sequence count mismatch");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (!(indices[i] > 0)) throw DomainError("matrix indices must be positive");
        if (i && !(indices[i] > indices[i - 1])) throw DomainError("matrix indices must increase");
    }
    WeightMatrix m;
    m.family = std::move(family);
    m.params = std::move(params);
    m.indices = std::move(indices);
    m.sequences = std::move(seqs);
    return m;
}

bool pointwise_ordered(const WeightMatrix& m, double tol) {
    for (std::size_t i = 1; i < m.size(); ++i) {
        const auto& a = m.sequences[i - 1].log_values;
        const auto& b = m.sequences[i].log_values;
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t j = 0; j < n; ++j)
            if (a[j] > b[j] + tol * (1.0 + std::fabs(b[j]))) return false;
    }
    return true;
}

namespace {

ConditionVerdict matrix_preceq(const WeightMatrix& M, const WeightMatrix& N, bool roumieu,
                               const Config& cfg) {
    if (M.size() == 0 || N.size() == 0) throw DomainError("empty weight matrix");
    ConditionVerdict r;
    r.condition = roumieu ? "matrix-preceq-roumieu" : "matrix-preceq-beurling";
    r.J = std::min(M.sequences[0].J(), N.sequences[0].J());
    r.grids = {{"M_indices", M.indices}, {"N_indices", N.indices}};
    // Roumieu: every M^x lies below some N^y; Beurling: every N^x lies above some M^y.
    const WeightMatrix& outer = roumieu ? M : N;
    const WeightMatrix& inner = roumieu ? N : M;
    Verdict all = Verdict::True;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        Verdict best = Verdict::False;
        for (std::size_t k = 0; k < inner.size(); ++k) {
            ConditionVerdict v = roumieu ? preceq(outer.sequences[i], inner.sequences[k], cfg)
                                         : preceq(inner.sequences[k], outer.sequences[i], cfg);
            if (v.is_true()) {
                r.witnesses.push_back({{"x", outer.indices[i]}, {"y", inner.indices[k]}});
                best = Verdict::True;
                break;
            }
            if (v.verdict == Verdict::Inconclusive) best = Verdict::Inconclusive;
        }
        if (best != Verdict::True) r.witnesses.push_back({{"x", outer.indices[i]}, {"y", nullptr}});
        all = verdict_and(all, best);
    }
    r.verdict = all;
    return r;
}

}  // namespace

ConditionVerdict matrix_preceq_roumieu(const WeightMatrix& M, const WeightMatrix& N,
                                       const Config& cfg) {
    return matrix_preceq(M, N, true, cfg);
}

ConditionVerdict matrix_preceq_beurling(const WeightMatrix& M, const WeightMatrix& N,
                                        const Config& cfg) {
    return matrix_preceq(M, N, false, cfg);
}

}  // namespace wseq

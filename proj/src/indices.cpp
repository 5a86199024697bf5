#include "wseq/indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wseq/conjugation.hpp"
#include "wseq/tail.hpp"

namespace wseq {

std::string to_string(IndexEstimate::State s) {
    switch (s) {
        case IndexEstimate::State::Zero: return "zero";
        case IndexEstimate::State::Infinite: return "infinite";
        default: return "finite";
    }
}

namespace {

json num(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return nullptr;
    return v > 0 ? "+inf" : "-inf";
}

json nums(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

// Raw tail value for one grid parameter, plus the values feeding the bracket.
struct ParamSample {
    bool skipped = false;
    TailEstimate tail;
};

enum class Reduce { Sup, Inf };

double exponent_of(const TailEstimate& e, double lp) {
    if (e.plus_inf()) return kInf;
    if (e.minus_inf()) return -kInf;
    return e.estimate / lp;
}

// Sup-type indices are infinite when the raw values keep a positive intercept
// v(p) ~ c0 + b log p as p -> 1; inf-type ones are zero for a negative intercept.
// Uses the first two evaluated parameters when the second is the square of the first.
double intercept(const std::vector<double>& grid, const std::vector<ParamSample>& s, double* v1_out) {
    int i1 = -1, i2 = -1;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (s[i].skipped) continue;
        if (i1 < 0) {
            i1 = int(i);
            continue;
        }
        if (std::fabs(std::log(grid[i]) - 2 * std::log(grid[std::size_t(i1)])) < 1e-12) i2 = int(i);
        if (i2 >= 0) break;
    }
    if (i1 < 0 || i2 < 0) return std::numeric_limits<double>::quiet_NaN();
    const TailEstimate& a = s[std::size_t(i1)].tail;
    const TailEstimate& b = s[std::size_t(i2)].tail;
    if (a.divergence != Divergence::None || b.divergence != Divergence::None)
        return std::numeric_limits<double>::quiet_NaN();
    *v1_out = a.estimate;
    return 2 * a.estimate - b.estimate;
}

IndexEstimate reduce(const std::string& kind, const std::string& pname, const std::vector<double>& grid,
                     const std::vector<ParamSample>& s, Reduce how, double zero_tol) {
    IndexEstimate r;
    r.kind = kind;
    r.witness_name = pname;
    r.grid = grid;
    int n_eval = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        r.skipped.push_back(s[i].skipped);
        r.exponents.push_back(s[i].skipped ? std::numeric_limits<double>::quiet_NaN()
                                           : exponent_of(s[i].tail, std::log(grid[i])));
        if (!s[i].skipped) ++n_eval;
    }
    if (n_eval == 0) throw HorizonError(kind + ": every grid parameter exceeds the sampled range");

    double v1 = 0;
    const double c0 = intercept(grid, s, &v1);
    auto set_inf = [&](double w) {
        r.state = IndexEstimate::State::Infinite;
        r.value = r.lo = r.hi = kInf;
        r.witness = w;
    };
    auto set_zero = [&](double w) {
        r.state = IndexEstimate::State::Zero;
        r.value = r.lo = r.hi = 0.0;
        r.witness = w;
    };

    if (how == Reduce::Sup) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (!s[i].skipped && r.exponents[i] == kInf) {
                set_inf(grid[i]);
                return r;
            }
        if (std::isfinite(c0) && c0 > 0.5 * v1 && c0 > 1e-6) {
            set_inf(grid[0]);
            r.samples["intercept"] = c0;
            return r;
        }
    } else {
        bool all_inf = true;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (!s[i].skipped && r.exponents[i] != kInf) all_inf = false;
        if (all_inf) {
            set_inf(0.0);
            return r;
        }
        if (std::isfinite(c0) && v1 > 0 && c0 < -0.5 * v1) {
            set_zero(grid[0]);
            r.samples["intercept"] = c0;
            return r;
        }
    }

    // finite candidates; sup keeps the largest exponent, inf the smallest
    int best = -1;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (s[i].skipped || !std::isfinite(r.exponents[i])) continue;
        if (best < 0 || (how == Reduce::Sup ? r.exponents[i] > r.exponents[std::size_t(best)]
                                            : r.exponents[i] < r.exponents[std::size_t(best)]))
            best = int(i);
    }
    bool any_nonpos = false;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (!s[i].skipped && r.exponents[i] <= zero_tol) any_nonpos = true;
    if (how == Reduce::Sup) {
        bool all_nonpos = true;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (!s[i].skipped && !(r.exponents[i] <= zero_tol)) all_nonpos = false;
        if (all_nonpos) {
            set_zero(0.0);
            return r;
        }
    } else if (any_nonpos) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (!s[i].skipped && r.exponents[i] <= zero_tol) {
                set_zero(grid[i]);
                return r;
            }
    }
    const double lp = std::log(grid[std::size_t(best)]);
    const TailEstimate& e = s[std::size_t(best)].tail;
    r.value = r.exponents[std::size_t(best)];
    r.witness = grid[std::size_t(best)];
    r.lo = std::min({e.window25, e.window125, e.estimate}) / lp;
    r.hi = std::max({e.window25, e.window125, e.estimate}) / lp;
    r.lo = std::max(0.0, std::min(r.lo, r.value));
    r.hi = std::max(r.hi, r.value);
    return r;
}

void require_leq(const WeightSequence& M, const WeightSequence& N) {
    const int J = std::min(M.J(), N.J());
    for (int j = 0; j <= J; ++j)
        if (M.log_M(j) > N.log_M(j) + 1e-9 * (1.0 + std::fabs(N.log_M(j))))
            throw DomainError("index precondition M <= N fails at j = " + std::to_string(j));
}

void require_geq(const WeightFunction& sigma, const WeightFunction& omega) {
    const double top = std::min(sigma.y_horizon(), omega.y_horizon());
    for (double y : linspace(0.0, top, 256))
        if (sigma.phi(y) < omega.phi(y) - 1e-9 * (1.0 + std::fabs(omega.phi(y))))
            throw DomainError("index precondition sigma >= omega fails at log t = " + std::to_string(y));
}

// Conjugate-side sample over j = 1..J of (1/(jq)) phi*_A(jq) - (1/j) phi*_B(j).
ParamSample conj_sample(const WeightFunction& A, const WeightFunction& B, double q, TailMode mode,
                        const Config& cfg) {
    ParamSample p;
    std::vector<double> u, v;
    for (int j = 1; j <= cfg.J; ++j) {
        u.push_back(std::log(double(j)));
        v.push_back(phi_star(A, q * j) / (q * j) - phi_star(B, j) / j);
    }
    p.tail = tail_limit_log(u, v, mode, cfg.kappa_div);
    return p;
}

// Ratio-side sample of log(num(Kt) / den(t)) on a linear grid in log t.
ParamSample ratio_sample(const WeightFunction& num_w, const WeightFunction& den_w, double K, TailMode mode,
                         double y_lo, double y_full, const Config& cfg) {
    ParamSample p;
    const double lk = std::log(K);
    const double y_hi = std::min(den_w.y_horizon(), num_w.y_horizon() - lk);
    if (y_hi - y_lo < 0.5 * (y_full - y_lo)) {
        p.skipped = true;
        return p;
    }
    std::vector<double> u = linspace(y_lo, y_hi, 2 * cfg.t_points), v;
    for (double y : u) v.push_back(std::log(num_w.phi(y + lk)) - std::log(den_w.phi(y)));
    p.tail = tail_limit_log(u, v, mode, cfg.kappa_div);
    return p;
}

int conj_J_need(const Config& cfg) {
    const double qmax = *std::max_element(cfg.qk_grid.begin(), cfg.qk_grid.end());
    return int(std::ceil(qmax * cfg.J)) + 2;
}

}  // namespace

json to_json(const IndexEstimate& e) {
    json skipped = json::array();
    for (bool b : e.skipped) skipped.push_back(b);
    json s = e.samples;
    s[e.witness_name + "_grid"] = e.grid;
    return json{{"kind", e.kind},
                {"state", to_string(e.state)},
                {"value", num(e.value)},
                {"bracket", {num(e.lo), num(e.hi)}},
                {"witness", {{e.witness_name, e.witness}}},
                {"exponents", nums(e.exponents)},
                {"skipped", skipped},
                {"samples", s}};
}

WeightFunction index_weight(const WeightSequence& M, const Config& cfg) {
    const int need = std::max(cfg.J_eval, conj_J_need(cfg));
    if (M.J() >= need) return associated_weight(M);
    return associated_weight(extended(M, need));
}

IndexEstimate beta_L(const WeightFunction& wM, const WeightFunction& wN, const Config& cfg) {
    std::vector<ParamSample> s;
    for (double q : cfg.qk_grid) s.push_back(conj_sample(wN, wM, q, TailMode::Liminf, cfg));
    IndexEstimate r = reduce("beta-L", "q", cfg.qk_grid, s, Reduce::Sup, cfg.index_zero_tol);
    r.samples["J"] = cfg.J;
    return r;
}

IndexEstimate beta_L(const WeightSequence& M, const WeightSequence& N, const Config& cfg) {
    require_leq(M, N);
    return beta_L(index_weight(M, cfg), index_weight(N, cfg), cfg);
}

IndexEstimate alpha_mg(const WeightFunction& wN, const WeightFunction& wM, const Config& cfg) {
    std::vector<ParamSample> s;
    for (double q : cfg.qk_grid) s.push_back(conj_sample(wM, wN, q, TailMode::Limsup, cfg));
    IndexEstimate r = reduce("alpha-mg", "q", cfg.qk_grid, s, Reduce::Inf, cfg.index_zero_tol);
    r.samples["J"] = cfg.J;
    return r;
}

IndexEstimate alpha_mg(const WeightSequence& N, const WeightSequence& M, const Config& cfg) {
    require_leq(M, N);
    return alpha_mg(index_weight(N, cfg), index_weight(M, cfg), cfg);
}

IndexEstimate alpha_omega1(const WeightFunction& sigma, const WeightFunction& omega, const Config& cfg) {
    require_geq(sigma, omega);
    const double y_lo = std::max(sigma.y_at_level(1.0), omega.y_at_level(1.0));
    const double y_full = std::min(sigma.y_horizon(), omega.y_horizon());
    std::vector<ParamSample> s;
    for (double K : cfg.qk_grid) s.push_back(ratio_sample(omega, sigma, K, TailMode::Limsup, y_lo, y_full, cfg));
    IndexEstimate r = reduce("alpha-omega1", "K", cfg.qk_grid, s, Reduce::Inf, cfg.index_zero_tol);
    r.samples["log_t_range"] = {y_lo, y_full};
    r.samples["t_points"] = 2 * cfg.t_points;
    return r;
}

IndexEstimate beta_omega6(const WeightFunction& omega, const WeightFunction& sigma, const Config& cfg) {
    require_geq(sigma, omega);
    const double y_lo = std::max(sigma.y_at_level(1.0), omega.y_at_level(1.0));
    const double y_full = std::min(sigma.y_horizon(), omega.y_horizon());
    std::vector<ParamSample> s;
    for (double K : cfg.qk_grid) s.push_back(ratio_sample(sigma, omega, K, TailMode::Liminf, y_lo, y_full, cfg));
    IndexEstimate r = reduce("beta-omega6", "K", cfg.qk_grid, s, Reduce::Sup, cfg.index_zero_tol);
    r.samples["log_t_range"] = {y_lo, y_full};
    r.samples["t_points"] = 2 * cfg.t_points;
    return r;
}

namespace {

ReciprocityReport pair_up(std::string which, IndexEstimate beta, IndexEstimate alpha, const Config& cfg) {
    ReciprocityReport r;
    r.which = std::move(which);
    r.beta = std::move(beta);
    r.alpha = std::move(alpha);
    const auto& b = r.beta;
    const auto& a = r.alpha;
    if ((b.infinite() && a.zero()) || (b.zero() && a.infinite())) {
        r.mode = "extreme";
        r.product = r.product_lo = r.product_hi = std::numeric_limits<double>::quiet_NaN();
        r.verdict = Verdict::True;
    } else if (b.state == IndexEstimate::State::Finite && a.state == IndexEstimate::State::Finite) {
        r.mode = "finite";
        r.product = b.value * a.value;
        r.product_lo = b.lo * a.lo;
        r.product_hi = b.hi * a.hi;
        r.verdict = verdict_from_bool(std::fabs(r.product - 1.0) <= cfg.reciprocity_tol);
    } else {
        r.mode = "mismatch";
        r.product = r.product_lo = r.product_hi = std::numeric_limits<double>::quiet_NaN();
        r.verdict = Verdict::False;
    }
    return r;
}

}  // namespace

json to_json(const ReciprocityReport& r) {
    return json{{"which", r.which},
                {"beta", to_json(r.beta)},
                {"alpha", to_json(r.alpha)},
                {"product", num(r.product)},
                {"product_bracket", {num(r.product_lo), num(r.product_hi)}},
                {"mode", r.mode},
                {"verdict", to_string(r.verdict)}};
}

ReciprocityReport verify_reciprocity_L(const WeightSequence& M, const WeightSequence& N, const Config& cfg) {
    require_leq(M, N);
    const WeightFunction wM = index_weight(M, cfg), wN = index_weight(N, cfg);
    return pair_up("L", beta_L(wM, wN, cfg), alpha_omega1(wM, wN, cfg), cfg);
}

ReciprocityReport verify_reciprocity_mg(const WeightSequence& M, const WeightSequence& N, const Config& cfg) {
    require_leq(M, N);
    const WeightFunction wM = index_weight(M, cfg), wN = index_weight(N, cfg);
    return pair_up("mg", beta_omega6(wN, wM, cfg), alpha_mg(wN, wM, cfg), cfg);
}

}  // namespace wseq

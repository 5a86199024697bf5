#include "wseq/weight_function.hpp"

#include <algorithm>
#include <cmath>

namespace wseq {

WeightFunction::WeightFunction(Kind kind, std::string family, json params,
                               std::shared_ptr<const Impl> impl, double y_horizon, bool omega4)
    : kind_(kind), family_(std::move(family)), params_(std::move(params)), impl_(std::move(impl)),
      y_horizon_(y_horizon), omega4_(omega4) {}

double WeightFunction::operator()(double t) const {
    if (t < 0) throw DomainError("weight function evaluated at negative t");
    if (t == 0) return 0.0;
    return phi(std::log(t));
}

std::string WeightFunction::kind_name() const {
    switch (kind_) {
        case Kind::Table: return "table";
        case Kind::Associated: return "associated";
        default: return "closed-form";
    }
}

double WeightFunction::y_at_level(double level) const {
    double lo = 0.0, hi = y_horizon_;
    if (phi(hi) < level) throw DomainError("weight '" + family_ + "' never reaches level " +
                                           std::to_string(level) + " below its horizon");
    if (phi(lo) >= level) return lo;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (phi(mid) >= level ? hi : lo) = mid;
    }
    return hi;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[std::size_t(i)] = (i == n - 1) ? b : a + (b - a) * double(i) / (n - 1);
    return v;
}

namespace {

struct FnImpl : WeightFunction::Impl {
    std::function<double(double)> f;
    explicit FnImpl(std::function<double(double)> g) : f(std::move(g)) {}
    double phi(double y) const override { return f(y); }
};

struct TableImpl : WeightFunction::Impl {
    std::vector<double> ys, vals;
    double phi(double y) const override {
        if (y <= ys.front()) return vals.front();
        if (y > ys.back() + 1e-12 * (1.0 + std::fabs(ys.back())))
            throw HorizonError("table weight evaluated beyond its last grid point");
        if (y >= ys.back()) return vals.back();
        auto it = std::upper_bound(ys.begin(), ys.end(), y);
        std::size_t i = std::size_t(it - ys.begin());
        double a = (y - ys[i - 1]) / (ys[i] - ys[i - 1]);
        return vals[i - 1] + a * (vals[i] - vals[i - 1]);
    }
};

// omega_M(e^y) = k*y - log M_k, k = #{j >= 1 : log mu_j <= y}.
struct AssocImpl : WeightFunction::Impl {
    std::vector<double> log_mu, log_values;
    bool counting = true;
    double phi(double y) const override {
        const std::size_t J = log_values.size() - 1;
        if (counting) {
            if (y > log_mu[J] + 1e-12 * (1.0 + std::fabs(log_mu[J])))
                throw HorizonError("associated weight evaluated beyond mu_J");
            std::size_t k = std::size_t(std::upper_bound(log_mu.begin() + 1, log_mu.end(), y) -
                                        (log_mu.begin() + 1));
            return double(k) * y - log_values[k];
        }
        double best = 0.0;
        std::size_t arg = 0;
        for (std::size_t j = 1; j <= J; ++j) {
            double v = double(j) * y - log_values[j];
            if (v > best) { best = v; arg = j; }
        }
        if (arg == J) throw HorizonError("associated weight supremum attained at j = J");
        return best;
    }
};

double closed_form_horizon(const std::function<double(double)>& f) {
    const double cap = 1e3, level = 1e12;
    if (f(cap) <= level) return cap;
    double lo = 0.0, hi = cap;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > level ? hi : lo) = mid;
    }
    return lo;
}

}  // namespace

WeightFunction closed_form_weight(std::string family, json params, std::function<double(double)> phi,
                                  bool convex_in_log) {
    double yh = closed_form_horizon(phi);
    return WeightFunction(WeightFunction::Kind::ClosedForm, std::move(family), std::move(params),
                          std::make_shared<FnImpl>(std::move(phi)), yh, convex_in_log);
}

WeightFunction power_weight(double rho) {
    if (!(rho > 0)) throw DomainError("power weight needs rho > 0");
    return closed_form_weight("power", {{"rho", rho}},
                              [rho](double y) { return y <= 0 ? 0.0 : std::expm1(rho * y); }, true);
}

WeightFunction logpower_weight(double s) {
    if (!(s > 0)) throw DomainError("logpower weight needs s > 0");
    return closed_form_weight("logpower", {{"s", s}},
                              [s](double y) { return y <= 0 ? 0.0 : std::pow(y, s); }, s >= 1.0);
}

int first_convexity_violation(const std::vector<double>& ys, const std::vector<double>& ph) {
    for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
        double h1 = ys[i] - ys[i - 1], h2 = ys[i + 1] - ys[i];
        double chord = (h2 * ph[i - 1] + h1 * ph[i + 1]) / (h1 + h2);
        double tol = 1e-9 * (1.0 + std::fabs(ph[i - 1]) + std::fabs(ph[i]) + std::fabs(ph[i + 1]));
        if (ph[i] > chord + tol) return int(i);
    }
    return -1;
}

WeightFunction table_weight(const std::vector<double>& t_grid, const std::vector<double>& values,
                            std::string family, json params) {
    if (t_grid.size() < 3 || t_grid.size() != values.size())
        throw DomainError("table weight needs >= 3 matching grid points");
    auto impl = std::make_shared<TableImpl>();
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0)) throw DomainError("table grid must be positive");
        impl->ys.push_back(std::log(t_grid[i]));
        if (i && !(impl->ys[i] > impl->ys[i - 1])) throw DomainError("table grid must increase");
        if (i && values[i] < values[i - 1]) throw DomainError("table values must be nondecreasing");
    }
    impl->vals = values;
    params["t_grid"] = t_grid;
    params["values"] = values;
    bool convex = first_convexity_violation(impl->ys, impl->vals) < 0;
    double yh = impl->ys.back();
    return WeightFunction(WeightFunction::Kind::Table, std::move(family), std::move(params), impl, yh,
                          convex);
}

WeightFunction associated_weight(const WeightSequence& M) {
    if (M.J() < 2) throw DomainError("associated weight needs J >= 2");
    auto impl = std::make_shared<AssocImpl>();
    impl->log_values = M.log_values;
    impl->log_mu = quotients(M).log_mu;
    impl->counting = is_log_convex(M) && std::fabs(M.log_values[0]) <= 1e-12 &&
                     impl->log_mu[1] >= -1e-12;
    double yh = impl->counting ? impl->log_mu.back()
                               : *std::max_element(impl->log_mu.begin() + 1, impl->log_mu.end());
    json params = {{"source_family", M.family}, {"source_params", M.params}, {"J", M.J()}};
    return WeightFunction(WeightFunction::Kind::Associated, "assoc:" + M.family, params, impl, yh,
                          impl->counting);
}

WeightFunction scaled_weight(const WeightFunction& w, double c) {
    if (!(c > 0)) throw DomainError("scale factor must be positive");
    json params = {{"c", c}, {"base_family", w.family()}, {"base_params", w.params()}};
    auto impl = std::make_shared<FnImpl>([w, c](double y) { return c * w.phi(y); });
    return WeightFunction(w.kind(), "scaled", params, impl, w.y_horizon(), w.omega4_verified());
}

namespace {

// y-samples on [a, b]; throws DomainError when the interval is degenerate.
std::vector<double> sample_ys(double a, double b, const Config& cfg) {
    if (!(b > a)) throw DomainError("sample range is empty (horizon too short)");
    return linspace(a, b, cfg.t_points);
}

}  // namespace

ConditionVerdict check_omega1(const WeightFunction& w, const Config& cfg) {
    ConditionVerdict r;
    r.condition = "omega1";
    const double l2 = std::log(2.0);
    double y0 = w.y_at_level(1.0);
    auto ys = sample_ys(y0, w.y_horizon() - l2, cfg);
    std::vector<double> v;
    for (double y : ys) v.push_back(w.phi(y + l2) / (w.phi(y) + 1.0));
    TailEstimate e = tail_limit_log(ys, v, TailMode::Limsup, cfg.kappa_div);
    r.verdict = verdict_from_bool(!e.plus_inf());
    r.grids = {{"log_t_range", {ys.front(), ys.back()}}, {"points", cfg.t_points}};
    r.witnesses = json::array({{{"L", e.plus_inf() ? json("+inf") : json(e.estimate)}}});
    r.diagnostics = {{"ratio", "omega(2t)/(omega(t)+1)"}, {"tail", to_json(e)}};
    return r;
}

ConditionVerdict check_omega3(const WeightFunction& w, const Config& cfg) {
    ConditionVerdict r;
    r.condition = "omega3";
    double y0 = std::max(w.y_at_level(1.0), 1e-3);
    auto ys = sample_ys(y0, w.y_horizon(), cfg);
    std::vector<double> v;
    for (double y : ys) v.push_back(y / w.phi(y));
    TailEstimate e = tail_limit_log(ys, v, TailMode::Limsup, cfg.kappa_div);
    const double tol = 0.05;
    bool small = e.minus_inf() || e.estimate <= tol;
    bool decreasing = e.blocks[2] <= e.blocks[0] + 1e-12;
    r.verdict = verdict_from_bool(small && decreasing);
    r.grids = {{"log_t_range", {ys.front(), ys.back()}}, {"tolerance", tol}};
    r.diagnostics = {{"ratio", "log(t)/omega(t)"}, {"tail", to_json(e)}};
    return r;
}

ConditionVerdict check_omega4(const WeightFunction& w, const Config& cfg) {
    ConditionVerdict r;
    r.condition = "omega4";
    (void)cfg;
    if (w.kind() == WeightFunction::Kind::Table) {
        // decided on the table nodes at construction
        r.verdict = verdict_from_bool(w.omega4_verified());
        r.grids = {{"nodes", "table"}};
        return r;
    }
    std::vector<double> ys = linspace(0.0, w.y_horizon(), 512);
    std::vector<double> ph;
    for (double y : ys) ph.push_back(w.phi(y));
    int bad = first_convexity_violation(ys, ph);
    r.verdict = verdict_from_bool(bad < 0);
    r.grids = {{"log_t_range", {ys.front(), ys.back()}}, {"points", ys.size()}};
    if (bad >= 0)
        r.diagnostics = {{"violating_triple_log_t",
                          {ys[std::size_t(bad - 1)], ys[std::size_t(bad)], ys[std::size_t(bad + 1)]}}};
    return r;
}

ConditionVerdict check_omega6(const WeightFunction& w, const Config& cfg) {
    ConditionVerdict r;
    r.condition = "omega6";
    r.grids = {{"H_grid", cfg.H_grid}};
    json tried = json::array();
    bool any_evaluated = false;
    for (double H : cfg.H_grid) {
        double lh = std::log(H);
        double top = w.y_horizon() - lh;
        if (top < 1.0) {
            tried.push_back({{"H", H}, {"skipped", "horizon"}});
            continue;
        }
        auto ys = sample_ys(0.0, top, cfg);
        std::vector<double> v;
        for (double y : ys) v.push_back(2.0 * w.phi(y) - w.phi(y + lh));
        TailEstimate e = tail_limit_log(ys, v, TailMode::Limsup, cfg.kappa_div);
        double sup = *std::max_element(v.begin(), v.end());
        any_evaluated = true;
        bool ok = !e.plus_inf() && sup <= H;
        tried.push_back({{"H", H}, {"sup", sup}, {"divergence", to_string(e.divergence)}});
        if (ok) {
            r.verdict = Verdict::True;
            r.witnesses = json::array({{{"H", H}}});
            r.diagnostics = {{"tried", tried}, {"tail", to_json(e)}};
            return r;
        }
    }
    r.verdict = any_evaluated ? Verdict::False : Verdict::Inconclusive;
    r.diagnostics = {{"tried", tried}};
    return r;
}

ConditionVerdict sim_equivalent(const WeightFunction& s, const WeightFunction& t, const Config& cfg) {
    ConditionVerdict r;
    r.condition = "sim";
    double y0 = std::max(s.y_at_level(1.0), t.y_at_level(1.0));
    auto ys = sample_ys(y0, std::min(s.y_horizon(), t.y_horizon()), cfg);
    std::vector<double> a, b;
    for (double y : ys) {
        double u = s.phi(y), v = t.phi(y);
        a.push_back(v / u);
        b.push_back(u / v);
    }
    TailEstimate ea = tail_limit_log(ys, a, TailMode::Limsup, cfg.kappa_div);
    TailEstimate eb = tail_limit_log(ys, b, TailMode::Limsup, cfg.kappa_div);
    r.verdict = verdict_from_bool(!ea.plus_inf() && !eb.plus_inf());
    r.grids = {{"log_t_range", {ys.front(), ys.back()}}};
    r.diagnostics = {{"second_over_first", to_json(ea)}, {"first_over_second", to_json(eb)}};
    return r;
}

}  // namespace wseq

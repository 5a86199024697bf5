#include "wseq/assoc.hpp"

#include <algorithm>
#include <cmath>

namespace wseq {

double omega_M_direct(const WeightSequence& M, double t) {
    if (!(t > 0)) throw DomainError("omega_M needs t > 0");
    const double y = std::log(t);
    double best = 0.0;
    int arg = 0;
    for (int j = 1; j <= M.J(); ++j) {
        double v = j * y - M.log_M(j);
        if (v > best) { best = v; arg = j; }
    }
    if (arg == M.J() && arg > 0) throw HorizonError("omega_M direct supremum attained at j = J");
    return best;
}

double omega_M_at(const WeightSequence& M, double t, int J_cap) {
    if (!(t > 0)) throw DomainError("omega_M needs t > 0");
    if (t <= 1.0) return 0.0;
    const double y = std::log(t);
    WeightSequence cur = M;
    for (;;) {
        WeightFunction w = associated_weight(cur);
        if (y <= w.y_horizon()) {
            try {
                return w.phi(y);
            } catch (const HorizonError&) {
                if (!cur.has_generator()) throw;
            }
        }
        if (!cur.has_generator() || cur.J() >= J_cap)
            throw HorizonError("omega_M: t beyond mu_J and no room to re-tabulate");
        cur = extended(cur, std::min(J_cap, 2 * cur.J()));
    }
}

std::vector<double> geometric_grid(double t_min, double t_max, int points) {
    if (!(t_min > 0) || !(t_max > t_min)) throw DomainError("geometric grid needs 0 < t_min < t_max");
    if (points < 2) throw DomainError("geometric grid needs >= 2 points");
    std::vector<double> g(static_cast<std::size_t>(points));
    const double a = std::log(t_min), b = std::log(t_max);
    for (int i = 0; i < points; ++i)
        g[std::size_t(i)] = i == 0 ? t_min : i == points - 1 ? t_max : std::exp(a + (b - a) * i / (points - 1));
    return g;
}

AssociatedWeightTable omega_M_table(const WeightSequence& M, double t_min, double t_max, int points) {
    if (points < 16) throw DomainError("omega_M table needs >= 16 points");
    AssociatedWeightTable tab;
    tab.t_grid = geometric_grid(t_min, t_max, points);
    tab.source = {{"family", M.family}, {"params", M.params}, {"J", M.J()}};
    tab.sequence = M;
    WeightFunction w = associated_weight(M);
    for (double t : tab.t_grid) {
        double y = std::log(t);
        tab.values.push_back(y <= 0 ? 0.0 : y <= w.y_horizon() ? w.phi(y) : omega_M_at(M, t));
    }
    return tab;
}

AssociatedWeightTable omega_M_table(const WeightSequence& M) {
    if (M.J() < 4) throw DomainError("default omega_M table needs J >= 4");
    double top = std::exp(quotients(M).log_mu[std::size_t(M.J() - 2)]);
    if (!(top > 1.0)) throw DomainError("mu_{J-2} <= 1: no positivity region to tabulate");
    return omega_M_table(M, 1.0, top, 512);
}

WeightFunction AssociatedWeightTable::as_weight() const {
    if (!sequence.log_values.empty()) return associated_weight(sequence);
    return table_weight(t_grid, values, "table", source);
}

json to_json(const AssociatedWeightTable& t) {
    return json{{"source", t.source}, {"t_grid", t.t_grid}, {"values", t.values}};
}

double golden_max(const std::function<double(double)>& f, double a, double b, double* arg, int iters) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && b - a > 1e-14 * (1.0 + std::fabs(a) + std::fabs(b)); ++i) {
        if (fc >= fd) {
            b = d; d = c; fd = fc;
            c = b - g * (b - a); fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + g * (b - a); fd = f(d);
        }
    }
    double x = fc >= fd ? c : d;
    if (arg) *arg = x;
    return std::max(fc, fd);
}

double reconstruct_M(const WeightFunction& w, int j) {
    if (j < 0) throw DomainError("reconstruct_M needs j >= 0");
    const int n = 512;
    const double yh = w.y_horizon();
    auto obj = [&](double y) { return j * y - w.phi(y); };
    std::vector<double> ys = linspace(0.0, yh, n);
    int best = 0;
    double bv = obj(0.0);
    for (int i = 1; i < n; ++i) {
        double v = obj(ys[std::size_t(i)]);
        if (v > bv) { bv = v; best = i; }
    }
    if (best == n - 1) throw HorizonError("reconstruct_M: maximizer at the end of the y range");
    double lo = ys[std::size_t(std::max(best - 1, 0))], hi = ys[std::size_t(best + 1)];
    return std::max(bv, golden_max(obj, lo, hi));
}

double reconstruct_M(const AssociatedWeightTable& t, int j) { return reconstruct_M(t.as_weight(), j); }

}  // namespace wseq

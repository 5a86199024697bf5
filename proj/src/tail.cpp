#include "wseq/tail.hpp"

#include <algorithm>
#include <cmath>

namespace wseq {

std::string to_string(Divergence d) {
    switch (d) {
        case Divergence::PlusInf: return "+inf";
        case Divergence::MinusInf: return "-inf";
        default: return "none";
    }
}

json to_json(const TailEstimate& e) {
    auto num = [](double v) -> json {
        if (std::isfinite(v)) return v;
        return v > 0 ? "+inf" : "-inf";
    };
    return json{{"estimate", num(e.estimate)},
                {"bracket", {num(e.lo), num(e.hi)}},
                {"divergence", to_string(e.divergence)},
                {"window25", e.window25},
                {"window125", e.window125},
                {"blocks", {e.blocks[0], e.blocks[1], e.blocks[2]}},
                {"kappa", e.kappa}};
}

TailEstimate tail_limit(const std::vector<double>& args, const std::vector<double>& values,
                        TailMode mode, double kappa_div) {
    std::vector<double> u(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!(args[i] > 0.0)) throw DomainError("tail_limit: arguments must be positive");
        u[i] = std::log(args[i]);
    }
    return tail_limit_log(u, values, mode, kappa_div);
}

TailEstimate tail_limit_log(const std::vector<double>& u, const std::vector<double>& values,
                            TailMode mode, double kappa_div) {
    const std::size_t n = u.size();
    if (values.size() != n) throw DomainError("tail_limit: size mismatch");
    if (n < 32) throw DomainError("tail_limit: at least 32 samples required");
    for (std::size_t i = 0; i < n; ++i) {
        if (i && !(u[i] > u[i - 1])) throw DomainError("tail_limit: arguments must increase");
        if (std::isnan(values[i])) throw DomainError("tail_limit: NaN sample");
    }
    const bool sup = mode == TailMode::Limsup;
    const double u_last = u.back();
    const double w = (u_last - u.front()) / 8.0;

    double ext[3];
    bool seen[3] = {false, false, false};
    for (std::size_t i = 0; i < n; ++i) {
        double d = u_last - u[i];
        int b;
        if (d <= w) b = 2;
        else if (d <= 2 * w) b = 1;
        else if (d <= 3 * w) b = 0;
        else continue;
        double v = values[i];
        if (!seen[b]) { ext[b] = v; seen[b] = true; }
        else ext[b] = sup ? std::max(ext[b], v) : std::min(ext[b], v);
    }
    if (!seen[0] || !seen[1] || !seen[2]) throw DomainError("tail_limit: empty tail block");

    TailEstimate e;
    for (int b = 0; b < 3; ++b) e.blocks[b] = ext[b];
    e.window125 = ext[2];
    e.window25 = sup ? std::max(ext[1], ext[2]) : std::min(ext[1], ext[2]);
    e.estimate = e.window25;

    const double d2 = ext[1] - ext[0];
    const double d3 = ext[2] - ext[1];
    const double scale = std::max({std::fabs(ext[0]), std::fabs(ext[1]), std::fabs(ext[2])});
    const double tol = 1e-9 * (1.0 + (std::isfinite(scale) ? scale : 0.0));
    const bool rising = d2 > tol && d3 > tol;
    const bool falling = d2 < -tol && d3 < -tol;
    if (rising || falling) {
        e.kappa = d3 / d2;
        if (e.kappa >= kappa_div) {
            e.divergence = rising ? Divergence::PlusInf : Divergence::MinusInf;
            e.estimate = rising ? kInf : -kInf;
        } else {
            e.estimate = ext[2] + d3 * e.kappa / (1.0 - e.kappa);
        }
    }
    e.lo = std::min(e.window25, e.window125);
    e.hi = std::max(e.window25, e.window125);
    e.lo = std::min(e.lo, e.estimate);
    e.hi = std::max(e.hi, e.estimate);
    return e;
}

}  // namespace wseq

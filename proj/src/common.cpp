#include "wseq/common.hpp"

#include <cstdlib>

namespace wseq {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "inconclusive";
    }
}

Verdict verdict_from_bool(bool b) { return b ? Verdict::True : Verdict::False; }

Verdict verdict_and(Verdict a, Verdict b) {
    if (a == Verdict::False || b == Verdict::False) return Verdict::False;
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::True;
}

json to_json(const ConditionVerdict& v) {
    json grids = v.grids;
    grids["J"] = v.J;
    return json{{"condition", v.condition},
                {"verdict", to_string(v.verdict)},
                {"witnesses", v.witnesses},
                {"grids", grids},
                {"diagnostics", v.diagnostics}};
}

std::vector<double> pow_grid(double base, int k0, int k1, int den) {
    std::vector<double> g;
    for (int k = k0; k <= k1; ++k) g.push_back(std::pow(base, double(k) / den));
    return g;
}

Config default_config() {
    Config c;
    if (const char* env = std::getenv("WSEQ_DEFAULT_J")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 32 && v <= 1 << 16) c.J = int(v);
    }
    c.l_grid = pow_grid(2.0, -4, 4);
    c.r_grid = {1.5, 2.0, 4.0};
    c.H_grid = pow_grid(2.0, 1, 20);
    c.qk_grid = pow_grid(2.0, 1, 24, 4);
    c.vii_b_grid = pow_grid(2.0, 0, 8);
    c.mg_q_grid = pow_grid(2.0, 1, 4);
    return c;
}

json to_json(const Config& c) {
    return json{{"J", c.J},
                {"J_eval", c.J_eval},
                {"t_points", c.t_points},
                {"tail_fraction", c.tail_fraction},
                {"kappa_div", c.kappa_div},
                {"lc_root_min", c.lc_root_min},
                {"reciprocity_tol", c.reciprocity_tol},
                {"index_zero_tol", c.index_zero_tol},
                {"extension_check", c.extension_check},
                {"l_grid", c.l_grid},
                {"r_grid", c.r_grid},
                {"H_grid", c.H_grid},
                {"qk_grid", c.qk_grid},
                {"vii_b_grid", c.vii_b_grid},
                {"mg_q_grid", c.mg_q_grid},
                {"L_max", c.L_max},
                {"B_max_exp", c.B_max_exp},
                {"timestamp", c.timestamp}};
}

}  // namespace wseq

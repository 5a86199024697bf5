#include "wseq/conjugation.hpp"

#include <algorithm>
#include <cmath>

#include "wseq/assoc.hpp"

namespace wseq {

double phi_star(const WeightFunction& w, double x, double* argmax) {
    if (x < 0 || std::isnan(x)) throw DomainError("phi_star needs x >= 0");
    const double yh = w.y_horizon();
    if (!(yh > 0)) throw DomainError("weight has an empty evaluation range");
    const bool concave = w.omega4_verified();
    const int n = concave ? 64 : 2048;
    auto obj = [&](double y) { return x * y - w.phi(y); };
    double Y = std::min(1.0, yh);
    std::vector<double> ys;
    int best = 0;
    double bv = 0;
    for (;;) {
        ys = linspace(0.0, Y, n);
        best = 0;
        bv = obj(0.0);
        for (int i = 1; i < n; ++i) {
            double v = obj(ys[std::size_t(i)]);
            if (v > bv) { bv = v; best = i; }
        }
        if (best < n - 1) break;
        if (Y >= yh) {
            // the maximizer may sit within one grid step of the horizon: zoom in
            while (best == n - 1 && yh - ys[std::size_t(n - 2)] > 1e-10 * (1.0 + yh)) {
                ys = linspace(ys[std::size_t(n - 2)], yh, n);
                best = 0;
                bv = obj(ys[0]);
                for (int i = 1; i < n; ++i) {
                    double v = obj(ys[std::size_t(i)]);
                    if (v > bv) { bv = v; best = i; }
                }
            }
            if (best < n - 1) break;
            throw HorizonError("phi_star: argmax at the weight's horizon (x = " + std::to_string(x) + ")");
        }
        Y = std::min(2.0 * Y, yh);
    }
    double arg = ys[std::size_t(best)];
    if (concave) {
        double a = ys[std::size_t(std::max(best - 1, 0))], b = ys[std::size_t(best + 1)], g = 0;
        double v = golden_max(obj, a, b, &g);
        if (v > bv) { bv = v; arg = g; }
    }
    if (argmax) *argmax = arg;
    return bv;
}

std::vector<double> phi_star(const WeightFunction& w, const std::vector<double>& xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(phi_star(w, x));
    return out;
}

json to_json(const ConjugateTable& t) {
    return json{{"source", t.source}, {"x_grid", t.x_grid}, {"values", t.values}};
}

json weight_descriptor(const WeightFunction& w) {
    return json{{"kind", w.kind_name()}, {"family", w.family()}, {"params", w.params()}};
}

ConjugateTable conjugate_table(const WeightFunction& w, const std::vector<double>& x_grid) {
    ConjugateTable t;
    t.source = weight_descriptor(w);
    t.x_grid = x_grid;
    t.values = phi_star(w, x_grid);
    return t;
}

double biconjugate(const ConjugateTable& t, double y) {
    double best = -kInf;
    for (std::size_t i = 0; i < t.x_grid.size(); ++i) best = std::max(best, t.x_grid[i] * y - t.values[i]);
    return best;
}

WeightSequence omega_sequence(const WeightFunction& w, double l, int J) {
    if (!(l > 0)) throw DomainError("matrix parameter l must be positive");
    SeqGenerator gen = [w, l](int Jn) {
        std::vector<double> v(std::size_t(Jn) + 1, 0.0);
        for (int j = 1; j <= Jn; ++j) v[std::size_t(j)] = phi_star(w, l * j) / l;
        return v;
    };
    return sequence_from_generator("omega-matrix", {{"weight", weight_descriptor(w)}, {"l", l}}, gen, J);
}

WeightMatrix associated_matrix(const WeightFunction& w, const std::vector<double>& l_grid, int J) {
    if (l_grid.empty()) throw DomainError("empty l grid");
    if (!check_omega3(w).is_true()) throw DomainError("associated matrix needs (omega_3)");
    if (!w.omega4_verified() && !check_omega4(w).is_true())
        throw DomainError("associated matrix needs (omega_4)");
    std::vector<double> ls = l_grid;
    std::sort(ls.begin(), ls.end());
    std::vector<WeightSequence> seqs;
    for (double l : ls) seqs.push_back(omega_sequence(w, l, J));
    WeightMatrix m = make_matrix(ls, std::move(seqs), "omega-matrix", {{"weight", weight_descriptor(w)}});
    m.generator = std::make_shared<const MatrixGenerator>(
        [w](double l, int Jn) { return omega_sequence(w, l, Jn); });
    return m;
}

WeightSequence multi_index_sequence(const WeightSequence& M, double l, int J) {
    if (!(l > 0)) throw DomainError("multi-index parameter l must be positive");
    if (J < 2) throw DomainError("J must be at least 2");
    if (!is_log_convex(M)) throw DomainError("multi-index construction needs a log-convex sequence");
    int Jm = int(std::ceil(l * J)) + 2;
    WeightFunction w = associated_weight(M.J() >= Jm ? M : extended(M, Jm));
    // flat initial segments (mu_k = 1) leave no evaluation range; look further out
    while (!(w.y_horizon() > 0) && M.has_generator() && Jm < (1 << 20)) {
        Jm *= 2;
        w = associated_weight(extended(M, Jm));
    }
    std::vector<double> v(std::size_t(J) + 1, 0.0);
    for (int j = 1; j <= J; ++j) v[std::size_t(j)] = phi_star(w, l * j) / l;
    json params = {{"source_family", M.family}, {"source_params", M.params}, {"l", l}};
    if (!M.has_generator()) return sequence_from_logs(std::move(v), "multi-index", params);
    WeightSequence base = M;
    WeightSequence s = sequence_from_logs(std::move(v), "multi-index", params);
    s.generator = std::make_shared<const SeqGenerator>(
        [base, l](int Jn) { return multi_index_sequence(base, l, Jn).log_values; });
    return s;
}

json to_json(const SquaredMatrix& m) {
    json cells = json::array();
    for (const auto& c : m.cells)
        cells.push_back({{"x", c.x}, {"l", c.l}, {"log_values", c.seq.log_values}});
    return json{{"cells", cells}, {"pointwise_monotone", m.pointwise_monotone}};
}

SquaredMatrix matrix_squared(const WeightMatrix& M, const std::vector<double>& l_grid, int J) {
    SquaredMatrix out;
    std::vector<double> ls = l_grid;
    std::sort(ls.begin(), ls.end());
    for (std::size_t i = 0; i < M.size(); ++i)
        for (double l : ls) out.cells.push_back({M.indices[i], l, multi_index_sequence(M.sequences[i], l, J)});
    for (const auto& a : out.cells)
        for (const auto& b : out.cells) {
            if (!(a.x <= b.x && a.l <= b.l)) continue;
            for (int j = 0; j <= J; ++j) {
                double u = a.seq.log_M(j), v = b.seq.log_M(j);
                if (u > v + 1e-9 * (1.0 + std::fabs(v))) out.pointwise_monotone = false;
            }
        }
    return out;
}

namespace {

// w_i >= w_{i+1} on the common range
bool weights_decreasing(const std::vector<WeightFunction>& ws) {
    for (std::size_t i = 1; i < ws.size(); ++i) {
        double top = std::min(ws[i - 1].y_horizon(), ws[i].y_horizon());
        for (double y : linspace(0.0, top, 256)) {
            double a = ws[i - 1].phi(y), b = ws[i].phi(y);
            if (b > a + 1e-9 * (1.0 + std::fabs(a))) return false;
        }
    }
    return true;
}

}  // namespace

WeightMatrix matrix_from_weight_family(const std::vector<WeightFunction>& ws, int J) {
    if (ws.empty()) throw DomainError("empty weight family");
    std::vector<std::size_t> order(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) order[i] = i;
    if (!weights_decreasing(ws)) {
        std::vector<WeightFunction> rev(ws.rbegin(), ws.rend());
        if (!weights_decreasing(rev)) throw DomainError("weight family is not monotone in its index");
        std::reverse(order.begin(), order.end());
    }
    std::vector<double> idx;
    std::vector<WeightSequence> seqs;
    json src = json::array();
    for (std::size_t k = 0; k < order.size(); ++k) {
        idx.push_back(double(k + 1));
        seqs.push_back(omega_sequence(ws[order[k]], 1.0, J));
        seqs.back().family = "conjugate";
        src.push_back({{"source_index", order[k]}, {"weight", weight_descriptor(ws[order[k]])}});
    }
    return make_matrix(idx, std::move(seqs), "from-weight-family", {{"entries", src}});
}

}  // namespace wseq

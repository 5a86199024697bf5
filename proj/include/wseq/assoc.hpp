#pragma once

#include <vector>

#include "wseq/common.hpp"
#include "wseq/sequence.hpp"
#include "wseq/weight_function.hpp"

namespace wseq {

// omega_M(t); counting route for log-convex M, direct sup otherwise. Beyond mu_J the
// generator re-tabulates (up to J_cap), else HorizonError.
double omega_M_at(const WeightSequence& M, double t, int J_cap = 1 << 20);

// sup_{1<=j<=J} (j log t - log M_j), clamped below by 0; HorizonError when the argmax is J.
double omega_M_direct(const WeightSequence& M, double t);

struct AssociatedWeightTable {
    json source;  // descriptor of the sequence
    std::vector<double> t_grid;
    std::vector<double> values;
    WeightSequence sequence;  // kept for exact off-grid evaluation

    // Associated weight of the source, or a linear table when no source is attached.
    WeightFunction as_weight() const;
};

json to_json(const AssociatedWeightTable& t);

// Geometric grid on [t_min, t_max].
AssociatedWeightTable omega_M_table(const WeightSequence& M, double t_min, double t_max, int points);
// Default grid [1, mu_{J-2}] with 512 points.
AssociatedWeightTable omega_M_table(const WeightSequence& M);

std::vector<double> geometric_grid(double t_min, double t_max, int points);

// log M_j = sup_{y>=0} (j y - phi(y)); grid scan on [0, y_horizon] plus golden section.
double reconstruct_M(const WeightFunction& w, int j);
double reconstruct_M(const AssociatedWeightTable& t, int j);

// Maximizes a function that is concave on [a, b] by golden-section search.
double golden_max(const std::function<double(double)>& f, double a, double b, double* arg = nullptr,
                  int iters = 200);

}  // namespace wseq

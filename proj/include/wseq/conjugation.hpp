#pragma once

#include <vector>

#include "wseq/common.hpp"
#include "wseq/sequence.hpp"
#include "wseq/weight_function.hpp"

namespace wseq {

// sup_{y>=0} (x y - phi(y)). Golden-section refinement only when (omega_4) is verified.
// HorizonError when the argmax sits at y_horizon.
double phi_star(const WeightFunction& w, double x, double* argmax = nullptr);
std::vector<double> phi_star(const WeightFunction& w, const std::vector<double>& xs);

struct ConjugateTable {
    json source;
    std::vector<double> x_grid;
    std::vector<double> values;
};
json to_json(const ConjugateTable& t);
ConjugateTable conjugate_table(const WeightFunction& w, const std::vector<double>& x_grid);

// phi recovered from a conjugate table: sup_i (x_i y - phi*(x_i)).
double biconjugate(const ConjugateTable& t, double y);

json weight_descriptor(const WeightFunction& w);

// log W^l_j = phi*(l j) / l, j = 0..J.
WeightSequence omega_sequence(const WeightFunction& w, double l, int J);

// Omega = {W^l : l in l_grid}; rejects weights failing (omega_3) or (omega_4).
WeightMatrix associated_matrix(const WeightFunction& w, const std::vector<double>& l_grid, int J);

// M^{;l}_j = exp(phi*_{omega_M}(l j) / l); M is re-tabulated to ceil(l J) + 2 first.
WeightSequence multi_index_sequence(const WeightSequence& M, double l, int J);

struct SquaredCell {
    double x = 0, l = 0;
    WeightSequence seq;
};

struct SquaredMatrix {
    std::vector<SquaredCell> cells;  // lexicographic in (x, l)
    bool pointwise_monotone = true;  // (x, l) <= (x', l') => M^{x;l} <= M^{x';l'}
};
json to_json(const SquaredMatrix& m);

SquaredMatrix matrix_squared(const WeightMatrix& M, const std::vector<double>& l_grid, int J);

// N^x_p = exp(phi*_{omega^x}(p)). Accepts the family in either monotone order and
// returns entries increasing in class size, indexed 1..n.
WeightMatrix matrix_from_weight_family(const std::vector<WeightFunction>& ws, int J);

}  // namespace wseq

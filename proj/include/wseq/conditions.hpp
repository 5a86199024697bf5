#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wseq/common.hpp"
#include "wseq/sequence.hpp"
#include "wseq/weight_function.hpp"

namespace wseq {

enum class CondType { Roumieu, Beurling };
std::string to_string(CondType t);
CondType parse_cond_type(const std::string& s);

// Caches re-tabulated entries, associated weights and multi-index sequences of one
// matrix; shared by all items evaluated on it. Not thread-safe.
class MatrixContext {
public:
    MatrixContext(WeightMatrix M, Config cfg);

    const WeightMatrix& matrix() const { return M_; }
    const Config& config() const { return cfg_; }

    // Entry x (matrix index or generator-produced) tabulated to J.
    const WeightSequence& seq(double x, int J);
    // omega_{M^x} built from M^x tabulated to max(J_eval, J_min).
    const WeightFunction& weight(double x, int J_min = 0);
    // M^{x;l} tabulated to J.
    const WeightSequence& multi(double x, double l, int J);

    // Sampled witness candidates for x: indices >= x (Roumieu) or <= x (Beurling), ascending.
    std::vector<double> candidates(double x, CondType t) const;
    // Generator-produced indices just outside the sample, tried when no sampled entry works.
    std::vector<double> halo(CondType t) const;
    bool extendable() const;

private:
    WeightMatrix M_;
    Config cfg_;
    std::map<std::pair<double, int>, WeightSequence> seqs_;
    std::map<double, std::pair<int, WeightFunction>> weights_;
    std::map<std::pair<std::pair<double, double>, int>, WeightSequence> multis_;
};

ConditionVerdict check_mg_single(const WeightSequence& M, const Config& cfg = default_config());
ConditionVerdict check_matrix_mg(const WeightMatrix& M, CondType t, const Config& cfg = default_config());
ConditionVerdict check_matrix_L(const WeightMatrix& M, CondType t, const Config& cfg = default_config());
// Mixed (omega_1): limsup omega_y(2t)/omega_x(t) (Roumieu, y >= x) or with roles swapped.
ConditionVerdict check_mixed_omega1(const std::vector<std::pair<double, WeightFunction>>& ws, CondType t,
                                    const Config& cfg = default_config());
ConditionVerdict check_mixed_omega1(const WeightMatrix& M, CondType t, const Config& cfg = default_config());

// Items are 1-based: lemma31 1..4, thm32 1..8, prop41 1..5.
ConditionVerdict check_lemma31_condition(MatrixContext& ctx, CondType t, int item);
ConditionVerdict check_thm32_condition(MatrixContext& ctx, CondType t, int item);
ConditionVerdict check_prop41_condition(MatrixContext& ctx, CondType t, int item);
ConditionVerdict check_lemma31_condition(const WeightMatrix& M, CondType t, int item,
                                         const Config& cfg = default_config());
ConditionVerdict check_thm32_condition(const WeightMatrix& M, CondType t, int item,
                                       const Config& cfg = default_config());
ConditionVerdict check_prop41_condition(const WeightMatrix& M, CondType t, int item,
                                        const Config& cfg = default_config());

// "L-roumieu", "mg-beurling", "mixed-omega1-roumieu", "thm32-I-iii", "prop41-II-ii", "lemma31-I-iv", ...
ConditionVerdict check_condition(const std::string& id, MatrixContext& ctx);
std::vector<std::string> condition_ids();

std::string roman(int item);

}  // namespace wseq

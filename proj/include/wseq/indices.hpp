#pragma once

#include <string>
#include <vector>

#include "wseq/common.hpp"
#include "wseq/sequence.hpp"
#include "wseq/weight_function.hpp"

namespace wseq {

struct IndexEstimate {
    enum class State { Finite, Zero, Infinite };

    std::string kind;  // beta-L | alpha-omega1 | alpha-mg | beta-omega6
    State state = State::Finite;
    double value = 0.0;
    double lo = 0.0, hi = 0.0;
    std::string witness_name;  // "q" or "K"
    double witness = 0.0;      // optimizing parameter; 0 when none applies
    std::vector<double> grid;
    // per-parameter exponent estimate (value / log p), +-inf when diagnosed
    std::vector<double> exponents;
    std::vector<bool> skipped;
    json samples = json::object();

    bool infinite() const { return state == State::Infinite; }
    bool zero() const { return state == State::Zero; }
    bool positive() const { return state != State::Zero; }
};

std::string to_string(IndexEstimate::State s);
json to_json(const IndexEstimate& e);

// beta(M, Omega_N) from conjugates of omega_M, omega_N over integer j. Requires M <= N.
IndexEstimate beta_L(const WeightSequence& M, const WeightSequence& N, const Config& cfg = default_config());
// Same with the associated weights supplied (tabulated far enough for q_max * J).
IndexEstimate beta_L(const WeightFunction& wM, const WeightFunction& wN, const Config& cfg = default_config());

// alpha(sigma, omega) from ratios omega(Kt) / sigma(t). Requires sigma >= omega.
IndexEstimate alpha_omega1(const WeightFunction& sigma, const WeightFunction& omega,
                           const Config& cfg = default_config());

// alpha(N, Omega_M) from conjugates. Requires M <= N.
IndexEstimate alpha_mg(const WeightSequence& N, const WeightSequence& M, const Config& cfg = default_config());
IndexEstimate alpha_mg(const WeightFunction& wN, const WeightFunction& wM, const Config& cfg = default_config());

// beta(omega, sigma) from ratios sigma(Kt) / omega(t). Requires sigma >= omega.
IndexEstimate beta_omega6(const WeightFunction& omega, const WeightFunction& sigma,
                          const Config& cfg = default_config());

struct ReciprocityReport {
    std::string which;  // "L" or "mg"
    IndexEstimate beta, alpha;
    // beta * alpha (L) or alpha * beta (mg) with the bracket product; NaN for extreme pairs
    double product = 0.0;
    double product_lo = 0.0, product_hi = 0.0;
    std::string mode;  // finite | extreme | mismatch
    Verdict verdict = Verdict::Inconclusive;
};
json to_json(const ReciprocityReport& r);

// beta(M, Omega_N) against 1 / alpha(omega_M, omega_N).
ReciprocityReport verify_reciprocity_L(const WeightSequence& M, const WeightSequence& N,
                                       const Config& cfg = default_config());
// alpha(N, Omega_M) against 1 / beta(omega_N, omega_M).
ReciprocityReport verify_reciprocity_mg(const WeightSequence& M, const WeightSequence& N,
                                        const Config& cfg = default_config());

// Associated weight of M tabulated far enough for the conjugate-side estimators.
WeightFunction index_weight(const WeightSequence& M, const Config& cfg = default_config());

}  // namespace wseq

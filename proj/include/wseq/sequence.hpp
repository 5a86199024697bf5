#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wseq/common.hpp"
#include "wseq/tail.hpp"

namespace wseq {

// Produces log M_0..log M_J for any requested J.
using SeqGenerator = std::function<std::vector<double>(int J)>;

struct WeightSequence {
    std::string family;
    json params = json::object();
    std::vector<double> log_values;
    std::shared_ptr<const SeqGenerator> generator;

    int J() const { return int(log_values.size()) - 1; }
    double log_M(int j) const { return log_values.at(std::size_t(j)); }
    bool has_generator() const { return bool(generator); }
};

// Sequence from an explicit log-table; no generator.
WeightSequence sequence_from_logs(std::vector<double> log_values, std::string family = "table",
                                  json params = json::object());

WeightSequence sequence_from_generator(std::string family, json params, SeqGenerator gen, int J);

// Same sequence tabulated to J2 (truncates, or re-tabulates through the generator).
WeightSequence extended(const WeightSequence& M, int J2);

struct QuotientSequence {
    std::vector<double> log_mu;  // log_mu[0] = 0
};

QuotientSequence quotients(const WeightSequence& M);

// Cumulative sum of the quotients; inverse of quotients().
WeightSequence from_quotients(const QuotientSequence& q);

bool is_log_convex(const WeightSequence& M, double tol = 1e-12);

ConditionVerdict check_lc(const WeightSequence& M, const Config& cfg = default_config());

// Decides "sup_j f(j) < inf" for f sampled on j = 1..J via the tail rule; when
// every input has a generator the same decision is repeated at 2J.
struct BoundedDecision {
    Verdict verdict = Verdict::Inconclusive;
    TailEstimate tail;
    double sup = 0.0;
    bool extension_agrees = true;
};
json to_json(const BoundedDecision& d);

BoundedDecision bounded_above(const std::function<std::vector<double>(int J)>& sample, int J,
                              bool extend, const Config& cfg);

ConditionVerdict preceq(const WeightSequence& M, const WeightSequence& N,
                        const Config& cfg = default_config());
ConditionVerdict equivalent(const WeightSequence& M, const WeightSequence& N,
                            const Config& cfg = default_config());

// Generator producing the sequence at any positive index and length.
using MatrixGenerator = std::function<WeightSequence(double x, int J)>;

struct WeightMatrix {
    std::string family;
    json params = json::object();
    std::vector<double> indices;
    std::vector<WeightSequence> sequences;
    std::shared_ptr<const MatrixGenerator> generator;

    std::size_t size() const { return indices.size(); }
    bool is_singleton() const { return indices.size() == 1; }
};

WeightMatrix make_matrix(std::vector<double> indices, std::vector<WeightSequence> seqs,
                         std::string family = "table", json params = json::object());

// Pointwise order x <= y  =>  M^x <= M^y on the tabulated range.
bool pointwise_ordered(const WeightMatrix& m, double tol = 1e-9);

ConditionVerdict matrix_preceq_roumieu(const WeightMatrix& M, const WeightMatrix& N,
                                       const Config& cfg = default_config());
ConditionVerdict matrix_preceq_beurling(const WeightMatrix& M, const WeightMatrix& N,
                                        const Config& cfg = default_config());

}  // namespace wseq

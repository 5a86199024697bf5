#pragma once

#include <string>
#include <vector>

#include "wseq/common.hpp"
#include "wseq/sequence.hpp"
#include "wseq/weight_function.hpp"

namespace wseq {

// Parsed "name[:key=v1,v2,...,key2=v]"; a bare token after a list continues the previous key.
struct FamilyDescriptor {
    std::string id;
    json params = json::object();

    std::string kind() const;  // "sequence", "weight" or "matrix"
    double num(const std::string& key, double def) const;
    std::vector<double> list(const std::string& key, std::vector<double> def) const;
    std::string str(const std::string& key, const std::string& def) const;
};

json to_json(const FamilyDescriptor& d);
FamilyDescriptor parse_descriptor(const std::string& spec);
FamilyDescriptor descriptor_from_json(const json& j);
std::string to_string(const FamilyDescriptor& d);

std::vector<FamilyDescriptor> catalog_list();

WeightSequence make_sequence(const FamilyDescriptor& d, int J);
WeightSequence make_sequence(const std::string& spec, int J);
// Weight families directly; sequence families give their associated weight (tabulated to J_eval).
WeightFunction make_weight(const FamilyDescriptor& d, const Config& cfg = default_config());
WeightFunction make_weight(const std::string& spec, const Config& cfg = default_config());
// Matrix families; a sequence family gives a singleton.
WeightMatrix make_weight_matrix(const FamilyDescriptor& d, const Config& cfg = default_config());
WeightMatrix make_weight_matrix(const std::string& spec, const Config& cfg = default_config());

struct ThetaBound {
    int j = 0;
    int K_trunc = 0;
    double log_s = 0;           // log of the truncated sum
    double log_N = 0;           // log N_j
    double log_margin = 0;      // log_s - log_N
    double log_tail_bound = 0;  // bound on the omitted terms k > K_trunc
    Verdict verdict = Verdict::Inconclusive;
};
json to_json(const ThetaBound& b);

// s_j = sum_{k<=K} N_k (2 nu_k)^{j-k}, in the log domain.
ThetaBound theta_derivative_bound(const WeightSequence& N, int j, int K_trunc);

}  // namespace wseq

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wseq {

using json = nlohmann::json;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Raised when a supremum touches the end of the tabulated range.
struct HorizonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Verdict { False, True, Inconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_bool(bool b);
Verdict verdict_and(Verdict a, Verdict b);

struct ConditionVerdict {
    std::string condition;
    Verdict verdict = Verdict::Inconclusive;
    json witnesses = json::array();
    json grids = json::object();
    json diagnostics = json::object();
    int J = 0;

    bool is_true() const { return verdict == Verdict::True; }
    bool is_false() const { return verdict == Verdict::False; }
};

json to_json(const ConditionVerdict& v);

struct Config {
    int J = 256;
    // tabulation length behind associated weights and conjugates
    int J_eval = 32768;
    int t_points = 256;
    double tail_fraction = 0.25;
    double kappa_div = 0.75;
    double lc_root_min = 10.0;
    double reciprocity_tol = 0.10;
    double index_zero_tol = 0.01;  // exponents at or below this are diagnosed as 0
    bool extension_check = true;
    std::vector<double> l_grid;
    std::vector<double> r_grid;   // r, C and h of the ratio conditions
    std::vector<double> H_grid;
    std::vector<double> qk_grid;  // q and K of the growth indices
    std::vector<double> vii_b_grid;
    std::vector<double> mg_q_grid;  // q > 1 of the conjugate mg items
    int L_max = 8;
    int B_max_exp = 4;            // B and b/a range over 2^0..2^B_max_exp
    std::string timestamp;        // empty keeps reports reproducible
};

Config default_config();
json to_json(const Config& c);

// Geometric grid base^{k/den}, k = k0..k1.
std::vector<double> pow_grid(double base, int k0, int k1, int den = 1);

}  // namespace wseq

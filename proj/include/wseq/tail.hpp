#pragma once

#include <vector>

#include "wseq/common.hpp"

namespace wseq {

enum class TailMode { Liminf, Limsup };

enum class Divergence { None, PlusInf, MinusInf };

std::string to_string(Divergence d);

struct TailEstimate {
    double estimate = 0.0;
    double lo = 0.0, hi = 0.0;
    Divergence divergence = Divergence::None;
    double window25 = 0.0;   // extremum over the trailing quarter (log-argument)
    double window125 = 0.0;  // extremum over the trailing eighth
    double blocks[3] = {0, 0, 0};
    double kappa = 0.0;      // ratio of consecutive block increments, 0 without a trend

    bool plus_inf() const { return divergence == Divergence::PlusInf; }
    bool minus_inf() const { return divergence == Divergence::MinusInf; }
};

json to_json(const TailEstimate& e);

// Windows are measured in log(argument); arguments must be positive and strictly
// increasing. Block extrema over the last three eighths drive the trend rule:
// a monotone trend whose increments shrink by less than kappa_div per block is
// diagnosed divergent, a faster-shrinking one is extrapolated geometrically.
TailEstimate tail_limit(const std::vector<double>& args, const std::vector<double>& values,
                        TailMode mode, double kappa_div = 0.75);

// Same rule with log(argument) supplied directly (any strictly increasing reals).
TailEstimate tail_limit_log(const std::vector<double>& log_args, const std::vector<double>& values,
                            TailMode mode, double kappa_div = 0.75);

}  // namespace wseq

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "wseq/sequence.hpp"

namespace testgen {

// Random normalized log-convex sequence: nondecreasing log-quotients, log mu_1 >= 0.
inline wseq::WeightSequence log_convex(std::mt19937& rng, int J) {
    std::uniform_real_distribution<double> step(0.0, 0.6);
    std::vector<double> v(std::size_t(J) + 1, 0.0);
    double lmu = step(rng);
    for (int j = 1; j <= J; ++j) {
        lmu += step(rng);
        v[std::size_t(j)] = v[std::size_t(j - 1)] + lmu;
    }
    return wseq::sequence_from_logs(std::move(v));
}

// Random positive normalized sequence, not necessarily log-convex.
inline wseq::WeightSequence rough(std::mt19937& rng, int J) {
    std::uniform_real_distribution<double> step(-0.5, 2.0);
    std::vector<double> v(std::size_t(J) + 1, 0.0);
    for (int j = 1; j <= J; ++j) v[std::size_t(j)] = v[std::size_t(j - 1)] + step(rng) + 0.1 * j;
    return wseq::sequence_from_logs(std::move(v));
}

inline double log_factorial(int j) { return std::lgamma(j + 1.0); }

}  // namespace testgen

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sirev/model.hpp"
#include "sirev/rational.hpp"
#include "sirev/types.hpp"

namespace sirev {

// All randomness flows from one 64-bit seed so every report is reproducible.
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::mt19937_64 eng;

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng);
    }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng); }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
};

// n pairwise distinct rationals p/q with small numerators and denominators.
std::vector<Rational> random_distinct_rationals(Rng& rng, int n, int num_max = 40,
                                                int den_max = 8);

// a uniform in the middle 80% of the domain; momenta standard normal,
// rescaled so H lands uniformly in [h_min, h_max].
PhasePoint random_phase_point(Rng& rng, const ModelSpec& m, double h_min = 0.1,
                              double h_max = 10.0);

}  // namespace sirev

#pragma once

#include "topfan/fan.hpp"

#include <cstdint>
#include <random>

namespace topfan::testing {

// random complete non-singular fan, n <= 3, m <= 8
TopologicalFan random_valid_fan(std::mt19937_64& rng, bool involutive = false);

std::vector<ZVec> random_unimodular(std::mt19937_64& rng, int n, int steps = 6);
Rational random_rational(std::mt19937_64& rng, int num_range = 5, int den_range = 4);

}  // namespace topfan::testing

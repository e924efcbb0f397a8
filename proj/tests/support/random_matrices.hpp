#ifndef FANFORGE_TESTS_RANDOM_MATRICES_HPP
#define FANFORGE_TESTS_RANDOM_MATRICES_HPP

#include <random>
#include <vector>

#include "fanforge/fan_search.hpp"

namespace fanforge::testing {

// Valid F-matrices with n in {2,3}, n < m <= 6 and entries in [-2,2], drawn
// from a fixed seed by rejection.
inline std::vector<FanMatrix> random_fan_matrices(std::size_t count, unsigned seed = 20240607)
{
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::vector<FanMatrix> out;
    while (out.size() < count) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(gen);
        std::size_t m = std::uniform_int_distribution<std::size_t>(n + 1, 6)(gen);
        IntMatrix a(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a(i, j) = entry(gen);
        try {
            out.push_back(validate_fan_matrix(a));
        } catch (const AxiomViolation&) {
        }
    }
    return out;
}

}  // namespace fanforge::testing

#endif

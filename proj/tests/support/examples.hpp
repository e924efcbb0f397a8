#ifndef FANFORGE_TESTS_EXAMPLES_HPP
#define FANFORGE_TESTS_EXAMPLES_HPP

#include <vector>

#include "fanforge/linalg.hpp"
#include "fanforge/toric_ideal.hpp"

namespace fanforge::testing {

inline IntMatrix q_fourfold() { return {{1, 1, 0, 0, 2, 0, 0}, {0, 0, 1, 1, 2, 0, 0}, {0, 0, 0, 0, 1, 1, 1}}; }
inline IntMatrix v_fourfold()
{
    return {{1, 1, 0, 2, -1, 0, 1}, {0, 2, 0, 2, -1, 0, 1}, {0, 0, 1, -1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, -1}};
}

inline IntMatrix q_threefold() { return {{1, 1, 0, 0, 1, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 0, 1, 1, 1}}; }
inline IntMatrix v_threefold() { return {{1, 0, 0, 0, -1, 1}, {0, 1, 0, -1, -1, 2}, {0, 0, 1, -1, 0, 1}}; }

inline IntMatrix q21() { return {{1, 1, 0, 0, 1, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 0, 2, 1, 1}}; }
inline IntMatrix v21() { return {{1, 0, 0, 0, -1, 1}, {0, 1, 0, -1, -1, 3}, {0, 0, 1, -1, 0, 2}}; }

inline IntMatrix v_p2() { return {{1, 0, -1}, {0, 1, -1}}; }

// x^a - x^b from two exponent lists
inline Exponents binomial(Exponents a, const Exponents& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

inline MarkedBinomial marked(Exponents lead, Exponents trail) { return {std::move(lead), std::move(trail)}; }

// Reference generators of the toric ideals.
inline BinomialIdeal known_ideal_fourfold()
{
    return BinomialIdeal(7, {binomial({1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0}),
                             binomial({0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0}),
                             binomial({0, 0, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 1}),
                             binomial({0, 0, 0, 0, 0, 2, 2}, {0, 0, 1, 1, 0, 0, 0})});
}

inline BinomialIdeal known_ideal_threefold()
{
    return BinomialIdeal(6, {binomial({1, 0, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0}),
                             binomial({0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1}),
                             binomial({1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1}),
                             binomial({0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 0}),
                             binomial({1, 0, 0, 0, 2, 1}, {0, 0, 1, 0, 0, 0})});
}

inline std::vector<MarkedBinomial> gb1()
{
    return {marked({1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0}),
            marked({0, 0, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 1}),
            marked({0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0}),
            marked({0, 0, 0, 0, 0, 2, 2}, {0, 0, 1, 1, 0, 0, 0})};
}

inline std::vector<MarkedBinomial> gb2()
{
    return {marked({1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0}),
            marked({0, 0, 0, 0, 0, 1, 1}, {0, 0, 1, 1, 1, 0, 0}),
            marked({0, 0, 1, 1, 2, 0, 0}, {0, 0, 0, 0, 0, 0, 0})};
}

inline MonomialIdeal in1()
{
    return MonomialIdeal(7, {{1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 2, 2}});
}

inline MonomialIdeal in2()
{
    return MonomialIdeal(7, {{1, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 1}, {0, 0, 1, 1, 2, 0, 0}});
}

}  // namespace fanforge::testing

#endif

#include <algorithm>
#include <numeric>
#include <random>

#include <doctest.h>

#include "fanforge/toric_ideal.hpp"
#include "support/examples.hpp"
#include "support/oracles.hpp"

using namespace fanforge;
using namespace fanforge::testing;

namespace {

// A strictly positive weight in the interior of the cone cut out by a marked basis.
IntVector weight_inside(const std::vector<MarkedBinomial>& gb, std::size_t m)
{
    std::vector<IntVector> ineqs;
    for (const auto& b : gb) {
        IntVector a(m);
        for (std::size_t i = 0; i < m; ++i)
            a[i] = b.lead[i] - b.trail[i];
        ineqs.push_back(a);
    }
    for (std::size_t i = 0; i < m; ++i) {
        IntVector e(m);
        e[i] = 1;
        ineqs.push_back(e);
    }
    return interior_point(Cone::from_inequalities(m, ineqs));
}

std::vector<std::vector<long>> as_longs(const IntVector& w)
{
    std::vector<long> out;
    for (const auto& x : w)
        out.push_back(x.get_si());
    return {out};
}

std::vector<MarkedBinomial> sorted(std::vector<MarkedBinomial> gb)
{
    std::sort(gb.begin(), gb.end());
    return gb;
}

bool in_kernel_lattice(const Exponents& u, const IntMatrix& v, const IntMatrix& q)
{
    IntVector x(u.begin(), u.end());
    if (!(v * x == IntVector(v.rows())))
        return false;
    auto coeffs = solve_rational(q.transpose(), to_rat_vector(x));
    if (!coeffs)
        return false;
    return std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& c) { return c.get_den() == 1; });
}

IntVector random_positive(std::mt19937& gen, std::size_t m, int hi)
{
    std::uniform_int_distribution<int> d(1, hi);
    IntVector w(m);
    for (auto& x : w)
        x = d(gen);
    return w;
}

}  // namespace

TEST_SUITE("toric_ideal")
{
    TEST_CASE("toric ideal of the four-dimensional example")
    {
        FanMatrix v = validate_fan_matrix(v_fourfold());
        BinomialIdeal i = toric_ideal(v);
        CHECK(same_ideal(i, known_ideal_fourfold()));
        for (const auto& u : i.generators())
            CHECK(in_kernel_lattice(u, v_fourfold(), q_fourfold()));
    }

    TEST_CASE("toric ideal of the nonprojective threefold example")
    {
        FanMatrix v = validate_fan_matrix(v_threefold());
        CHECK(same_ideal(toric_ideal(v), known_ideal_threefold()));
        CHECK(same_ideal(toric_ideal(v, WeightMatrix::from_matrix(q_threefold(), v)), known_ideal_threefold()));
    }

    TEST_CASE("toric ideal of the projective plane is principal")
    {
        BinomialIdeal i = toric_ideal(validate_fan_matrix(v_p2()));
        CHECK(i.generators() == std::vector<Exponents>{{1, 1, 1}});
    }

    TEST_CASE("same_ideal tells ideals apart")
    {
        BinomialIdeal a(3, {{1, -1, 0}});
        BinomialIdeal b(3, {{2, -2, 0}});
        CHECK_FALSE(same_ideal(a, b));
        CHECK(same_ideal(a, BinomialIdeal(3, {{-1, 1, 0}})));
    }

    TEST_CASE("first reference Groebner basis is reproduced verbatim")
    {
        TermOrder order(weight_inside(gb1(), 7));
        auto gb = buchberger(toric_ideal(validate_fan_matrix(v_fourfold())), order);
        CHECK(gb == sorted(gb1()));
        CHECK(is_generic(gb, order));
        CHECK(leading_ideal(7, gb) == in1());
        CHECK(initial_ideal(known_ideal_fourfold(), order) == in1());
    }

    TEST_CASE("second reference Groebner basis is reproduced verbatim")
    {
        TermOrder order(weight_inside(gb2(), 7));
        auto gb = buchberger(known_ideal_fourfold(), order);
        CHECK(gb == sorted(gb2()));
        CHECK(initial_ideal(known_ideal_fourfold(), order) == in2());
    }

    TEST_CASE("a principal ideal is its own basis under every order")
    {
        BinomialIdeal i(3, {{1, 1, 1}});
        for (const auto& w : {IntVector{1, 1, 1}, IntVector{5, 1, 2}, IntVector{0, 0, 0}}) {
            auto gb = buchberger(i, TermOrder(w));
            REQUIRE(gb.size() == 1);
            CHECK(gb[0] == marked({1, 1, 1}, {0, 0, 0}));
        }
    }

    TEST_CASE("term orders")
    {
        CHECK(TermOrder(IntVector{1, 2, 3}).is_term_order());
        CHECK(TermOrder(IntVector{0, 0, 0}).is_term_order());
        CHECK_FALSE(TermOrder(IntVector{-1, 1, 1}).is_term_order());
        CHECK_FALSE(TermOrder(std::vector<IntVector>{{0, 0, 1}, {1, -1, 0}}).is_term_order());
        CHECK(TermOrder(std::vector<IntVector>{{0, 0, 1}, {1, 1, -5}}).is_term_order());
        CHECK_THROWS_AS(buchberger(known_ideal_fourfold(), TermOrder(IntVector{-1, 1, 1, 1, 1, 1, 1})), NotATermOrder);
        TermOrder lex(IntVector{0, 0, 0});
        CHECK(lex.compare({1, 0, 0}, {0, 5, 5}) > 0);
        CHECK(lex.compare({0, 1, 0}, {0, 1, 0}) == 0);
        CHECK(TermOrder::from_rational({Rational(1, 2), Rational(1, 3)}).weight() == IntVector{3, 2});
    }

    TEST_CASE("normal forms are fiber minima")
    {
        for (const auto& [vm, gbw] : {std::pair{v_fourfold(), gb1()}, std::pair{v_fourfold(), gb2()}}) {
            const std::size_t m = vm.cols();
            IntVector w = weight_inside(gbw, m);
            auto weights = as_longs(w);
            auto gb = buchberger(known_ideal_fourfold(), TermOrder(w));
            long wmin = *std::min_element(weights[0].begin(), weights[0].end());

            std::vector<Exponents> samples;
            long cap = 0;
            for (const auto& e : monomials_up_to(m, 3)) {
                long we = 0;
                for (std::size_t i = 0; i < m; ++i)
                    we += weights[0][i] * e[i];
                long need = (we + wmin - 1) / wmin;
                if (need > 12)
                    continue;
                cap = std::max(cap, need);
                samples.push_back(e);
            }
            REQUIRE(samples.size() > 20);
            FiberTable table(vm, cap);
            for (const auto& e : samples)
                CHECK(normal_form(e, gb) == table.minimum(e, weights));
        }
    }

    TEST_CASE("normal forms on the threefold at random weights")
    {
        std::mt19937 gen(41);
        FanMatrix v = validate_fan_matrix(v_threefold());
        BinomialIdeal ideal = toric_ideal(v);
        FiberTable table(v_threefold(), 10);
        int tested = 0;
        for (int t = 0; t < 10; ++t) {
            IntVector w = random_positive(gen, 6, 3);
            auto weights = as_longs(w);
            auto gb = buchberger(ideal, TermOrder(w));
            long wmin = *std::min_element(weights[0].begin(), weights[0].end());
            long wmax = *std::max_element(weights[0].begin(), weights[0].end());
            for (const auto& e : monomials_up_to(6, 3)) {
                long deg = std::accumulate(e.begin(), e.end(), 0L);
                if (deg * wmax > 10 * wmin)
                    continue;
                ++tested;
                CHECK(normal_form(e, gb) == table.minimum(e, weights));
            }
        }
        CHECK(tested > 100);
    }

    TEST_CASE("monomials in different fibers have different normal forms")
    {
        std::mt19937 gen(43);
        FanMatrix v = validate_fan_matrix(v_threefold());
        auto gb = buchberger(toric_ideal(v), TermOrder(random_positive(gen, 6, 4)));
        FiberTable table(v_threefold(), 3);
        auto monos = monomials_up_to(6, 3);
        for (std::size_t a = 0; a < monos.size(); a += 7)
            for (std::size_t b = a + 1; b < monos.size(); b += 11) {
                bool same_fiber = table.image(monos[a]) == table.image(monos[b]);
                CHECK((normal_form(monos[a], gb) == normal_form(monos[b], gb)) == same_fiber);
                CHECK(reduces_to_zero(binomial(monos[a], monos[b]), gb) == same_fiber);
            }
    }

    TEST_CASE("zero weight is not generic")
    {
        CHECK_THROWS_AS(initial_ideal(known_ideal_threefold(), TermOrder(IntVector(6))), NonGenericWeight);
        CHECK_THROWS_AS(initial_ideal(known_ideal_fourfold(), TermOrder(IntVector(7, Integer(1)))), NonGenericWeight);
    }

    TEST_CASE("every Groebner basis contains a unit binomial and lies in the lattice")
    {
        std::mt19937 gen(47);
        for (const auto& [vm, qm] : {std::pair{v_threefold(), q_threefold()}, std::pair{v_fourfold(), q_fourfold()}, std::pair{v21(), q21()}}) {
            FanMatrix v = validate_fan_matrix(vm);
            BinomialIdeal ideal = toric_ideal(v);
            for (int t = 0; t < 5; ++t) {
                auto gb = buchberger(ideal, TermOrder(random_positive(gen, vm.cols(), 5)));
                bool unit = false;
                for (const auto& b : gb) {
                    CHECK(in_kernel_lattice(b.vector(), vm, qm));
                    unit = unit || std::all_of(b.trail.begin(), b.trail.end(), [](long x) { return x == 0; });
                }
                CHECK(unit);
            }
        }
    }

    TEST_CASE("Buchberger is idempotent")
    {
        std::mt19937 gen(53);
        BinomialIdeal ideal = toric_ideal(validate_fan_matrix(v_threefold()));
        for (int t = 0; t < 5; ++t) {
            TermOrder order(random_positive(gen, 6, 5));
            auto gb = buchberger(ideal, order);
            CHECK(buchberger(BinomialIdeal::from_gb(6, gb), order) == gb);
        }
    }

    TEST_CASE("saturation of a lattice basis ideal of the twisted cubic")
    {
        BinomialIdeal j(4, {{1, -2, 1, 0}, {0, 1, -2, 1}});
        BinomialIdeal cubic(4, {{1, -2, 1, 0}, {0, 1, -2, 1}, {1, -1, -1, 1}});
        CHECK_FALSE(same_ideal(j, cubic));
        BinomialIdeal s = j;
        for (std::size_t var = 0; var < 4; ++var)
            s = saturate(s, var);
        CHECK(same_ideal(s, cubic));
        CHECK(same_ideal(saturate(cubic, 0), cubic));
    }

    TEST_CASE("Groebner region of the projective plane is a halfspace")
    {
        FanMatrix v = validate_fan_matrix(v_p2());
        auto region = groebner_region(v, gale_dual(v));
        CHECK(region.agree());
        CHECK(region.dual_of_u == Cone::from_inequalities(3, {IntVector{1, 1, 1}}));
    }

    TEST_CASE("Groebner region constructions agree and contain the orthant")
    {
        for (const auto& vm : {v_threefold(), v_fourfold(), v21(), v_p2()}) {
            FanMatrix v = validate_fan_matrix(vm);
            auto region = groebner_region(v, gale_dual(v));
            CHECK(region.agree());
            CHECK(region.preimage.contains(Cone::orthant(vm.cols())));
            CHECK(region.preimage.lineality_dim() == v.n());
        }
    }

    TEST_CASE("nonnegative representatives")
    {
        std::mt19937 gen(59);
        std::uniform_int_distribution<int> d(-3, 3);
        FanMatrix v = validate_fan_matrix(v_threefold());
        IntMatrix q = q_threefold();
        BinomialIdeal ideal = toric_ideal(v);
        for (int t = 0; t < 10; ++t) {
            IntVector w = random_positive(gen, 6, 6);
            IntVector y{d(gen), d(gen), d(gen)};
            IntVector shifted = w;
            for (std::size_t j = 0; j < 6; ++j)
                shifted[j] += dot(y, v.column(j));
            RatVector c = nonnegative_representative(q, to_rat_vector(shifted));
            for (const auto& x : c)
                CHECK(x >= 0);
            RatVector qc(3), qw(3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 6; ++j) {
                    qc[i] += q(i, j) * c[j];
                    qw[i] += q(i, j) * shifted[j];
                }
            CHECK(qc == qw);
            TermOrder a(w);
            TermOrder b = TermOrder::from_rational(c);
            if (is_generic(buchberger(ideal, a), a))
                CHECK(initial_ideal(ideal, a) == initial_ideal(ideal, b));
        }
        CHECK_THROWS_AS(nonnegative_representative(q, RatVector(6, Rational(-1))), std::domain_error);
    }

    TEST_CASE("minimal non-minima on the four-dimensional example")
    {
        for (const auto& g : {gb1(), gb2()}) {
            auto rep = min_nonminima_check(known_ideal_fourfold(), TermOrder(weight_inside(g, 7)), 6);
            CHECK_MESSAGE(rep.ok, rep.failure);
            CHECK(rep.minimal_non_minima == g.size());
        }
    }

    TEST_CASE("minimal non-minima on the projective plane and the threefold")
    {
        auto p2 = min_nonminima_check(BinomialIdeal(3, {{1, 1, 1}}), TermOrder(IntVector{1, 1, 1}), 5);
        CHECK(p2.ok);
        CHECK(p2.minimal_non_minima == 1);
        std::mt19937 gen(61);
        BinomialIdeal ideal = toric_ideal(validate_fan_matrix(v_threefold()));
        int tested = 0;
        for (int t = 0; t < 12 && tested < 4; ++t) {
            TermOrder order(random_positive(gen, 6, 7));
            if (!is_generic(buchberger(ideal, order), order))
                continue;
            ++tested;
            auto rep = min_nonminima_check(ideal, order, 5);
            CHECK_MESSAGE(rep.ok, rep.failure);
        }
        CHECK(tested == 4);
    }

    TEST_CASE("monomials_up_to counts")
    {
        CHECK(monomials_up_to(3, 2).size() == 10);
        CHECK(monomials_up_to(7, 6).size() == 1716);
    }

    TEST_CASE("string forms")
    {
        CHECK(monomial_to_string({1, 0, 0, 0, 2, 1}) == "x1*x5^2*x6");
        CHECK(monomial_to_string({0, 0}) == "1");
        CHECK(to_string(marked({1, 1, 0}, {0, 0, 2})) == "x1*x2 - x3^2");
        CHECK(to_string(in2()) == "(x6*x7, x3*x4*x5^2, x1*x2)");
    }
}

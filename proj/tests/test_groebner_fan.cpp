#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <doctest.h>

#include "fanforge/groebner_fan.hpp"
#include "support/examples.hpp"
#include "support/oracles.hpp"

using namespace fanforge;
using namespace fanforge::testing;

namespace {

std::set<MonomialIdeal> initial_set(const std::vector<GroebnerRecord>& recs)
{
    std::set<MonomialIdeal> out;
    for (const auto& r : recs)
        out.insert(r.initial);
    return out;
}

std::vector<Fan> projective_sf(const FanMatrix& v, const WeightMatrix& q)
{
    std::vector<Fan> out;
    for (const auto& f : enumerate_sf(v))
        if (cone_dim(nef_cone(f, q)) == q.r())
            out.push_back(f);
    return out;
}

GroebnerRecord record_with(std::size_t nvars, std::vector<Exponents> gens)
{
    GroebnerRecord r;
    r.initial = MonomialIdeal(nvars, std::move(gens));
    return r;
}

}  // namespace

TEST_SUITE("groebner_fan")
{
    TEST_CASE("homogenizing the projective plane")
    {
        BinomialIdeal h = homogenize(BinomialIdeal(3, {{1, 1, 1}}));
        CHECK(h.nvars() == 4);
        CHECK(h.generators() == std::vector<Exponents>{{1, 1, 1, -3}});
    }

    TEST_CASE("homogenized generators are homogeneous and dehomogenize back")
    {
        for (const auto& ideal : {known_ideal_fourfold(), known_ideal_threefold()}) {
            BinomialIdeal h = homogenize(ideal);
            CHECK(h.nvars() == ideal.nvars() + 1);
            std::vector<Exponents> dropped;
            for (const auto& u : h.generators()) {
                CHECK(std::accumulate(u.begin(), u.end(), 0L) == 0);
                dropped.emplace_back(u.begin(), u.end() - 1);
            }
            CHECK(same_ideal(BinomialIdeal(ideal.nvars(), dropped), ideal));
        }
    }

    TEST_CASE("Groebner fan of the homogenized projective plane")
    {
        BinomialIdeal h = homogenize(BinomialIdeal(3, {{1, 1, 1}}));
        auto recs = enumerate_initial_ideals(h);
        CHECK(recs.size() == 2);
        CHECK(initial_set(recs) == sampled_initial_ideals(h, 200, 20, 3));
        CHECK(initial_set(recs) ==
              std::set<MonomialIdeal>{MonomialIdeal(4, {{1, 1, 1, 0}}), MonomialIdeal(4, {{0, 0, 0, 3}})});
    }

    TEST_CASE("random weights find no initial ideal the traversal missed")
    {
        for (const auto& ideal : {known_ideal_fourfold(), known_ideal_threefold(), toric_ideal(validate_fan_matrix(v21()))}) {
            BinomialIdeal h = homogenize(ideal);
            auto found = initial_set(enumerate_initial_ideals(h));
            auto sampled = sampled_initial_ideals(h, 300, 12, 5);
            CHECK(sampled.size() >= 2);
            CHECK(std::includes(found.begin(), found.end(), sampled.begin(), sampled.end()));
        }
    }

    TEST_CASE("Groebner cones are full-dimensional, disjoint and consistent")
    {
        BinomialIdeal h = homogenize(known_ideal_threefold());
        auto recs = enumerate_initial_ideals(h);
        for (std::size_t i = 0; i < recs.size(); ++i) {
            const auto& r = recs[i];
            CHECK(r.cone.is_full_dimensional());
            CHECK(r.cone.contains_in_relative_interior(r.interior));
            Integer low = *std::min_element(r.interior.begin(), r.interior.end());
            IntVector w = r.interior;
            for (auto& x : w)
                x += 1 - low;
            CHECK(buchberger(h, TermOrder(w)) == r.gb);
            for (std::size_t j = i + 1; j < recs.size(); ++j)
                CHECK(interiors_disjoint(r.cone, recs[j].cone));
        }
    }

    TEST_CASE("traversal does not depend on the start or the thread count")
    {
        BinomialIdeal h = homogenize(known_ideal_fourfold());
        auto base = enumerate_initial_ideals(h);
        REQUIRE(base.size() > 2);
        auto other = enumerate_initial_ideals(h, 1, base.back().interior);
        auto threaded = enumerate_initial_ideals(h, 4);
        REQUIRE(other.size() == base.size());
        REQUIRE(threaded.size() == base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(other[i].initial == base[i].initial);
            CHECK(other[i].gb == base[i].gb);
            CHECK(threaded[i].initial == base[i].initial);
            CHECK(threaded[i].cone == base[i].cone);
        }
        CHECK_THROWS_AS(enumerate_initial_ideals(h, 1, IntVector(8, Integer(1))), NonGenericWeight);
    }

    TEST_CASE("filter drops auxiliary powers and variable powers")
    {
        std::vector<GroebnerRecord> recs{
            record_with(4, {{1, 1, 0, 0}, {0, 1, 1, 1}}),
            record_with(4, {{1, 1, 0, 1}, {0, 1, 1, 0}}),
            record_with(4, {{1, 1, 0, 0}, {0, 0, 0, 2}}),
            record_with(4, {{0, 0, 2, 0}, {1, 1, 0, 1}}),
        };
        auto out = dehomogenize_and_filter(recs, 3);
        CHECK(out.records == 4);
        CHECK(out.without_aux_power == 3);
        CHECK(out.dehomogenized == 2);
        REQUIRE(out.survivors.size() == 1);
        CHECK(out.survivors[0].initial == MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}}));
        CHECK(out.survivors[0].records == std::vector<std::size_t>{0, 1});
        CHECK(out.surviving_records == 2);
    }

    TEST_CASE("the four-dimensional example keeps both reference initial ideals")
    {
        FanMatrix v = validate_fan_matrix(v_fourfold());
        auto psf = enumerate_psf(v, WeightMatrix::from_matrix(q_fourfold(), v));
        std::set<MonomialIdeal> kept;
        for (const auto& s : psf.initial_ideals)
            kept.insert(s.initial);
        CHECK(kept.count(in1()) == 1);
        CHECK(kept.count(in2()) == 1);
        CHECK(psf.filter.surviving_records == 6);
        CHECK(psf.fans.size() == 3);
    }

    TEST_CASE("fan of an initial ideal")
    {
        FanMatrix p2 = validate_fan_matrix(v_p2());
        CHECK(fan_from_initial_ideal(MonomialIdeal(3, {{1, 1, 1}}), p2).max_cones ==
              std::vector<IndexSet>{{0, 1}, {0, 2}, {1, 2}});
        CHECK_THROWS_AS(fan_from_initial_ideal(MonomialIdeal(3, {{1, 1, 0}}), p2), NotAFan);
        CHECK_THROWS_AS(fan_from_initial_ideal(MonomialIdeal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}), p2), NotAFan);
        FanMatrix v = validate_fan_matrix(v_fourfold());
        CHECK(fan_from_initial_ideal(in1(), v) == fan_from_initial_ideal(in2(), v));
    }

    TEST_CASE("Stanley-Reisner ideals")
    {
        Fan p2{{{0, 1}, {0, 2}, {1, 2}}};
        CHECK(stanley_reisner(p2, 3) == MonomialIdeal(3, {{1, 1, 1}}));
        Fan square{{{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
        CHECK(stanley_reisner(square, 4) == MonomialIdeal(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
    }

    TEST_CASE("radicals are Stanley-Reisner ideals on every example")
    {
        for (const auto& vm : {v_p2(), v_threefold(), v_fourfold(), v21()}) {
            FanMatrix v = validate_fan_matrix(vm);
            auto psf = enumerate_psf(v);
            for (const auto& s : psf.initial_ideals) {
                CHECK(s.radical == stanley_reisner(s.fan, v.m()));
                CHECK(s.fan == fan_from_initial_ideal(s.initial, v));
            }
        }
    }

    TEST_CASE("the projective plane: one fan with a squarefree initial ideal")
    {
        auto psf = enumerate_psf(validate_fan_matrix(v_p2()));
        REQUIRE(psf.initial_ideals.size() == 1);
        CHECK(psf.initial_ideals[0].initial == psf.initial_ideals[0].radical);
        CHECK(psf.fans.size() == 1);
    }

    TEST_CASE("PSF is the set of projective fans")
    {
        struct Case
        {
            IntMatrix v;
            std::size_t psf;
        };
        for (const auto& c : {Case{v_fourfold(), 3}, Case{v_threefold(), 6}, Case{family_matrices(2, 1).v, 7}}) {
            FanMatrix v = validate_fan_matrix(c.v);
            WeightMatrix q = gale_dual(v);
            auto psf = enumerate_psf(v, q);
            CHECK(psf.fans.size() == c.psf);
            CHECK(psf.fans == projective_sf(v, q));
        }
    }

    TEST_CASE("the threefold has six distinct fans from six initial ideals")
    {
        auto psf = enumerate_psf(validate_fan_matrix(v_threefold()));
        CHECK(psf.initial_ideals.size() == 6);
        std::set<Fan> fans;
        for (const auto& s : psf.initial_ideals)
            fans.insert(s.fan);
        CHECK(fans.size() == 6);
    }

    TEST_CASE("Groebner cones refine the chambers")
    {
        for (const auto& vm : {v_threefold(), v_fourfold()}) {
            FanMatrix v = validate_fan_matrix(vm);
            WeightMatrix q = gale_dual(v);
            auto psf = enumerate_psf(v, q);
            for (const auto& s : psf.initial_ideals) {
                Cone nef = nef_cone(s.fan, q);
                for (auto k : s.records) {
                    IntVector w = dehomogenized_weight(psf.records[k].interior);
                    CHECK(nef.contains_in_relative_interior(q.matrix() * w));
                }
            }
        }
    }

    TEST_CASE("initial ideals are invariant under translation by the row space")
    {
        std::mt19937 gen(67);
        std::uniform_int_distribution<int> pos(1, 6), shift(-4, 4);
        FanMatrix v = validate_fan_matrix(v_threefold());
        BinomialIdeal ideal = toric_ideal(v);
        BinomialIdeal h = homogenize(ideal);
        int tested = 0;
        for (int t = 0; t < 40 && tested < 10; ++t) {
            IntVector w(6);
            for (auto& x : w)
                x = pos(gen);
            TermOrder order(w);
            if (!is_generic(buchberger(ideal, order), order))
                continue;
            IntVector y{shift(gen), shift(gen), shift(gen)};
            IntVector moved = w;
            for (std::size_t j = 0; j < 6; ++j)
                moved[j] += dot(y, v.column(j));
            try {
                CHECK(initial_ideal_via_homogenization(h, moved) == initial_ideal(ideal, order));
                CHECK(initial_ideal_via_homogenization(h, w) == initial_ideal(ideal, order));
                ++tested;
            } catch (const NonGenericWeight&) {
            }
        }
        CHECK(tested >= 5);
    }

    TEST_CASE("dehomogenized weights")
    {
        CHECK(dehomogenized_weight(IntVector{3, 4, 5, 1}) == IntVector{2, 3, 4});
    }
}

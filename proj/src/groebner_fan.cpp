#include "fanforge/groebner_fan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <thread>

namespace fanforge {

BinomialIdeal homogenize(const BinomialIdeal& ideal)
{
    const std::size_t m = ideal.nvars();
    auto gb = buchberger(ideal, TermOrder(IntVector(m, Integer(1))));
    std::vector<Exponents> gens;
    for (const auto& b : gb) {
        long dl = 0, dt = 0;
        for (std::size_t i = 0; i < m; ++i) {
            dl += b.lead[i];
            dt += b.trail[i];
        }
        Exponents u = b.vector();
        u.push_back(dt - dl);
        gens.push_back(std::move(u));
    }
    return BinomialIdeal(m + 1, std::move(gens));
}

namespace {

Cone groebner_cone(std::size_t nvars, const std::vector<MarkedBinomial>& gb)
{
    std::vector<IntVector> ineqs;
    for (const auto& b : gb) {
        IntVector a(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            a[i] = b.lead[i] - b.trail[i];
        ineqs.push_back(std::move(a));
    }
    return Cone::from_inequalities(nvars, ineqs);
}

// A homogeneous ideal has the same initial ideal at w and w + t(1,...,1).
TermOrder positive_order(IntVector w)
{
    Integer low = *std::min_element(w.begin(), w.end());
    for (auto& x : w)
        x += 1 - low;
    return TermOrder(std::move(w));
}

std::optional<GroebnerRecord> record_at(const BinomialIdeal& ideal, const IntVector& w)
{
    TermOrder order = positive_order(w);
    auto gb = buchberger(ideal, order);
    if (!is_generic(gb, order))
        return std::nullopt;
    GroebnerRecord rec;
    rec.cone = groebner_cone(ideal.nvars(), gb);
    rec.interior = rec.cone.relative_interior_point();
    rec.initial = leading_ideal(ideal.nvars(), gb);
    rec.gb = std::move(gb);
    return rec;
}

// Neighbor of `rec` across the facet with inner normal `a`, unless the facet
// point already lies in a known cone other than rec's.
std::optional<GroebnerRecord> cross_facet(const BinomialIdeal& ideal, const GroebnerRecord& rec,
                                          const IntVector& a, const std::vector<const Cone*>& known)
{
    const std::size_t d = ideal.nvars();
    Cone facet = Cone::from_inequalities(d, rec.cone.facets(), {a});
    IntVector p = facet.relative_interior_point();
    for (const Cone* c : known)
        if (c != &rec.cone && c->contains(p))
            return std::nullopt;
    Integer k = 2;
    for (int attempt = 0; attempt < 200; ++attempt, k *= 2) {
        IntVector w(d);
        for (std::size_t i = 0; i < d; ++i)
            w[i] = k * p[i] - a[i];
        if (rec.cone.contains(w))
            continue;
        auto next = record_at(ideal, w);
        if (next && next->cone.contains(p) && next->initial != rec.initial)
            return next;
    }
    throw std::logic_error("enumerate_initial_ideals: could not step across a Groebner cone facet");
}

}  // namespace

std::vector<GroebnerRecord> enumerate_initial_ideals(const BinomialIdeal& homogeneous, unsigned threads,
                                                     const IntVector& start_weight)
{
    const std::size_t d = homogeneous.nvars();
    if (threads == 0)
        threads = 1;

    IntVector w0 = start_weight;
    if (w0.empty()) {
        auto start_gb = buchberger(homogeneous, TermOrder(IntVector(d, Integer(1))));
        w0 = groebner_cone(d, start_gb).relative_interior_point();
    } else if (w0.size() != d) {
        throw std::invalid_argument("enumerate_initial_ideals: start weight of wrong length");
    }
    auto start = record_at(homogeneous, w0);
    if (!start)
        throw NonGenericWeight("enumerate_initial_ideals: start weight is not generic");

    std::vector<GroebnerRecord> all;
    std::map<MonomialIdeal, std::size_t> seen;
    seen.emplace(start->initial, 0);
    all.push_back(std::move(*start));

    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<const Cone*> known;
        for (const auto& r : all)
            known.push_back(&r.cone);

        struct Task
        {
            std::size_t record;
            std::size_t facet;
        };
        std::vector<Task> tasks;
        for (auto idx : frontier)
            for (std::size_t f = 0; f < all[idx].cone.facets().size(); ++f)
                tasks.push_back({idx, f});

        std::vector<std::optional<GroebnerRecord>> results(tasks.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
                const auto& rec = all[tasks[t].record];
                results[t] = cross_facet(homogeneous, rec, rec.cone.facets()[tasks[t].facet], known);
            }
        };
        unsigned nworkers = std::min<std::size_t>(threads, tasks.size());
        if (nworkers <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < nworkers; ++i)
                pool.emplace_back(worker);
            for (auto& th : pool)
                th.join();
        }

        std::vector<std::size_t> next_frontier;
        for (auto& res : results) {
            if (!res || seen.count(res->initial))
                continue;
            seen.emplace(res->initial, all.size());
            next_frontier.push_back(all.size());
            all.push_back(std::move(*res));
        }
        frontier = std::move(next_frontier);
    }

    std::sort(all.begin(), all.end(),
              [](const GroebnerRecord& a, const GroebnerRecord& b) { return a.initial < b.initial; });
    return all;
}

FilterOutcome dehomogenize_and_filter(const std::vector<GroebnerRecord>& records, std::size_t m)
{
    FilterOutcome out;
    out.records = records.size();
    std::map<MonomialIdeal, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < records.size(); ++k) {
        const auto& in = records[k].initial;
        if (in.nvars() != m + 1)
            throw std::invalid_argument("dehomogenize_and_filter: record has the wrong variable count");
        if (in.contains_variable_power(m))
            continue;
        ++out.without_aux_power;
        std::vector<Exponents> gens;
        for (auto g : in.generators()) {
            g.pop_back();
            gens.push_back(std::move(g));
        }
        groups[MonomialIdeal(m, std::move(gens))].push_back(k);
    }
    out.dehomogenized = groups.size();
    for (auto& [ideal, recs] : groups) {
        bool power = false;
        for (std::size_t i = 0; i < m && !power; ++i)
            power = ideal.contains_variable_power(i);
        if (power)
            continue;
        out.surviving_records += recs.size();
        out.survivors.push_back({ideal, std::move(recs)});
    }
    return out;
}

namespace {

bool support_inside(const Exponents& g, unsigned mask)
{
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0 && !(mask >> i & 1u))
            return false;
    return true;
}

IndexSet mask_to_set(unsigned mask, std::size_t m)
{
    IndexSet s;
    for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u)
            s.push_back(i);
    return s;
}

}  // namespace

Fan fan_from_initial_ideal(const MonomialIdeal& ideal, const FanMatrix& v)
{
    const std::size_t m = v.m();
    if (ideal.nvars() != m)
        throw std::invalid_argument("fan_from_initial_ideal: ideal and matrix disagree on m");
    if (m > 24)
        throw std::invalid_argument("fan_from_initial_ideal: too many variables");
    const unsigned full = (1u << m) - 1;
    std::vector<bool> face(full + 1, false);
    for (unsigned mask = 0; mask <= full; ++mask)
        face[mask] = std::none_of(ideal.generators().begin(), ideal.generators().end(),
                                  [&](const Exponents& g) { return support_inside(g, mask); });

    std::vector<IndexSet> cones;
    for (unsigned mask = 0; mask <= full; ++mask) {
        if (!face[mask])
            continue;
        bool maximal = true;
        for (std::size_t i = 0; i < m && maximal; ++i)
            if (!(mask >> i & 1u) && face[mask | 1u << i])
                maximal = false;
        if (!maximal)
            continue;
        IndexSet s = mask_to_set(mask, m);
        if (s.size() != v.n())
            throw NotAFan("maximal face " + to_string(s) + " of size " + std::to_string(s.size()) +
                          " != n = " + std::to_string(v.n()));
        cones.push_back(std::move(s));
    }
    Fan f = Fan::canonical(std::move(cones));
    if (auto err = check_fan(v, f))
        throw NotAFan(*err);
    return f;
}

MonomialIdeal stanley_reisner(const Fan& f, std::size_t m)
{
    if (m > 24)
        throw std::invalid_argument("stanley_reisner: too many vertices");
    std::vector<unsigned> facets;
    for (const auto& c : f.max_cones) {
        unsigned mask = 0;
        for (auto i : c)
            mask |= 1u << i;
        facets.push_back(mask);
    }
    std::vector<Exponents> nonfaces;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        bool is_face = std::any_of(facets.begin(), facets.end(),
                                   [&](unsigned fm) { return (mask & fm) == mask; });
        if (is_face)
            continue;
        Exponents e(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            e[i] = mask >> i & 1u;
        nonfaces.push_back(std::move(e));
    }
    return MonomialIdeal(m, std::move(nonfaces));
}

PsfResult enumerate_psf(const FanMatrix& v, const WeightMatrix& q, unsigned threads)
{
    PsfResult res;
    res.ideal = toric_ideal(v, q);
    res.homogenized = homogenize(res.ideal);
    res.records = enumerate_initial_ideals(res.homogenized, threads);
    res.filter = dehomogenize_and_filter(res.records, v.m());
    for (const auto& s : res.filter.survivors) {
        InitialToFanRecord rec;
        rec.initial = s.initial;
        rec.fan = fan_from_initial_ideal(s.initial, v);
        rec.radical = s.initial.radical();
        rec.records = s.records;
        if (rec.radical != stanley_reisner(rec.fan, v.m()))
            throw std::logic_error("enumerate_psf: radical of " + to_string(rec.initial) +
                                   " differs from the Stanley-Reisner ideal of its fan");
        res.fans.push_back(rec.fan);
        res.initial_ideals.push_back(std::move(rec));
    }
    std::sort(res.fans.begin(), res.fans.end());
    res.fans.erase(std::unique(res.fans.begin(), res.fans.end()), res.fans.end());
    return res;
}

PsfResult enumerate_psf(const FanMatrix& v, unsigned threads)
{
    return enumerate_psf(v, gale_dual(v), threads);
}

MonomialIdeal initial_ideal_via_homogenization(const BinomialIdeal& homogenized, const IntVector& w)
{
    const std::size_t m = homogenized.nvars() - 1;
    if (w.size() != m)
        throw std::invalid_argument("initial_ideal_via_homogenization: weight of wrong length");
    IntVector lifted = w;
    lifted.push_back(0);
    auto rec = record_at(homogenized, lifted);
    if (!rec)
        throw NonGenericWeight("initial_ideal_via_homogenization: weight is not generic");
    std::vector<Exponents> gens;
    for (auto g : rec->initial.generators()) {
        g.pop_back();
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(m, std::move(gens));
}

IntVector dehomogenized_weight(const IntVector& w)
{
    IntVector out(w.begin(), w.end() - 1);
    for (auto& x : out)
        x -= w.back();
    return out;
}

}  // namespace fanforge

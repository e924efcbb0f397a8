#include "fanforge/report.hpp"

#include <algorithm>
#include <sstream>

#include "fanforge/groebner_fan.hpp"
#include "fanforge/toric_ideal.hpp"

namespace fanforge {

using nlohmann::json;

namespace {

// Small integers as numbers, anything larger as a decimal string.
json integer_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

json int_vector_json(const IntVector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(integer_json(x));
    return a;
}

json exponents_json(const Exponents& e)
{
    return json(e);
}

json ideal_json(const MonomialIdeal& i)
{
    json gens = json::array();
    for (const auto& g : i.generators())
        gens.push_back(exponents_json(g));
    return {{"generators", gens}, {"text", to_string(i)}};
}

json fan_json(const Fan& f)
{
    json cones = json::array();
    for (const auto& c : f.max_cones)
        cones.push_back(index_set_json(c));
    return cones;
}

std::string cone_text(const Cone& c)
{
    std::ostringstream os;
    os << "dim " << c.dim();
    if (!c.rays().empty()) {
        os << ", rays";
        for (const auto& r : c.rays())
            os << " " << to_string(r);
    }
    if (!c.lineality().empty()) {
        os << ", lineality";
        for (const auto& l : c.lineality())
            os << " " << to_string(l);
    }
    return os.str();
}

std::string fan_text(const Fan& f)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < f.max_cones.size(); ++k)
        os << (k ? " " : "") << to_string(f.max_cones[k]);
    return os.str();
}

json header_json(const FanMatrix& v, const WeightMatrix& q)
{
    return {{"n", v.n()}, {"m", v.m()}, {"r", v.r()}, {"is_cf", v.is_cf()},
            {"V", matrix_json(v.matrix())}, {"Q", matrix_json(q.matrix())}};
}

std::string header_text(const FanMatrix& v)
{
    std::ostringstream os;
    os << "n=" << v.n() << " m=" << v.m() << " r=" << v.r() << (v.is_cf() ? " CF" : " F") << "\n";
    return os.str();
}

struct FanRow
{
    Fan fan;
    bool projective;
    Cone nef;
};

std::vector<FanRow> analyse_fans(const std::vector<Fan>& fans, const WeightMatrix& q)
{
    std::vector<FanRow> rows;
    for (const auto& f : fans) {
        Cone nef = nef_cone(f, q);
        rows.push_back({f, cone_dim(nef) == q.r(), nef});
    }
    return rows;
}

void add_check(json& checks, bool& ok, const std::string& name, bool pass)
{
    checks[name] = pass;
    ok = ok && pass;
}

struct GroebnerSection
{
    json data;
    std::string text;
    bool ok = true;
};

// Per surviving initial ideal: recompute in_w(I_V) directly at a nonnegative
// weight equivalent to the cone's interior, run the fiber checks, and check
// that the weight class sits inside the chamber of the fan.
GroebnerSection groebner_section(const FanMatrix& v, const WeightMatrix& q, const PsfResult& psf,
                                 const std::vector<Fan>& listed, std::size_t bound)
{
    GroebnerSection s;
    json ideals = json::array();
    std::ostringstream os;
    bool refinement = true, direct = true, fibers = true, unit = true;
    for (const auto& rec : psf.initial_ideals) {
        const GroebnerRecord& g = psf.records[rec.records.front()];
        IntVector w = dehomogenized_weight(g.interior);
        RatVector c = nonnegative_representative(q.matrix(), to_rat_vector(w));
        TermOrder order = TermOrder::from_rational(c);
        auto gb = buchberger(psf.ideal, order);
        bool same = is_generic(gb, order) && leading_ideal(v.m(), gb) == rec.initial;
        direct = direct && same;
        bool has_unit = std::any_of(gb.begin(), gb.end(), [](const MarkedBinomial& b) {
            return std::all_of(b.trail.begin(), b.trail.end(), [](long x) { return x == 0; });
        });
        unit = unit && has_unit;

        Cone nef = nef_cone(rec.fan, q);
        bool inside = true;
        for (auto idx : rec.records)
            inside = inside &&
                     nef.contains_in_relative_interior(q.matrix() * dehomogenized_weight(psf.records[idx].interior));
        refinement = refinement && inside;

        MinNonMinimaReport fib;
        if (same)
            fib = min_nonminima_check(psf.ideal, order, bound);
        else
            fib.ok = false;
        fibers = fibers && fib.ok;

        json gbj = json::array();
        for (const auto& b : gb)
            gbj.push_back(to_string(b));
        auto fan_pos = std::find(listed.begin(), listed.end(), rec.fan) - listed.begin();
        ideals.push_back({{"initial", ideal_json(rec.initial)},
                          {"radical", ideal_json(rec.radical)},
                          {"fan", fan_pos + 1},
                          {"gb", gbj},
                          {"weight", int_vector_json(w)},
                          {"homogeneous_cones", rec.records.size()},
                          {"fiber_check", {{"ok", fib.ok}, {"monomials", fib.monomials},
                                           {"minimal_non_minima", fib.minimal_non_minima}}}});
        os << "  in " << to_string(rec.initial) << " -> fan " << fan_pos + 1 << ", radical "
           << to_string(rec.radical) << "\n";
    }
    json checks;
    add_check(checks, s.ok, "initial_ideals_match_direct_computation", direct);
    add_check(checks, s.ok, "fiber_minima", fibers);
    add_check(checks, s.ok, "gb_contains_unit_binomial", unit);
    add_check(checks, s.ok, "groebner_cones_refine_chambers", refinement);
    add_check(checks, s.ok, "radicals_match_stanley_reisner", true);

    s.data = {{"homogeneous_cones", psf.filter.records},
              {"without_aux_power", psf.filter.without_aux_power},
              {"dehomogenized", psf.filter.dehomogenized},
              {"surviving_cones", psf.filter.surviving_records},
              {"surviving", psf.filter.survivors.size()},
              {"initial_ideals", ideals},
              {"checks", checks}};
    std::ostringstream head;
    head << "groebner cones " << psf.filter.records << ", without x" << v.m() + 1 << " power "
         << psf.filter.without_aux_power << ", dehomogenized " << psf.filter.dehomogenized
         << ", surviving cones " << psf.filter.surviving_records << ", surviving ideals "
         << psf.filter.survivors.size() << "\n";
    s.text = head.str() + os.str();
    return s;
}

std::string checks_text(const json& checks)
{
    std::ostringstream os;
    for (const auto& [k, val] : checks.items())
        os << "check " << k << ": " << (val.get<bool>() ? "ok" : "FAILED") << "\n";
    return os.str();
}

}  // namespace

IntMatrix matrix_from_json(const json& rows)
{
    if (!rows.is_array() || rows.empty() || !rows[0].is_array() || rows[0].empty())
        throw ParseError("matrix must be a nonempty array of nonempty rows");
    const std::size_t cols = rows[0].size();
    IntMatrix a(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols)
            throw ParseError("row " + std::to_string(i + 1) + " has the wrong length");
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& x = rows[i][j];
            if (x.is_number_integer())
                a(i, j) = Integer(std::to_string(x.get<long long>()));
            else if (x.is_string()) {
                try {
                    a(i, j) = Integer(x.get<std::string>());
                } catch (const std::invalid_argument&) {
                    throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                     ") is not an integer");
                }
            } else
                throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") is not an integer");
        }
    }
    return a;
}

Problem problem_from_json(const json& input)
{
    if (!input.is_object())
        throw ParseError("input must be a JSON object");
    bool has_v = input.contains("V"), has_q = input.contains("Q");
    if (has_v == has_q)
        throw ParseError("input needs exactly one of \"V\" and \"Q\"");
    if (has_v) {
        FanMatrix v = validate_fan_matrix(matrix_from_json(input["V"]));
        return {v, gale_dual(v)};
    }
    IntMatrix q = matrix_from_json(input["Q"]);
    if (rank(q) != q.rows())
        throw ParseError("Q must have full row rank");
    FanMatrix v = validate_fan_matrix(integer_kernel_basis(q));
    try {
        return {v, WeightMatrix::from_matrix(q, v)};
    } catch (const std::invalid_argument&) {
        return {v, gale_dual(v)};
    }
}

json matrix_json(const IntMatrix& a)
{
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i)
        rows.push_back(int_vector_json(a.row(i)));
    return rows;
}

json index_set_json(const IndexSet& s)
{
    json a = json::array();
    for (auto i : s)
        a.push_back(i + 1);
    return a;
}

json cone_json(const Cone& c)
{
    json rays = json::array(), lin = json::array();
    for (const auto& r : c.rays())
        rays.push_back(int_vector_json(r));
    for (const auto& l : c.lineality())
        lin.push_back(int_vector_json(l));
    return {{"dim", c.dim()}, {"rays", rays}, {"lineality", lin}};
}

Report validate_report(const FanMatrix& v, const WeightMatrix& q)
{
    Report rep;
    FanMatrix cover = cf_cover(v);
    rep.data = header_json(v, q);
    rep.data["valid"] = true;
    rep.data["cf_cover"] = matrix_json(cover.matrix());
    std::ostringstream os;
    os << "valid F-matrix, " << (v.is_cf() ? "CF" : "not CF") << ", n=" << v.n() << " m=" << v.m()
       << " r=" << v.r() << "\n";
    os << "Gale dual Q =\n" << q.matrix().to_string() << "\n";
    os << "CF cover =\n" << cover.matrix().to_string() << "\n";
    rep.text = os.str();
    return rep;
}

Report sf_report(const FanMatrix& v, const WeightMatrix& q, const RunOptions& opts)
{
    Report rep;
    auto sf = enumerate_sf(v, opts.verify_overlap);
    auto rows = analyse_fans(sf, q);
    json fans = json::array(), checks;
    std::ostringstream os;
    os << header_text(v) << "SF: " << sf.size() << "\n";
    bool valid = true;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        valid = valid && !check_fan(v, rows[k].fan);
        fans.push_back({{"index", k + 1}, {"cones", fan_json(rows[k].fan)},
                        {"projective", rows[k].projective}, {"nef", cone_json(rows[k].nef)}});
        os << "fan " << k + 1 << ": " << fan_text(rows[k].fan) << (rows[k].projective ? "  projective" : "")
           << "\n  nef " << cone_text(rows[k].nef) << "\n";
    }
    add_check(checks, rep.ok, "fans_valid", valid);
    rep.data = header_json(v, q);
    rep.data["verify_overlap"] = opts.verify_overlap;
    rep.data["sf_count"] = sf.size();
    rep.data["fans"] = fans;
    rep.data["checks"] = checks;
    rep.text = os.str() + checks_text(checks);
    return rep;
}

Report psf_report(const FanMatrix& v, const WeightMatrix& q, const RunOptions& opts)
{
    Report rep;
    auto psf = enumerate_psf(v, q, opts.threads);
    auto gs = groebner_section(v, q, psf, psf.fans, opts.fiber_bound);
    auto region = groebner_region(v, q);
    json fans = json::array(), checks = gs.data["checks"];
    std::ostringstream os;
    os << header_text(v) << "PSF: " << psf.fans.size() << "\n";
    bool valid = true, projective = true;
    for (std::size_t k = 0; k < psf.fans.size(); ++k) {
        valid = valid && !check_fan(v, psf.fans[k]);
        Cone nef = nef_cone(psf.fans[k], q);
        projective = projective && cone_dim(nef) == q.r();
        fans.push_back({{"index", k + 1}, {"cones", fan_json(psf.fans[k])}, {"nef", cone_json(nef)}});
        os << "fan " << k + 1 << ": " << fan_text(psf.fans[k]) << "\n";
    }
    rep.ok = gs.ok;
    add_check(checks, rep.ok, "fans_valid", valid);
    add_check(checks, rep.ok, "psf_fans_projective", projective);
    add_check(checks, rep.ok, "groebner_region_agrees", region.agree());
    rep.data = header_json(v, q);
    rep.data["psf_count"] = psf.fans.size();
    rep.data["fans"] = fans;
    rep.data["groebner"] = gs.data;
    rep.data["groebner"].erase("checks");
    rep.data["groebner_region"] = cone_json(region.preimage);
    rep.data["checks"] = checks;
    rep.text = os.str() + gs.text + checks_text(checks);
    return rep;
}

Report compare_report(const FanMatrix& v, const WeightMatrix& q, const RunOptions& opts)
{
    Report rep;
    auto sf = enumerate_sf(v, opts.verify_overlap);
    auto rows = analyse_fans(sf, q);
    auto psf = enumerate_psf(v, q, opts.threads);
    auto gs = groebner_section(v, q, psf, sf, opts.fiber_bound);
    auto region = groebner_region(v, q);
    Cone mov = movable_cone(q);
    Cone eff = effective_cone(q);

    json fans = json::array(), checks = gs.data["checks"];
    std::ostringstream os;
    os << header_text(v);
    bool valid = true, agree = true, nested = true;
    std::size_t nonprojective = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        valid = valid && !check_fan(v, row.fan);
        bool in_psf = std::binary_search(psf.fans.begin(), psf.fans.end(), row.fan);
        agree = agree && in_psf == row.projective;
        nested = nested && mov.contains(row.nef) && eff.contains(mov);
        if (!row.projective)
            ++nonprojective;
        json ideals = json::array();
        for (const auto& rec : psf.initial_ideals)
            if (rec.fan == row.fan)
                ideals.push_back(to_string(rec.initial));
        fans.push_back({{"index", k + 1},
                        {"cones", fan_json(row.fan)},
                        {"projective", row.projective},
                        {"in_psf", in_psf},
                        {"nef", cone_json(row.nef)},
                        {"initial_ideals", ideals}});
        os << "fan " << k + 1 << ": " << fan_text(row.fan)
           << (row.projective ? "  projective" : "  NOT projective") << "\n  nef " << cone_text(row.nef) << "\n";
        for (const auto& i : ideals)
            os << "  in " << i.get<std::string>() << "\n";
    }
    bool subset = std::includes(sf.begin(), sf.end(), psf.fans.begin(), psf.fans.end());

    rep.ok = gs.ok;
    add_check(checks, rep.ok, "fans_valid", valid);
    add_check(checks, rep.ok, "psf_subset_sf", subset);
    add_check(checks, rep.ok, "projective_iff_in_psf", agree);
    add_check(checks, rep.ok, "nef_in_movable_in_effective", nested);
    add_check(checks, rep.ok, "groebner_region_agrees", region.agree());

    rep.data = header_json(v, q);
    rep.data["verify_overlap"] = opts.verify_overlap;
    rep.data["sf_count"] = sf.size();
    rep.data["psf_count"] = psf.fans.size();
    rep.data["non_projective_count"] = nonprojective;
    rep.data["fans"] = fans;
    rep.data["movable_cone"] = cone_json(mov);
    rep.data["effective_cone"] = cone_json(eff);
    rep.data["anticanonical_class"] = int_vector_json(anticanonical_class(q));
    rep.data["groebner_region"] = cone_json(region.preimage);
    rep.data["groebner"] = gs.data;
    rep.data["groebner"].erase("checks");
    rep.data["checks"] = checks;

    std::ostringstream tail;
    tail << "SF: " << sf.size() << "  PSF: " << psf.fans.size() << "  non-projective: " << nonprojective << "\n";
    tail << "movable cone: " << cone_text(mov) << "\n";
    tail << "anticanonical class: " << to_string(anticanonical_class(q)) << "\n";
    rep.text = os.str() + tail.str() + gs.text + checks_text(checks);
    return rep;
}

Report conjecture_report(const FanMatrix& v)
{
    Report rep;
    auto res = test_pseudofan_conjecture(v);
    json cex = json::array();
    std::ostringstream os;
    os << header_text(v) << "pseudofans: " << res.pseudofans << "  fans: " << res.fans
       << "  counterexamples: " << res.counterexamples.size() << "\n";
    for (const auto& c : res.counterexamples) {
        cex.push_back({{"collection", fan_json(c.collection)},
                       {"overlapping", {index_set_json(c.first), index_set_json(c.second)}}});
        os << "counterexample: " << fan_text(c.collection) << "  overlap " << to_string(c.first) << " "
           << to_string(c.second) << "\n";
    }
    rep.data = {{"n", v.n()}, {"m", v.m()}, {"r", v.r()}, {"V", matrix_json(v.matrix())},
                {"pseudofans", res.pseudofans}, {"fans", res.fans}, {"counterexamples", cex}};
    rep.text = os.str();
    return rep;
}

}  // namespace fanforge

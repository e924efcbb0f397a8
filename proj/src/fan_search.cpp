#include "fanforge/fan_search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace fanforge {

AxiomViolation::AxiomViolation(char axiom, std::string witness)
    : std::runtime_error(std::string("axiom ") + axiom + " violated: " + witness),
      axiom_(axiom),
      witness_(std::move(witness))
{
}

namespace {

std::vector<IndexSet> k_subsets(std::size_t m, std::size_t k)
{
    std::vector<IndexSet> out;
    if (k > m)
        return out;
    IndexSet cur(k);
    for (std::size_t i = 0; i < k; ++i)
        cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == m - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

bool positively_proportional(const IntVector& a, const IntVector& b)
{
    // a = lambda b with lambda > 0  <=>  all 2x2 minors vanish and a.b > 0
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i])
                return false;
    return dot(a, b) > 0;
}

int sign(const Integer& x)
{
    return sgn(x);
}

}  // namespace

FanMatrix FanMatrix::validate(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    const std::size_t cols = m.cols();
    if (n == 0 || cols == 0)
        throw AxiomViolation('a', "empty matrix");

    std::size_t rk = rank(m);
    if (rk != n)
        throw AxiomViolation('a', "rank " + std::to_string(rk) + " < n = " + std::to_string(n));

    auto columns = m.col_list();
    for (std::size_t j = 0; j < cols; ++j)
        if (is_zero(columns[j]))
            throw AxiomViolation('b', "column " + std::to_string(j + 1) + " is zero");

    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = i + 1; j < cols; ++j)
            if (positively_proportional(columns[i], columns[j]))
                throw AxiomViolation('c', "columns " + std::to_string(i + 1) + " and " +
                                              std::to_string(j + 1) + " span the same ray");

    // Positive span is R^n iff the dual cone is {0}.
    Cone span = Cone::from_generators(n, columns);
    if (!(span == Cone::whole_space(n))) {
        Cone d = dual_cone(span);
        IntVector cert = d.rays().empty() ? d.lineality().front() : d.rays().front();
        throw AxiomViolation('d', "functional " + to_string(cert) +
                                      " is nonnegative on every column");
    }

    for (std::size_t j = 0; j < cols; ++j)
        if (content(columns[j]) != 1)
            throw AxiomViolation('e', "column " + std::to_string(j + 1) + " " +
                                          to_string(columns[j]) + " is not primitive");

    FanMatrix f;
    f.v_ = m;
    f.columns_ = std::move(columns);
    auto inv = smith_invariants(m);
    f.is_cf_ = inv.size() == n &&
               std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; });
    return f;
}

FanMatrix validate_fan_matrix(const IntMatrix& m)
{
    return FanMatrix::validate(m);
}

Fan Fan::canonical(std::vector<IndexSet> cones)
{
    for (auto& c : cones)
        std::sort(c.begin(), c.end());
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    return Fan{std::move(cones)};
}

Cone simplicial_cone(const FanMatrix& v, const IndexSet& idx)
{
    std::vector<IntVector> gens;
    for (auto j : idx)
        gens.push_back(v.column(j));
    return Cone::from_generators(v.n(), gens);
}

std::vector<IndexSet> minimal_cones(const FanMatrix& v)
{
    std::vector<IndexSet> out;
    for (auto& idx : k_subsets(v.m(), v.n())) {
        IntMatrix vi = v.matrix().select_columns(idx);
        if (determinant(vi) == 0)
            continue;
        bool minimal = true;
        for (std::size_t j = 0; j < v.m() && minimal; ++j) {
            if (std::binary_search(idx.begin(), idx.end(), j))
                continue;
            auto lambda = solve_rational(vi, to_rat_vector(v.column(j)));
            if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x >= 0; }))
                minimal = false;
        }
        if (minimal)
            out.push_back(std::move(idx));
    }
    return out;
}

std::vector<OrientedFacet> oriented_facets(const std::vector<IndexSet>& cones, const FanMatrix& v)
{
    std::map<IndexSet, std::size_t> index;
    std::vector<OrientedFacet> facets;
    for (std::size_t c = 0; c < cones.size(); ++c) {
        const IndexSet& sigma = cones[c];
        for (std::size_t t = 0; t < sigma.size(); ++t) {
            IndexSet f;
            for (std::size_t k = 0; k < sigma.size(); ++k)
                if (k != t)
                    f.push_back(sigma[k]);
            auto it = index.find(f);
            if (it == index.end()) {
                IntMatrix rows = v.matrix().select_columns(f).transpose();
                IntMatrix ker = integer_kernel_basis(rows);
                if (ker.rows() != 1)
                    throw std::logic_error("oriented_facets: degenerate facet " + to_string(f));
                IntVector normal = make_primitive(ker.row(0));
                auto nz = std::find_if(normal.begin(), normal.end(), [](const Integer& x) { return x != 0; });
                if (*nz < 0)
                    for (auto& x : normal)
                        x = -x;
                it = index.emplace(f, facets.size()).first;
                facets.push_back({f, std::move(normal), {}, {}});
            }
            OrientedFacet& of = facets[it->second];
            Integer side = dot(of.normal, v.column(sigma[t]));
            if (side == 0)
                throw std::logic_error("oriented_facets: cone " + to_string(sigma) + " is degenerate");
            (side > 0 ? of.plus : of.minus).push_back(c);
        }
    }
    return facets;
}

namespace {

/**
 * State of the cercafan elimination: each minimal cone is open, kept or
 * discarded; `used[f][s]` records whether side s of facet f already holds a
 * kept cone (at most one is allowed).
 */
class FacetSearch
{
  public:
    FacetSearch(const FanMatrix& v, bool unions)
        : v_(v), unions_(unions), cones_(minimal_cones(v)), facets_(oriented_facets(cones_, v))
    {
        incidence_.resize(cones_.size());
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            for (auto c : facets_[f].plus)
                incidence_[c].push_back({f, 0});
            for (auto c : facets_[f].minus)
                incidence_[c].push_back({f, 1});
        }
        by_ray_.resize(v.m());
        for (std::size_t c = 0; c < cones_.size(); ++c)
            for (auto j : cones_[c])
                by_ray_[j].push_back(c);
    }

    std::vector<Fan> run()
    {
        State s;
        s.mark.assign(cones_.size(), Mark::Open);
        s.used.assign(facets_.size(), {0, 0});
        recurse(s);
        return {found_.begin(), found_.end()};
    }

    const std::vector<IndexSet>& cones() const { return cones_; }

  private:
    enum class Mark : unsigned char { Open, In, Out };

    struct State
    {
        std::vector<Mark> mark;
        std::vector<std::array<unsigned char, 2>> used;
    };

    const std::vector<std::size_t>& side(std::size_t f, int s) const
    {
        return s == 0 ? facets_[f].plus : facets_[f].minus;
    }

    bool keep(State& s, std::size_t c) const
    {
        if (s.mark[c] == Mark::Out)
            return false;
        if (s.mark[c] == Mark::In)
            return true;
        s.mark[c] = Mark::In;
        for (auto [f, sd] : incidence_[c]) {
            if (s.used[f][sd])
                return false;
            s.used[f][sd] = 1;
            for (auto d : side(f, sd))
                if (d != c)
                    s.mark[d] = Mark::Out;
        }
        return true;
    }

    bool discard(State& s, std::size_t c) const
    {
        if (s.mark[c] == Mark::In)
            return false;
        s.mark[c] = Mark::Out;
        return true;
    }

    std::vector<std::size_t> open_among(const State& s, const std::vector<std::size_t>& cs) const
    {
        std::vector<std::size_t> out;
        for (auto c : cs)
            if (s.mark[c] == Mark::Open)
                out.push_back(c);
        return out;
    }

    bool covered(const State& s, std::size_t ray) const
    {
        return std::any_of(by_ray_[ray].begin(), by_ray_[ray].end(),
                           [&](std::size_t c) { return s.mark[c] == Mark::In; });
    }

    void branch(const State& s, const std::vector<std::size_t>& candidates)
    {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            State t = s;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = discard(t, candidates[k]);
            ok = ok && keep(t, candidates[i]);
            if (ok)
                recurse(t);
        }
    }

    void recurse(const State& s)
    {
        // Pick the open facet with the fewest ways to close it.
        bool open_facet = false;
        std::vector<std::size_t> best;
        for (std::size_t c = 0; c < cones_.size(); ++c) {
            if (s.mark[c] != Mark::In)
                continue;
            for (auto [f, sd] : incidence_[c]) {
                if (s.used[f][1 - sd])
                    continue;
                auto cands = open_among(s, side(f, 1 - sd));
                if (cands.empty())
                    return;
                if (!open_facet || cands.size() < best.size()) {
                    best = std::move(cands);
                    open_facet = true;
                }
            }
        }
        if (open_facet) {
            branch(s, best);
            return;
        }

        for (std::size_t j = 0; j < v_.m(); ++j) {
            if (covered(s, j))
                continue;
            auto cands = open_among(s, by_ray_[j]);
            if (cands.empty())
                return;
            branch(s, cands);
            return;
        }

        std::vector<IndexSet> kept;
        for (std::size_t c = 0; c < cones_.size(); ++c)
            if (s.mark[c] == Mark::In)
                kept.push_back(cones_[c]);
        found_.insert(Fan::canonical(std::move(kept)));

        if (unions_) {
            std::vector<std::size_t> rest;
            for (std::size_t c = 0; c < cones_.size(); ++c)
                if (s.mark[c] == Mark::Open)
                    rest.push_back(c);
            branch(s, rest);
        }
    }

    const FanMatrix& v_;
    bool unions_;
    std::vector<IndexSet> cones_;
    std::vector<OrientedFacet> facets_;
    std::vector<std::vector<std::pair<std::size_t, int>>> incidence_;
    std::vector<std::vector<std::size_t>> by_ray_;
    std::set<Fan> found_;
};

std::optional<std::pair<IndexSet, IndexSet>> first_overlap(const FanMatrix& v, const Fan& f)
{
    std::vector<Cone> cones;
    for (const auto& c : f.max_cones)
        cones.push_back(simplicial_cone(v, c));
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            if (!interiors_disjoint(cones[i], cones[j]))
                return std::make_pair(f.max_cones[i], f.max_cones[j]);
    return std::nullopt;
}

}  // namespace

std::vector<Fan> enumerate_sf(const FanMatrix& v, bool verify_overlap)
{
    FacetSearch search(v, false);
    std::vector<Fan> found = search.run();
    if (!verify_overlap)
        return found;
    std::vector<Fan> fans;
    for (auto& f : found)
        if (!first_overlap(v, f))
            fans.push_back(std::move(f));
    return fans;
}

std::optional<std::string> check_fan(const FanMatrix& v, const Fan& f)
{
    const std::size_t n = v.n();
    std::vector<bool> seen(v.m(), false);
    for (const auto& c : f.max_cones) {
        if (c.size() != n)
            return "cone " + to_string(c) + " does not have n elements";
        if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
            return "cone " + to_string(c) + " is not a sorted index set";
        if (c.back() >= v.m())
            return "cone " + to_string(c) + " indexes past the last column";
        if (determinant(v.matrix().select_columns(c)) == 0)
            return "cone " + to_string(c) + " is not full-dimensional";
        for (auto j : c)
            seen[j] = true;
    }
    for (std::size_t j = 0; j < v.m(); ++j)
        if (!seen[j])
            return "column " + std::to_string(j + 1) + " is not a ray of the fan";

    if (auto o = first_overlap(v, f))
        return "cones " + to_string(o->first) + " and " + to_string(o->second) + " overlap";

    // Facet matching, with orientation read off determinant signs.
    for (std::size_t a = 0; a < f.max_cones.size(); ++a) {
        const IndexSet& sigma = f.max_cones[a];
        for (std::size_t t = 0; t < n; ++t) {
            IndexSet facet;
            for (std::size_t k = 0; k < n; ++k)
                if (k != t)
                    facet.push_back(sigma[k]);
            IndexSet with_apex = facet;
            with_apex.push_back(sigma[t]);
            int own = sign(determinant(v.matrix().select_columns(with_apex)));
            std::size_t partners = 0;
            bool opposite = false;
            for (std::size_t b = 0; b < f.max_cones.size(); ++b) {
                if (b == a)
                    continue;
                const IndexSet& tau = f.max_cones[b];
                if (!std::includes(tau.begin(), tau.end(), facet.begin(), facet.end()))
                    continue;
                ++partners;
                std::size_t apex = 0;
                for (auto j : tau)
                    if (!std::binary_search(facet.begin(), facet.end(), j))
                        apex = j;
                IndexSet other = facet;
                other.push_back(apex);
                opposite = sign(determinant(v.matrix().select_columns(other))) == -own;
            }
            if (partners != 1 || !opposite)
                return "facet " + to_string(facet) + " of " + to_string(sigma) +
                       " is not matched by exactly one opposite cone";
        }
    }
    return std::nullopt;
}

PseudofanReport test_pseudofan_conjecture(const FanMatrix& v)
{
    FacetSearch search(v, true);
    std::vector<Fan> collections = search.run();
    PseudofanReport report;
    report.pseudofans = collections.size();
    for (const auto& c : collections) {
        if (auto o = first_overlap(v, c))
            report.counterexamples.push_back({c, o->first, o->second});
        else
            ++report.fans;
    }
    return report;
}

std::string to_string(const IndexSet& s)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i] + 1;
    os << "}";
    return os.str();
}

std::string to_string(const Fan& f)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
        os << (i ? " " : "") << to_string(f.max_cones[i]);
    os << "]";
    return os.str();
}

}  // namespace fanforge

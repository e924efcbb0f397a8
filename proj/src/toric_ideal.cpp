#include "fanforge/toric_ideal.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <tuple>

namespace fanforge {

Exponents MarkedBinomial::vector() const
{
    Exponents u(lead.size());
    for (std::size_t i = 0; i < lead.size(); ++i)
        u[i] = lead[i] - trail[i];
    return u;
}

Exponents positive_part(const Exponents& u)
{
    Exponents p(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        p[i] = u[i] > 0 ? u[i] : 0;
    return p;
}

Exponents negative_part(const Exponents& u)
{
    Exponents p(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        p[i] = u[i] < 0 ? -u[i] : 0;
    return p;
}

bool divides(const Exponents& a, const Exponents& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// TermOrder

TermOrder::TermOrder(IntVector weight) : TermOrder(std::vector<IntVector>{std::move(weight)}) {}

TermOrder::TermOrder(std::vector<IntVector> weights) : weights_(std::move(weights))
{
    if (weights_.empty())
        throw std::invalid_argument("TermOrder: at least one weight required");
    nvars_ = weights_.front().size();
    const Integer limit = Integer(1) << 40;
    bool small = true;
    for (const auto& w : weights_) {
        if (w.size() != nvars_)
            throw std::invalid_argument("TermOrder: weights of different lengths");
        for (const auto& x : w)
            if (abs(x) >= limit)
                small = false;
    }
    if (small)
        for (const auto& w : weights_) {
            std::vector<std::int64_t> s;
            for (const auto& x : w)
                s.push_back(x.get_si());
            small_.push_back(std::move(s));
        }
}

TermOrder TermOrder::from_rational(const RatVector& w)
{
    return TermOrder(make_primitive(w));
}

namespace {

int weighted_sign(const IntVector& w, const std::vector<std::int64_t>* small, const Exponents& a,
                  const Exponents& b)
{
    if (small) {
        __int128 s = 0;
        bool fits = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            long d = a[i] - b[i];
            if (d > (1L << 40) || d < -(1L << 40)) {
                fits = false;
                break;
            }
            s += static_cast<__int128>((*small)[i]) * d;
        }
        if (fits)
            return s > 0 ? 1 : (s < 0 ? -1 : 0);
    }
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += w[i] * (a[i] - b[i]);
    return sgn(s);
}

}  // namespace

int TermOrder::compare_primary(const Exponents& a, const Exponents& b) const
{
    return weighted_sign(weights_.front(), small_.empty() ? nullptr : &small_.front(), a, b);
}

int TermOrder::compare(const Exponents& a, const Exponents& b) const
{
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        int c = weighted_sign(weights_[k], small_.empty() ? nullptr : &small_[k], a, b);
        if (c != 0)
            return c;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] > b[i] ? 1 : -1;
    return 0;
}

bool TermOrder::is_term_order() const
{
    for (std::size_t i = 0; i < nvars_; ++i)
        for (const auto& w : weights_) {
            if (w[i] < 0)
                return false;
            if (w[i] > 0)
                break;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Ideals

namespace {

Exponents sign_normalized(Exponents u)
{
    auto nz = std::find_if(u.begin(), u.end(), [](long x) { return x != 0; });
    if (nz != u.end() && *nz < 0)
        for (auto& x : u)
            x = -x;
    return u;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && divides(gens[j], gens[i]))
                redundant = true;
        if (!redundant)
            out.push_back(gens[i]);
    }
    return out;
}

}  // namespace

BinomialIdeal::BinomialIdeal(std::size_t nvars, std::vector<Exponents> generators) : nvars_(nvars)
{
    for (auto& u : generators) {
        if (u.size() != nvars)
            throw std::invalid_argument("BinomialIdeal: generator of wrong length");
        if (std::all_of(u.begin(), u.end(), [](long x) { return x == 0; }))
            continue;
        gens_.push_back(sign_normalized(std::move(u)));
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

BinomialIdeal BinomialIdeal::from_gb(std::size_t nvars, const std::vector<MarkedBinomial>& gb)
{
    std::vector<Exponents> gens;
    for (const auto& g : gb)
        gens.push_back(g.vector());
    return BinomialIdeal(nvars, std::move(gens));
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Exponents> generators) : nvars_(nvars)
{
    for (const auto& g : generators)
        if (g.size() != nvars)
            throw std::invalid_argument("MonomialIdeal: generator of wrong length");
    gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Exponents& e) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& g) { return divides(g, e); });
}

bool MonomialIdeal::contains_variable_power(std::size_t i) const
{
    for (const auto& g : gens_) {
        bool pure = g[i] > 0;
        for (std::size_t k = 0; k < g.size() && pure; ++k)
            if (k != i && g[k] != 0)
                pure = false;
        if (pure)
            return true;
    }
    return false;
}

MonomialIdeal MonomialIdeal::radical() const
{
    std::vector<Exponents> sq;
    for (const auto& g : gens_) {
        Exponents s(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            s[i] = g[i] > 0 ? 1 : 0;
        sq.push_back(std::move(s));
    }
    return MonomialIdeal(nvars_, std::move(sq));
}

// ---------------------------------------------------------------------------
// Buchberger

Exponents normal_form(Exponents e, const std::vector<MarkedBinomial>& gb)
{
    for (;;) {
        bool reduced = false;
        for (const auto& g : gb) {
            if (!divides(g.lead, e))
                continue;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += g.trail[i] - g.lead[i];
            reduced = true;
            break;
        }
        if (!reduced)
            return e;
    }
}

bool reduces_to_zero(const Exponents& u, const std::vector<MarkedBinomial>& gb)
{
    return normal_form(positive_part(u), gb) == normal_form(negative_part(u), gb);
}

namespace {

long degree(const Exponents& e)
{
    long d = 0;
    for (long x : e)
        d += x;
    return d;
}

bool coprime(const Exponents& a, const Exponents& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            return false;
    return true;
}

std::vector<MarkedBinomial> reduce_basis(std::vector<MarkedBinomial> g)
{
    std::vector<MarkedBinomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (j == i || !divides(g[j].lead, g[i].lead))
                continue;
            // equal leads: keep the earliest
            if (g[j].lead != g[i].lead || j < i)
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(g[i]);
    }
    for (auto& b : minimal)
        b.trail = normal_form(b.trail, minimal);
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

}  // namespace

std::vector<MarkedBinomial> buchberger(const BinomialIdeal& ideal, const TermOrder& order)
{
    if (order.nvars() != ideal.nvars())
        throw std::invalid_argument("buchberger: term order and ideal disagree on variable count");
    if (!order.is_term_order())
        throw NotATermOrder("buchberger: some variable is not larger than 1 under the weight order");

    std::vector<MarkedBinomial> g;
    // (degree of lcm, i, j), smallest first
    using Pair = std::tuple<long, std::size_t, std::size_t>;
    std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;

    auto add = [&](Exponents p, Exponents q) {
        MarkedBinomial b = order.compare(p, q) > 0 ? MarkedBinomial{std::move(p), std::move(q)}
                                                   : MarkedBinomial{std::move(q), std::move(p)};
        for (std::size_t k = 0; k < g.size(); ++k) {
            long d = 0;
            for (std::size_t i = 0; i < b.lead.size(); ++i)
                d += std::max(b.lead[i], g[k].lead[i]);
            pairs.emplace(d, k, g.size());
        }
        g.push_back(std::move(b));
    };

    for (const auto& u : ideal.generators()) {
        Exponents p = normal_form(positive_part(u), g);
        Exponents q = normal_form(negative_part(u), g);
        if (p != q)
            add(std::move(p), std::move(q));
    }

    while (!pairs.empty()) {
        auto [d, i, j] = pairs.top();
        pairs.pop();
        (void)d;
        const MarkedBinomial& a = g[i];
        const MarkedBinomial& b = g[j];
        if (coprime(a.lead, b.lead))
            continue;
        const std::size_t n = a.lead.size();
        Exponents p(n), q(n);
        for (std::size_t k = 0; k < n; ++k) {
            long l = std::max(a.lead[k], b.lead[k]);
            p[k] = l - a.lead[k] + a.trail[k];
            q[k] = l - b.lead[k] + b.trail[k];
        }
        p = normal_form(std::move(p), g);
        q = normal_form(std::move(q), g);
        if (p != q)
            add(std::move(p), std::move(q));
    }
    return reduce_basis(std::move(g));
}

bool is_generic(const std::vector<MarkedBinomial>& gb, const TermOrder& order)
{
    return std::all_of(gb.begin(), gb.end(),
                       [&](const MarkedBinomial& b) { return order.compare_primary(b.lead, b.trail) > 0; });
}

MonomialIdeal leading_ideal(std::size_t nvars, const std::vector<MarkedBinomial>& gb)
{
    std::vector<Exponents> leads;
    for (const auto& b : gb)
        leads.push_back(b.lead);
    return MonomialIdeal(nvars, std::move(leads));
}

MonomialIdeal initial_ideal(const BinomialIdeal& ideal, const TermOrder& order)
{
    auto gb = buchberger(ideal, order);
    if (!is_generic(gb, order))
        throw NonGenericWeight("initial_ideal: the weight ties on an element of the reduced Groebner basis");
    return leading_ideal(ideal.nvars(), gb);
}

bool same_ideal(const BinomialIdeal& a, const BinomialIdeal& b)
{
    if (a.nvars() != b.nvars())
        return false;
    TermOrder deg(IntVector(a.nvars(), Integer(1)));
    auto ga = buchberger(a, deg);
    auto gb = buchberger(b, deg);
    for (const auto& u : b.generators())
        if (!reduces_to_zero(u, ga))
            return false;
    for (const auto& u : a.generators())
        if (!reduces_to_zero(u, gb))
            return false;
    return true;
}

BinomialIdeal saturate(const BinomialIdeal& j, std::size_t var)
{
    const std::size_t m = j.nvars();
    if (var >= m)
        throw std::out_of_range("saturate: variable index out of range");
    std::vector<Exponents> gens;
    for (const auto& u : j.generators()) {
        Exponents e = u;
        e.push_back(0);
        gens.push_back(std::move(e));
    }
    Exponents t(m + 1, 0);
    t[m] = 1;
    t[var] = 1;
    gens.push_back(t);

    IntVector elim(m + 1, Integer(0));
    elim[m] = 1;
    IntVector deg(m + 1, Integer(1));
    deg[m] = 0;
    auto gb = buchberger(BinomialIdeal(m + 1, std::move(gens)), TermOrder({elim, deg}));

    std::vector<Exponents> kept;
    for (const auto& b : gb) {
        if (b.lead[m] != 0 || b.trail[m] != 0)
            continue;
        Exponents u = b.vector();
        u.pop_back();
        kept.push_back(std::move(u));
    }
    return BinomialIdeal(m, std::move(kept));
}

BinomialIdeal toric_ideal(const FanMatrix& v, const WeightMatrix& q)
{
    std::vector<Exponents> rows;
    for (std::size_t i = 0; i < q.r(); ++i) {
        Exponents u;
        for (std::size_t j = 0; j < q.m(); ++j)
            u.push_back(q.matrix()(i, j).get_si());
        rows.push_back(std::move(u));
    }
    BinomialIdeal j(v.m(), std::move(rows));
    for (std::size_t i = 0; i < v.m(); ++i)
        j = saturate(j, i);
    return j;
}

BinomialIdeal toric_ideal(const FanMatrix& v)
{
    return toric_ideal(v, gale_dual(v));
}

// ---------------------------------------------------------------------------
// Groebner region

GroebnerRegion groebner_region(const FanMatrix& v, const WeightMatrix& q)
{
    const std::size_t m = v.m();
    const std::size_t n = v.n();

    // U = ker(V) cap R^m_{>=0}
    std::vector<IntVector> orthant;
    for (std::size_t i = 0; i < m; ++i) {
        IntVector e(m, Integer(0));
        e[i] = 1;
        orthant.push_back(std::move(e));
    }
    Cone u = Cone::from_inequalities(m, orthant, v.matrix().row_list());

    // {(w, y) : w - V^T y >= 0}, then drop y
    std::vector<IntVector> lifted;
    for (std::size_t i = 0; i < m; ++i) {
        IntVector a(m + n, Integer(0));
        a[i] = 1;
        for (std::size_t k = 0; k < n; ++k)
            a[m + k] = -v.matrix()(k, i);
        lifted.push_back(std::move(a));
    }
    Cone big = Cone::from_inequalities(m + n, lifted);
    IntMatrix drop_y(m, m + n);
    for (std::size_t i = 0; i < m; ++i)
        drop_y(i, i) = 1;

    return GroebnerRegion{dual_cone(u), linear_image(drop_y, big),
                          linear_preimage(q.matrix(), effective_cone(q))};
}

RatVector nonnegative_representative(const IntMatrix& q, const RatVector& w)
{
    const std::size_t m = q.cols();
    if (w.size() != m)
        throw std::invalid_argument("nonnegative_representative: weight of wrong length");
    // (lambda, s) with Q lambda = s Q w, lambda >= 0, s >= 0
    std::vector<IntVector> eqs;
    for (std::size_t k = 0; k < q.rows(); ++k) {
        RatVector e(m + 1);
        Rational qw = 0;
        for (std::size_t j = 0; j < m; ++j) {
            e[j] = q(k, j);
            qw += q(k, j) * w[j];
        }
        e[m] = -qw;
        eqs.push_back(make_primitive(e));
    }
    std::vector<IntVector> ineqs;
    for (std::size_t j = 0; j <= m; ++j) {
        IntVector e(m + 1, Integer(0));
        e[j] = 1;
        ineqs.push_back(std::move(e));
    }
    Cone k = Cone::from_inequalities(m + 1, ineqs, eqs);
    IntVector p = k.relative_interior_point();
    if (p[m] <= 0)
        throw std::domain_error("nonnegative_representative: weight lies outside the Groebner region");
    RatVector out(m);
    for (std::size_t j = 0; j < m; ++j) {
        out[j] = Rational(p[j], p[m]);
        out[j].canonicalize();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fibers

std::vector<Exponents> monomials_up_to(std::size_t nvars, std::size_t bound)
{
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
        if (i == nvars) {
            out.push_back(cur);
            return;
        }
        for (long k = 0; k <= left; ++k) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
        cur[i] = 0;
    };
    rec(rec, 0, static_cast<long>(bound));
    return out;
}

MinNonMinimaReport min_nonminima_check(const BinomialIdeal& ideal, const TermOrder& order,
                                       std::size_t bound)
{
    MinNonMinimaReport rep;
    auto gb = buchberger(ideal, order);
    if (!is_generic(gb, order))
        throw NonGenericWeight("min_nonminima_check: weight is not generic");
    MonomialIdeal in = leading_ideal(ideal.nvars(), gb);

    auto fail = [&](const std::string& why) {
        rep.ok = false;
        if (rep.failure.empty())
            rep.failure = why;
    };

    auto is_minimum = [&](const Exponents& e) { return normal_form(e, gb) == e; };

    std::vector<Exponents> mnm;
    for (const auto& e : monomials_up_to(ideal.nvars(), bound)) {
        ++rep.monomials;
        Exponents nf = normal_form(e, gb);
        bool minimum = nf == e;
        if (order.compare(nf, e) > 0)
            fail("normal form of " + monomial_to_string(e) + " is larger than the monomial");
        if (in.contains(e) == minimum)
            fail(monomial_to_string(e) + ": membership in the initial ideal disagrees with fiber minimality");
        if (minimum)
            continue;
        bool minimal = true;
        for (std::size_t j = 0; j < e.size() && minimal; ++j) {
            if (e[j] == 0)
                continue;
            Exponents d = e;
            --d[j];
            if (!is_minimum(d))
                minimal = false;
        }
        if (!minimal)
            continue;
        mnm.push_back(e);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0 && nf[j] != 0)
                fail("minimal non-minimum " + monomial_to_string(e) + " shares support with its fiber minimum");
    }
    rep.minimal_non_minima = mnm.size();

    std::vector<Exponents> low;
    for (const auto& g : in.generators())
        if (degree(g) <= static_cast<long>(bound))
            low.push_back(g);
    std::sort(mnm.begin(), mnm.end());
    if (low != mnm)
        fail("minimal non-minima differ from the low-degree generators of the initial ideal");
    return rep;
}

// ---------------------------------------------------------------------------

std::string monomial_to_string(const Exponents& e)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        os << (first ? "" : "*") << "x" << i + 1;
        if (e[i] > 1)
            os << "^" << e[i];
        first = false;
    }
    if (first)
        os << "1";
    return os.str();
}

std::string to_string(const MarkedBinomial& b)
{
    return monomial_to_string(b.lead) + " - " + monomial_to_string(b.trail);
}

std::string to_string(const MonomialIdeal& i)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < i.generators().size(); ++k)
        os << (k ? ", " : "") << monomial_to_string(i.generators()[k]);
    os << ")";
    return os.str();
}

}  // namespace fanforge

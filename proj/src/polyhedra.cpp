#include "fanforge/polyhedra.hpp"

#include <algorithm>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace fanforge {

namespace {

struct Generators
{
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y)
{
    IntVector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = a * x[i] - b * y[i];
    return make_primitive(std::move(z));
}

/**
 * Double description: generators of {x in R^dim : a.x >= 0 for all a}.
 *
 * Starts from R^dim (lineality = standard basis, no rays) and adds one
 * constraint at a time.  While the lineality space is not orthogonal to the
 * new constraint, one lineality direction is promoted to a ray.  Otherwise the
 * rays are split by sign and each adjacent (+,-) pair contributes the ray on
 * the hyperplane.  Adjacency is the combinatorial test: no third ray is
 * tight on every constraint the pair shares.
 */
Generators double_description(std::size_t dim, const std::vector<IntVector>& constraints)
{
    std::vector<IntVector> cons;
    for (const auto& a : constraints) {
        if (a.size() != dim)
            throw DimensionMismatch("double description: constraint of wrong dimension");
        if (!is_zero(a))
            cons.push_back(make_primitive(a));
    }
    std::sort(cons.begin(), cons.end());
    cons.erase(std::unique(cons.begin(), cons.end()), cons.end());

    using Bits = boost::dynamic_bitset<>;
    struct Ray
    {
        IntVector v;
        Bits tight;
    };

    std::vector<IntVector> lin;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim, Integer(0));
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<Ray> rays;
    const std::size_t total = cons.size();

    for (std::size_t k = 0; k < total; ++k) {
        const IntVector& a = cons[k];

        std::size_t pick = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                pick = i;
                break;
            }

        if (pick < lin.size()) {
            IntVector l = lin[pick];
            Integer al = dot(a, l);
            if (al < 0) {
                for (auto& x : l)
                    x = -x;
                al = -al;
            }
            std::vector<IntVector> next_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == pick)
                    continue;
                next_lin.push_back(combine(al, lin[i], dot(a, lin[i]), l));
            }
            for (auto& r : rays) {
                r.v = combine(al, r.v, dot(a, r.v), l);
                r.tight.set(k);
            }
            Bits t(total);
            for (std::size_t j = 0; j < k; ++j)
                t.set(j);
            rays.push_back({l, std::move(t)});
            lin = std::move(next_lin);
            continue;
        }

        std::vector<Integer> s(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            s[i] = dot(a, rays[i].v);

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (s[i] > 0) {
                next.push_back(rays[i]);
            } else if (s[i] == 0) {
                next.push_back(rays[i]);
                next.back().tight.set(k);
            }
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (s[p] <= 0)
                continue;
            for (std::size_t n = 0; n < rays.size(); ++n) {
                if (s[n] >= 0)
                    continue;
                Bits common = rays[p].tight & rays[n].tight;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == p || o == n)
                        continue;
                    if (common.is_subset_of(rays[o].tight))
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                // s_p * r_n - s_n * r_p lies on the hyperplane a.x = 0
                IntVector v = combine(s[p], rays[n].v, s[n], rays[p].v);
                common.set(k);
                next.push_back({std::move(v), std::move(common)});
            }
        }
        rays = std::move(next);
    }

    Generators g;
    g.lineality = std::move(lin);
    for (auto& r : rays)
        g.rays.push_back(std::move(r.v));
    return g;
}

// x minus its orthogonal projection onto span(basis), scaled primitive.
IntVector project_out(const IntVector& x, const std::vector<IntVector>& basis)
{
    if (basis.empty())
        return make_primitive(x);
    const std::size_t k = basis.size();
    IntMatrix gram(k, k);
    RatVector rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            gram(i, j) = dot(basis[i], basis[j]);
        rhs[i] = dot(basis[i], x);
    }
    auto c = solve_rational(gram, rhs);
    RatVector y = to_rat_vector(x);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            y[j] -= (*c)[i] * basis[i][j];
    return make_primitive(y);
}

std::vector<IntVector> canonical_rays(const std::vector<IntVector>& rays,
                                      const std::vector<IntVector>& lineality_basis)
{
    std::vector<IntVector> out;
    for (const auto& r : rays) {
        IntVector p = project_out(r, lineality_basis);
        if (!is_zero(p))
            out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IntVector> with_negations(const std::vector<IntVector>& base,
                                      const std::vector<IntVector>& both_ways)
{
    std::vector<IntVector> out = base;
    for (const auto& v : both_ways) {
        out.push_back(v);
        IntVector w = v;
        for (auto& x : w)
            x = -x;
        out.push_back(std::move(w));
    }
    return out;
}

void check_dims(std::size_t dim, const std::vector<IntVector>& vs)
{
    for (const auto& v : vs)
        if (v.size() != dim)
            throw DimensionMismatch("cone: vector of dimension " + std::to_string(v.size()) +
                                    " in ambient dimension " + std::to_string(dim));
}

}  // namespace

Cone Cone::from_generators(std::size_t dim, const std::vector<IntVector>& rays,
                           const std::vector<IntVector>& lineality)
{
    check_dims(dim, rays);
    check_dims(dim, lineality);
    // Dual first: its generators are the facets and equations.
    Generators h = double_description(dim, with_negations(rays, lineality));
    Cone c;
    c.dim_ = dim;
    c.equations_ = span_basis(h.lineality, dim);
    c.facets_ = canonical_rays(h.rays, c.equations_);
    // Back again for an irredundant V-representation.
    Generators v = double_description(dim, with_negations(c.facets_, c.equations_));
    c.lineality_ = span_basis(v.lineality, dim);
    c.rays_ = canonical_rays(v.rays, c.lineality_);
    return c;
}

Cone Cone::from_inequalities(std::size_t dim, const std::vector<IntVector>& inequalities,
                             const std::vector<IntVector>& equations)
{
    check_dims(dim, inequalities);
    check_dims(dim, equations);
    Generators v = double_description(dim, with_negations(inequalities, equations));
    Cone c;
    c.dim_ = dim;
    c.lineality_ = span_basis(v.lineality, dim);
    c.rays_ = canonical_rays(v.rays, c.lineality_);
    Generators h = double_description(dim, with_negations(c.rays_, c.lineality_));
    c.equations_ = span_basis(h.lineality, dim);
    c.facets_ = canonical_rays(h.rays, c.equations_);
    return c;
}

Cone Cone::whole_space(std::size_t dim)
{
    return from_inequalities(dim, {});
}

Cone Cone::origin(std::size_t dim)
{
    return from_generators(dim, {});
}

Cone Cone::orthant(std::size_t dim)
{
    std::vector<IntVector> e;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector v(dim, Integer(0));
        v[i] = 1;
        e.push_back(std::move(v));
    }
    return from_generators(dim, e);
}

bool Cone::contains(const IntVector& x) const
{
    if (x.size() != dim_)
        throw DimensionMismatch("cone membership: dimension mismatch");
    for (const auto& e : equations_)
        if (dot(e, x) != 0)
            return false;
    for (const auto& f : facets_)
        if (dot(f, x) < 0)
            return false;
    return true;
}

bool Cone::contains_in_relative_interior(const IntVector& x) const
{
    if (x.size() != dim_)
        throw DimensionMismatch("cone membership: dimension mismatch");
    for (const auto& e : equations_)
        if (dot(e, x) != 0)
            return false;
    for (const auto& f : facets_)
        if (dot(f, x) <= 0)
            return false;
    return true;
}

bool Cone::contains(const Cone& other) const
{
    if (other.dim_ != dim_)
        throw DimensionMismatch("cone containment: dimension mismatch");
    for (const auto& r : other.rays_)
        if (!contains(r))
            return false;
    for (const auto& l : other.lineality_) {
        for (const auto& e : equations_)
            if (dot(e, l) != 0)
                return false;
        for (const auto& f : facets_)
            if (dot(f, l) != 0)
                return false;
    }
    return true;
}

bool Cone::operator==(const Cone& other) const
{
    return dim_ == other.dim_ && contains(other) && other.contains(*this);
}

IntVector Cone::relative_interior_point() const
{
    IntVector p(dim_, Integer(0));
    for (const auto& r : rays_)
        for (std::size_t i = 0; i < dim_; ++i)
            p[i] += r[i];
    return p;
}

std::string Cone::to_string() const
{
    std::ostringstream os;
    os << "Cone(dim " << dim() << "/" << dim_ << "; rays";
    for (const auto& r : rays_)
        os << " " << fanforge::to_string(r);
    if (!lineality_.empty()) {
        os << "; lineality";
        for (const auto& l : lineality_)
            os << " " << fanforge::to_string(l);
    }
    os << ")";
    return os.str();
}

Cone dual_cone(const Cone& c)
{
    // The two representations swap roles.
    Cone d = Cone::from_inequalities(c.ambient_dim(), c.rays(), c.lineality());
    return d;
}

Cone intersect(const Cone& a, const Cone& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("intersect: cones live in different dimensions");
    std::vector<IntVector> ineq = a.facets();
    ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
    std::vector<IntVector> eq = a.equations();
    eq.insert(eq.end(), b.equations().begin(), b.equations().end());
    return Cone::from_inequalities(a.ambient_dim(), ineq, eq);
}

std::size_t cone_dim(const Cone& c)
{
    return c.dim();
}

bool interiors_disjoint(const Cone& a, const Cone& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("interiors_disjoint: cones live in different dimensions");
    if (!a.is_full_dimensional() || !b.is_full_dimensional())
        throw NotFullDimensional("interiors_disjoint: both cones must be full-dimensional");
    return intersect(a, b).dim() < a.ambient_dim();
}

IntVector interior_point(const Cone& c)
{
    if (!c.is_full_dimensional())
        throw NotFullDimensional("interior_point: cone of dimension " + std::to_string(c.dim()) +
                                 " in R^" + std::to_string(c.ambient_dim()));
    return c.relative_interior_point();
}

Cone linear_image(const IntMatrix& m, const Cone& c)
{
    if (m.cols() != c.ambient_dim())
        throw DimensionMismatch("linear_image: dimension mismatch");
    std::vector<IntVector> rays, lin;
    for (const auto& r : c.rays())
        rays.push_back(m * r);
    for (const auto& l : c.lineality())
        lin.push_back(m * l);
    return Cone::from_generators(m.rows(), rays, lin);
}

Cone linear_preimage(const IntMatrix& m, const Cone& c)
{
    if (m.rows() != c.ambient_dim())
        throw DimensionMismatch("linear_preimage: dimension mismatch");
    IntMatrix mt = m.transpose();
    std::vector<IntVector> ineq, eq;
    for (const auto& f : c.facets())
        ineq.push_back(mt * f);
    for (const auto& e : c.equations())
        eq.push_back(mt * e);
    return Cone::from_inequalities(m.cols(), ineq, eq);
}

}  // namespace fanforge

#include "fanforge/secondary_fan.hpp"

#include <numeric>
#include <stdexcept>

namespace fanforge {

WeightMatrix WeightMatrix::from_matrix(const IntMatrix& q, const FanMatrix& v)
{
    if (q.cols() != v.m() || q.rows() != v.r())
        throw std::invalid_argument("weight matrix must be " + std::to_string(v.r()) + " x " +
                                    std::to_string(v.m()));
    if (!(v.matrix() * q.transpose()).is_zero())
        throw std::invalid_argument("V Q^T is not zero");
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            if (q(i, j) < 0)
                throw std::invalid_argument("weight matrix has a negative entry");
    if (!same_row_lattice(q, integer_kernel_basis(v.matrix())))
        throw std::invalid_argument("rows of Q do not span the integer kernel of V");
    WeightMatrix w;
    w.q_ = q;
    return w;
}

WeightMatrix gale_dual(const FanMatrix& v)
{
    const std::size_t m = v.m();
    const std::size_t r = v.r();
    IntMatrix k = integer_kernel_basis(v.matrix());

    // strictly positive kernel vector
    Cone u = Cone::from_inequalities(m, Cone::orthant(m).facets(), v.matrix().row_list());
    IntVector p = make_primitive(u.relative_interior_point());
    for (const auto& x : p)
        if (x <= 0)
            throw std::logic_error("gale_dual: no strictly positive kernel vector");

    // coefficients of p in the kernel basis, completed to a unimodular matrix
    auto c = solve_rational(k.transpose(), to_rat_vector(p));
    if (!c)
        throw std::logic_error("gale_dual: kernel vector outside the kernel basis span");
    IntMatrix cc(r, 1);
    for (std::size_t i = 0; i < r; ++i) {
        if ((*c)[i].get_den() != 1)
            throw std::logic_error("gale_dual: kernel basis is not saturated");
        cc(i, 0) = (*c)[i].get_num();
    }
    IntMatrix basis = unimodular_inverse(hermite_normal_form(cc).U).transpose();
    IntMatrix q = basis * k;

    for (std::size_t i = 1; i < r; ++i) {
        Integer t = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (q(i, j) < 0) {
                Integer need = (-q(i, j) + p[j] - 1) / p[j];
                if (need > t)
                    t = need;
            }
        for (std::size_t j = 0; j < m; ++j)
            q(i, j) += t * p[j];
    }
    return WeightMatrix::from_matrix(q, v);
}

FanMatrix cf_cover(const FanMatrix& v)
{
    return validate_fan_matrix(integer_kernel_basis(gale_dual(v).matrix()));
}

namespace {

Cone cone_on_columns(const WeightMatrix& q, const IndexSet& cols)
{
    std::vector<IntVector> gens;
    for (auto j : cols)
        gens.push_back(q.column(j));
    return Cone::from_generators(q.r(), gens);
}

IndexSet complement(const IndexSet& s, std::size_t m)
{
    IndexSet out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (k < s.size() && s[k] == j) {
            ++k;
            continue;
        }
        out.push_back(j);
    }
    return out;
}

bool relative_interiors_meet(const Cone& a, const Cone& b)
{
    IntVector p = intersect(a, b).relative_interior_point();
    return a.contains_in_relative_interior(p) && b.contains_in_relative_interior(p);
}

}  // namespace

Bunch bunch_of_fan(const Fan& f, const WeightMatrix& q)
{
    Bunch b;
    for (const auto& j : f.max_cones) {
        IndexSet c = complement(j, q.m());
        b.cones.push_back(cone_on_columns(q, c));
        b.complements.push_back(std::move(c));
    }
    return b;
}

bool is_bunch(const Bunch& b, const WeightMatrix& q)
{
    for (std::size_t i = 0; i < b.cones.size(); ++i)
        for (std::size_t j = i + 1; j < b.cones.size(); ++j)
            if (!relative_interiors_meet(b.cones[i], b.cones[j]))
                return false;
    for (std::size_t i = 0; i < q.m(); ++i) {
        IndexSet rest = complement({i}, q.m());
        Cone without = cone_on_columns(q, rest);
        bool found = false;
        for (const auto& c : b.cones)
            if (without.contains(c)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

Cone nef_cone(const Fan& f, const WeightMatrix& q)
{
    Bunch b = bunch_of_fan(f, q);
    Cone out = effective_cone(q);
    for (const auto& c : b.cones)
        out = intersect(out, c);
    return out;
}

bool is_projective(const Fan& f, const WeightMatrix& q)
{
    return cone_dim(nef_cone(f, q)) == q.r();
}

Cone movable_cone(const WeightMatrix& q)
{
    Cone out = effective_cone(q);
    for (std::size_t i = 0; i < q.m(); ++i)
        out = intersect(out, cone_on_columns(q, complement({i}, q.m())));
    return out;
}

Cone effective_cone(const WeightMatrix& q)
{
    return Cone::from_generators(q.r(), q.matrix().col_list());
}

IntVector anticanonical_class(const WeightMatrix& q)
{
    return q.matrix() * IntVector(q.m(), Integer(1));
}

FamilyMember family_matrices(long p, long q)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("family_matrices: p and q must be positive");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("family_matrices: gcd(p, q) must be 1");
    IntMatrix qm{{1, 1, 0, 0, 1, 0}, {0, 1, 1, q, 0, 0}, {0, 0, 0, p, 1, 1}};
    IntMatrix vm{{1, 0, 0, 0, -1, 1}, {0, 1, q - 1, -1, -1, p + 1}, {0, 0, q, -1, 0, p}};
    if (!(vm * qm.transpose()).is_zero())
        throw std::logic_error("family_matrices: V Q^T != 0");
    if (!same_row_lattice(qm, integer_kernel_basis(vm)))
        throw std::logic_error("family_matrices: Q does not span ker V");
    return {qm, vm};
}

}  // namespace fanforge

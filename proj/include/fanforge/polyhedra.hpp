#ifndef FANFORGE_POLYHEDRA_HPP
#define FANFORGE_POLYHEDRA_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanforge/linalg.hpp"

namespace fanforge {

struct DimensionMismatch : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct NotFullDimensional : std::domain_error
{
    using std::domain_error::domain_error;
};

/**
 * A rational polyhedral cone held in both representations.
 *
 * V-representation: a basis of the lineality space plus the extreme rays of
 * the pointed part, each ray projected onto the orthogonal complement of the
 * lineality space.  H-representation: a basis of the equations (orthogonal
 * complement of the linear span) plus one inner normal per facet, projected
 * onto the linear span.  Every vector is primitive and integral, and each
 * list is sorted, so two equal cones built through different routes carry
 * identical data.  Equality is nonetheless decided by mutual containment.
 */
class Cone
{
  public:
    Cone() = default;

    /// Cone generated by `rays` plus the linear space spanned by `lineality`.
    /// Zero generators are dropped.
    static Cone from_generators(std::size_t dim, const std::vector<IntVector>& rays,
                                const std::vector<IntVector>& lineality = {});

    /// {x : a.x >= 0 for a in inequalities, e.x = 0 for e in equations}.
    static Cone from_inequalities(std::size_t dim, const std::vector<IntVector>& inequalities,
                                  const std::vector<IntVector>& equations = {});

    static Cone whole_space(std::size_t dim);
    static Cone origin(std::size_t dim);
    static Cone orthant(std::size_t dim);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t dim() const { return dim_ - equations_.size(); }
    std::size_t lineality_dim() const { return lineality_.size(); }
    bool is_full_dimensional() const { return equations_.empty(); }
    bool is_pointed() const { return lineality_.empty(); }

    const std::vector<IntVector>& rays() const { return rays_; }
    const std::vector<IntVector>& lineality() const { return lineality_; }
    const std::vector<IntVector>& facets() const { return facets_; }
    const std::vector<IntVector>& equations() const { return equations_; }

    bool contains(const IntVector& x) const;
    bool contains(const Cone& other) const;
    /// x satisfies every equation and every facet inequality strictly.
    bool contains_in_relative_interior(const IntVector& x) const;

    bool operator==(const Cone& other) const;

    /// Sum of the extreme rays: a point of the relative interior.
    IntVector relative_interior_point() const;

    std::string to_string() const;

  private:
    std::size_t dim_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IntVector> lineality_;
    std::vector<IntVector> facets_;
    std::vector<IntVector> equations_;
};

/// {f : f.y >= 0 for all y in c}
Cone dual_cone(const Cone& c);

/// Throws DimensionMismatch on differing ambient dimensions.
Cone intersect(const Cone& a, const Cone& b);

std::size_t cone_dim(const Cone& c);

/**
 * For two full-dimensional cones of the same ambient dimension: true iff
 * their interiors do not meet, i.e. the intersection is lower dimensional.
 */
bool interiors_disjoint(const Cone& a, const Cone& b);

/// A point strictly inside every facet; throws NotFullDimensional otherwise.
IntVector interior_point(const Cone& c);

/// Image of the cone under a linear map x -> M x.
Cone linear_image(const IntMatrix& m, const Cone& c);

/// Preimage {x : M x in c}.
Cone linear_preimage(const IntMatrix& m, const Cone& c);

}  // namespace fanforge

#endif

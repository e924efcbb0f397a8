#ifndef FANFORGE_SECONDARY_FAN_HPP
#define FANFORGE_SECONDARY_FAN_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fanforge/fan_search.hpp"
#include "fanforge/linalg.hpp"
#include "fanforge/polyhedra.hpp"

namespace fanforge {

/**
 * Gale dual of a fan matrix: r x m, nonnegative, rows a Z-basis of the
 * integer kernel of V.
 */
class WeightMatrix
{
  public:
    /// Checks V Q^T = 0, Q >= 0 and that Q's rows span the whole integer
    /// kernel of V; throws std::invalid_argument otherwise.
    static WeightMatrix from_matrix(const IntMatrix& q, const FanMatrix& v);

    const IntMatrix& matrix() const { return q_; }
    std::size_t r() const { return q_.rows(); }
    std::size_t m() const { return q_.cols(); }
    IntVector column(std::size_t j) const { return q_.col(j); }

  private:
    IntMatrix q_;
};

/// Nonnegative Gale dual; rows are a cotorsion-free basis of ker(V).
WeightMatrix gale_dual(const FanMatrix& v);

/// The CF-matrix sharing V's Gale dual: the Gale dual of the Gale dual.
FanMatrix cf_cover(const FanMatrix& v);

/// One cone <Q_{complement of J}> per maximal cone J of the fan.
struct Bunch
{
    std::vector<IndexSet> complements;
    std::vector<Cone> cones;
};

Bunch bunch_of_fan(const Fan& f, const WeightMatrix& q);

/// Pairwise relative interiors meet, and for every column i some member lies
/// in <Q^{i}>.
bool is_bunch(const Bunch& b, const WeightMatrix& q);

/// Intersection of the bunch cones.
Cone nef_cone(const Fan& f, const WeightMatrix& q);

bool is_projective(const Fan& f, const WeightMatrix& q);

/// Intersection over i of the cones on Q with column i removed.
Cone movable_cone(const WeightMatrix& q);

/// <Q>, the effective cone.
Cone effective_cone(const WeightMatrix& q);

/// Q (1,...,1)^T
IntVector anticanonical_class(const WeightMatrix& q);

struct FamilyMember
{
    IntMatrix q;
    IntMatrix v;
};

/**
 * The deformation of the threefold weights moving q4 to (0, q, p):
 * returns the weight and fan matrices, after checking V Q^T = 0 and
 * that Q spans the integer kernel of V.  Throws std::invalid_argument when
 * gcd(p, q) != 1 or p, q < 1.
 */
FamilyMember family_matrices(long p, long q);

}  // namespace fanforge

#endif

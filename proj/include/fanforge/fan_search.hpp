#ifndef FANFORGE_FAN_SEARCH_HPP
#define FANFORGE_FAN_SEARCH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanforge/linalg.hpp"
#include "fanforge/polyhedra.hpp"

namespace fanforge {

/// Sorted, duplicate-free column indices (0-based internally).
using IndexSet = std::vector<std::size_t>;

/// One of the F/CF-matrix axioms a)-f) fails.
class AxiomViolation : public std::runtime_error
{
  public:
    AxiomViolation(char axiom, std::string witness);
    char axiom() const { return axiom_; }
    const std::string& witness() const { return witness_; }

  private:
    char axiom_;
    std::string witness_;
};

/**
 * A validated n x m fan matrix: full rank, nonzero primitive columns, no two
 * columns positively proportional, columns positively spanning R^n.
 */
class FanMatrix
{
  public:
    /// Throws AxiomViolation naming the first failing axiom.
    static FanMatrix validate(const IntMatrix& m);

    const IntMatrix& matrix() const { return v_; }
    std::size_t n() const { return v_.rows(); }
    std::size_t m() const { return v_.cols(); }
    std::size_t r() const { return v_.cols() - v_.rows(); }
    bool is_cf() const { return is_cf_; }
    const IntVector& column(std::size_t j) const { return columns_[j]; }

  private:
    IntMatrix v_;
    std::vector<IntVector> columns_;
    bool is_cf_ = false;
};

FanMatrix validate_fan_matrix(const IntMatrix& m);

/// Maximal cones as index sets; kept sorted so equal fans compare equal.
struct Fan
{
    std::vector<IndexSet> max_cones;

    auto operator<=>(const Fan&) const = default;
    bool operator==(const Fan&) const = default;

    static Fan canonical(std::vector<IndexSet> cones);
};

struct OrientedFacet
{
    IndexSet indices;                ///< n-1 column indices
    IntVector normal;                ///< primitive, first nonzero entry positive
    std::vector<std::size_t> plus;   ///< minimal cones on the positive side
    std::vector<std::size_t> minus;  ///< minimal cones on the negative side
};

/// The simplicial cone <V_I>.
Cone simplicial_cone(const FanMatrix& v, const IndexSet& idx);

/// All n-subsets I with det V_I != 0 and no other column inside <V_I>.
std::vector<IndexSet> minimal_cones(const FanMatrix& v);

/// Facets of the given cones with their positive/negative incidence lists
/// (entries index into `cones`).
std::vector<OrientedFacet> oriented_facets(const std::vector<IndexSet>& cones, const FanMatrix& v);

/**
 * SF(V): every complete simplicial fan whose rays are exactly the columns.
 *
 * Backtracking over the minimal cones.  A chosen cone forces every other cone
 * on the same side of each of its facets out, and each open facet branches on
 * which opposite cone closes it.  With `verify_overlap` false the result is
 * the set of pseudofans (facet-matched, ray-covering collections).
 */
std::vector<Fan> enumerate_sf(const FanMatrix& v, bool verify_overlap = true);

/// Checks the four fan invariants by routes independent of the search;
/// returns a description of the first violation.
std::optional<std::string> check_fan(const FanMatrix& v, const Fan& f);

struct PseudofanCounterexample
{
    Fan collection;
    IndexSet first;   ///< two cones whose interiors overlap
    IndexSet second;
};

struct PseudofanReport
{
    std::size_t pseudofans = 0;
    std::size_t fans = 0;
    std::vector<PseudofanCounterexample> counterexamples;
};

/**
 * Enumerates every collection of minimal cones that covers all columns and
 * in which every facet of a member is shared by exactly one member on the
 * opposite side (no minimality requirement), then runs the overlap check on
 * each one.
 */
PseudofanReport test_pseudofan_conjecture(const FanMatrix& v);

std::string to_string(const IndexSet& s);
std::string to_string(const Fan& f);

}  // namespace fanforge

#endif

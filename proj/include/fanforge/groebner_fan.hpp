#ifndef FANFORGE_GROEBNER_FAN_HPP
#define FANFORGE_GROEBNER_FAN_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fanforge/fan_search.hpp"
#include "fanforge/polyhedra.hpp"
#include "fanforge/secondary_fan.hpp"
#include "fanforge/toric_ideal.hpp"

namespace fanforge {

struct NotAFan : std::domain_error
{
    using std::domain_error::domain_error;
};

/// One full-dimensional Groebner cone of a homogeneous binomial ideal.
struct GroebnerRecord
{
    std::vector<MarkedBinomial> gb;
    MonomialIdeal initial;
    Cone cone;          ///< {w : w.(lead - trail) >= 0 on gb}
    IntVector interior; ///< a point of the open cone
};

/**
 * Homogenization of the ideal in one extra variable x_{m+1}: the reduced
 * Groebner basis under total degree refined by lex, each element homogenized.
 */
BinomialIdeal homogenize(const BinomialIdeal& ideal);

/**
 * Every reduced Groebner basis of a homogeneous binomial ideal, found by
 * breadth-first traversal of the Groebner fan.  Each level is processed with
 * up to `threads` workers; the result is sorted by initial ideal and does not
 * depend on the thread count.  An empty `start` means the interior of the
 * cone of the total-degree order; otherwise it must be a generic weight.
 */
std::vector<GroebnerRecord> enumerate_initial_ideals(const BinomialIdeal& homogeneous, unsigned threads = 1,
                                                     const IntVector& start = {});

struct DehomogenizedIdeal
{
    MonomialIdeal initial;
    std::vector<std::size_t> records;  ///< indices of the homogeneous records mapping here
};

struct FilterOutcome
{
    std::size_t records = 0;          ///< Groebner cones of the homogenized ideal
    std::size_t without_aux_power = 0; ///< cones whose initial ideal has no power of x_{m+1}
    std::size_t dehomogenized = 0;     ///< distinct ideals after setting x_{m+1} = 1
    std::size_t surviving_records = 0; ///< cones behind the survivors
    std::vector<DehomogenizedIdeal> survivors;  ///< no power of any x_i; sorted
};

/// `m` is the number of variables of the original (dehomogenized) ideal.
FilterOutcome dehomogenize_and_filter(const std::vector<GroebnerRecord>& records, std::size_t m);

/**
 * The fan of n-sets J such that no generator of `ideal` has support inside J.
 * Throws NotAFan if some maximal face has the wrong size or the collection
 * fails a fan invariant.
 */
Fan fan_from_initial_ideal(const MonomialIdeal& ideal, const FanMatrix& v);

/// Minimal non-faces of the simplicial complex of `f` on m vertices.
MonomialIdeal stanley_reisner(const Fan& f, std::size_t m);

struct InitialToFanRecord
{
    MonomialIdeal initial;
    Fan fan;
    MonomialIdeal radical;
    std::vector<std::size_t> records;
};

struct PsfResult
{
    BinomialIdeal ideal;
    BinomialIdeal homogenized;
    std::vector<GroebnerRecord> records;
    FilterOutcome filter;
    std::vector<InitialToFanRecord> initial_ideals;
    std::vector<Fan> fans;  ///< sorted, distinct
};

/// PSF(V).  Throws std::logic_error when a radical differs from the
/// Stanley-Reisner ideal of the fan it maps to.
PsfResult enumerate_psf(const FanMatrix& v, const WeightMatrix& q, unsigned threads = 1);
PsfResult enumerate_psf(const FanMatrix& v, unsigned threads = 1);

/**
 * in_w(I) for an arbitrary integral weight w on x_1..x_m, read off the
 * homogenized ideal at (w, 0).  Throws NonGenericWeight on a tie.
 */
MonomialIdeal initial_ideal_via_homogenization(const BinomialIdeal& homogenized, const IntVector& w);

/// The weight on x_1..x_m equivalent to a weight on the homogenized ring.
IntVector dehomogenized_weight(const IntVector& w);

}  // namespace fanforge

#endif

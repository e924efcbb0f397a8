#ifndef FANFORGE_TORIC_IDEAL_HPP
#define FANFORGE_TORIC_IDEAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanforge/fan_search.hpp"
#include "fanforge/linalg.hpp"
#include "fanforge/polyhedra.hpp"
#include "fanforge/secondary_fan.hpp"

namespace fanforge {

/// Exponent vectors of monomials, and signed lattice vectors.
using Exponents = std::vector<long>;

struct NotATermOrder : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct NonGenericWeight : std::domain_error
{
    using std::domain_error::domain_error;
};

/// x^{lead} - x^{trail}; lead and trail have disjoint support except while
/// saturating, where a common factor may survive.
struct MarkedBinomial
{
    Exponents lead;
    Exponents trail;

    Exponents vector() const;  ///< lead - trail
    auto operator<=>(const MarkedBinomial&) const = default;
    bool operator==(const MarkedBinomial&) const = default;
};

/// g_u = x^{u+} - x^{u-}
Exponents positive_part(const Exponents& u);
Exponents negative_part(const Exponents& u);

/**
 * Weight order refined by further weights and finally by lex with
 * x1 > x2 > ... .  Only the first weight decides genericity.
 */
class TermOrder
{
  public:
    explicit TermOrder(IntVector weight);
    explicit TermOrder(std::vector<IntVector> weights);

    /// Scales a rational weight to a primitive integral one.
    static TermOrder from_rational(const RatVector& w);

    std::size_t nvars() const { return nvars_; }
    const IntVector& weight() const { return weights_.front(); }
    const std::vector<IntVector>& weights() const { return weights_; }

    /// -1, 0, 1 as a <, =, > b
    int compare(const Exponents& a, const Exponents& b) const;
    /// Sign of weight() . (a - b)
    int compare_primary(const Exponents& a, const Exponents& b) const;

    /// x_i > 1 for every variable.
    bool is_term_order() const;

  private:
    std::size_t nvars_ = 0;
    std::vector<IntVector> weights_;
    std::vector<std::vector<std::int64_t>> small_;  // copies when every entry fits
};

/// Sign-normalized (first nonzero entry positive), sorted, duplicate-free.
class BinomialIdeal
{
  public:
    BinomialIdeal() = default;
    BinomialIdeal(std::size_t nvars, std::vector<Exponents> generators);
    static BinomialIdeal from_gb(std::size_t nvars, const std::vector<MarkedBinomial>& gb);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Exponents>& generators() const { return gens_; }
    bool operator==(const BinomialIdeal&) const = default;

  private:
    std::size_t nvars_ = 0;
    std::vector<Exponents> gens_;
};

/// Minimal generators, sorted.
class MonomialIdeal
{
  public:
    MonomialIdeal() = default;
    MonomialIdeal(std::size_t nvars, std::vector<Exponents> generators);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Exponents>& generators() const { return gens_; }
    bool contains(const Exponents& e) const;
    /// Some generator is a pure power of x_i.
    bool contains_variable_power(std::size_t i) const;
    /// Squarefree parts of the generators, minimalized.
    MonomialIdeal radical() const;

    auto operator<=>(const MonomialIdeal&) const = default;
    bool operator==(const MonomialIdeal&) const = default;

  private:
    std::size_t nvars_ = 0;
    std::vector<Exponents> gens_;
};

bool divides(const Exponents& a, const Exponents& b);

/**
 * I_V as the lattice ideal of the rows of the Gale dual saturated by every
 * variable in turn.  The generators are a reduced Groebner basis.
 */
BinomialIdeal toric_ideal(const FanMatrix& v);
BinomialIdeal toric_ideal(const FanMatrix& v, const WeightMatrix& q);

/// J : x_var^infinity, via an extra variable t and the binomial t x_var - 1.
BinomialIdeal saturate(const BinomialIdeal& j, std::size_t var);

/// Reduced Groebner basis, sorted.  Throws NotATermOrder.
std::vector<MarkedBinomial> buchberger(const BinomialIdeal& ideal, const TermOrder& order);

/// Standard monomial of x^e modulo a Groebner basis.
Exponents normal_form(Exponents e, const std::vector<MarkedBinomial>& gb);

bool reduces_to_zero(const Exponents& u, const std::vector<MarkedBinomial>& gb);

/// No element of the basis is tied under the primary weight.
bool is_generic(const std::vector<MarkedBinomial>& gb, const TermOrder& order);

/// Leading monomials of a reduced Groebner basis.
MonomialIdeal leading_ideal(std::size_t nvars, const std::vector<MarkedBinomial>& gb);

/// in_w(I); throws NonGenericWeight when the basis has a tied element.
MonomialIdeal initial_ideal(const BinomialIdeal& ideal, const TermOrder& order);

/// Ideal equality by mutual reduction to zero.
bool same_ideal(const BinomialIdeal& a, const BinomialIdeal& b);

/**
 * The Groebner region computed three independent ways: the dual of
 * U = ker(V) intersected with the orthant, the projection of
 * {(w, y) : V^T y <= w}, and the preimage Q^{-1}(<Q>).
 */
struct GroebnerRegion
{
    Cone dual_of_u;
    Cone farkas_projection;
    Cone preimage;

    bool agree() const { return dual_of_u == farkas_projection && farkas_projection == preimage; }
};

GroebnerRegion groebner_region(const FanMatrix& v, const WeightMatrix& q);

/**
 * A nonnegative weight c with Q c = Q w, which yields the same initial ideal
 * of I_V as w.  Throws std::domain_error when w lies outside the region.
 */
RatVector nonnegative_representative(const IntMatrix& q, const RatVector& w);

struct MinNonMinimaReport
{
    bool ok = true;
    std::size_t monomials = 0;
    std::size_t minimal_non_minima = 0;
    std::string failure;

    explicit operator bool() const { return ok; }
};

/**
 * Over all exponent vectors of degree <= bound: e lies in in_w(I) iff e is
 * not the minimum of its fiber; minimal non-minima have support disjoint from
 * their fiber minimum and are exactly the low-degree generators of in_w(I).
 */
MinNonMinimaReport min_nonminima_check(const BinomialIdeal& ideal, const TermOrder& order,
                                       std::size_t bound);

/// Every exponent vector in N^nvars of total degree <= bound.
std::vector<Exponents> monomials_up_to(std::size_t nvars, std::size_t bound);

std::string monomial_to_string(const Exponents& e);
std::string to_string(const MarkedBinomial& b);
std::string to_string(const MonomialIdeal& i);

}  // namespace fanforge

#endif

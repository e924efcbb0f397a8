#ifndef FANFORGE_LINALG_HPP
#define FANFORGE_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

/**
 * Exact integer and rational matrix kernel.
 *
 * Everything here works over arbitrary-precision integers (GMP); there is no
 * floating point anywhere in this module.  Matrices are small and dense, so
 * the algorithms are the textbook ones without pivoting heuristics.
 */
namespace fanforge {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class IntMatrix
{
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t k);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    std::vector<IntVector> row_list() const;
    std::vector<IntVector> col_list() const;

    IntMatrix transpose() const;
    IntMatrix select_columns(std::span<const std::size_t> idx) const;
    IntMatrix select_rows(std::span<const std::size_t> idx) const;

    bool is_zero() const;
    bool operator==(const IntMatrix& other) const = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    IntVector operator*(const IntVector& x) const;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

struct HermiteForm
{
    IntMatrix H;  ///< row Hermite normal form, H = U * A
    IntMatrix U;  ///< unimodular transform
    std::size_t rank = 0;
};

/// Row-style HNF: positive pivots, entries above a pivot reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix& a);

/**
 * Z-basis of {x in Z^cols : A x = 0}, one basis vector per row, returned in
 * Hermite normal form.  The lattice is saturated in Z^cols.
 */
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& a);

/// Some x with A x = b (free variables set to zero), or nullopt.
std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b);

std::size_t rank(const IntMatrix& a);
Integer determinant(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// True when both matrices' rows span the same sublattice of Z^cols.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

/// Nonzero rows of the HNF: a canonical basis of the row lattice.
IntMatrix row_lattice_basis(const IntMatrix& a);

// vector helpers

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
IntVector to_int_vector(std::initializer_list<long> v);
RatVector to_rat_vector(const IntVector& v);
bool is_zero(const IntVector& v);
Integer content(const IntVector& v);

/// Divide by the gcd of the entries; the zero vector is returned unchanged.
IntVector make_primitive(IntVector v);
/// Clear denominators then divide by the gcd.
IntVector make_primitive(const RatVector& v);

/// Rational row-reduced echelon basis of the row span, each row scaled primitive.
std::vector<IntVector> span_basis(const std::vector<IntVector>& rows, std::size_t dim);

/// Basis of the orthogonal complement of the span of `rows` in Q^dim.
std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& rows, std::size_t dim);

std::string to_string(const IntVector& v);

}  // namespace fanforge

#endif

#include "fanforge/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fanforge {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r)
            entries_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t k)
{
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("IntMatrix::from_rows: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const
{
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

std::vector<IntVector> IntMatrix::row_list() const
{
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

std::vector<IntVector> IntMatrix::col_list() const
{
    std::vector<IntVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        out.push_back(col(j));
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> idx) const
{
    IntMatrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k)
            m(i, k) = (*this)(i, idx[k]);
    return m;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> idx) const
{
    IntMatrix m(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j)
            m(k, j) = (*this)(idx[k], j);
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("IntMatrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

IntVector IntMatrix::operator*(const IntVector& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("IntMatrix * vector: dimension mismatch");
    IntVector y(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            y[i] += (*this)(i, j) * x[j];
    return y;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", " : "") << fanforge::to_string(row(i));
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

// row[dst] -= q * row[src]
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) -= q * m(src, j);
}

void negate_row(IntMatrix& m, std::size_t r)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m(i, a), m(i, b));
}

void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) -= q * m(i, src);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer trunc_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

using RatMatrix = std::vector<RatVector>;

RatMatrix to_rat(const IntMatrix& a)
{
    RatMatrix m(a.rows(), RatVector(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = a(i, j);
    return m;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r])
            x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a)
{
    HermiteForm out{a, IntMatrix::identity(a.rows()), 0};
    IntMatrix& h = out.H;
    IntMatrix& u = out.U;
    const std::size_t rows = h.rows();
    std::size_t k = 0;
    for (std::size_t j = 0; j < h.cols() && k < rows; ++j) {
        // Euclid on column j below row k.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = k; i < rows; ++i) {
                if (h(i, j) == 0)
                    continue;
                if (best == rows || abs(h(i, j)) < abs(h(best, j)))
                    best = i;
            }
            if (best == rows)
                break;
            swap_rows(h, best, k);
            swap_rows(u, best, k);
            bool cleared = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (h(i, j) == 0)
                    continue;
                Integer q = trunc_div(h(i, j), h(k, j));
                sub_row(h, i, k, q);
                sub_row(u, i, k, q);
                if (h(i, j) != 0)
                    cleared = false;
            }
            if (cleared)
                break;
        }
        if (h(k, j) == 0)
            continue;
        if (h(k, j) < 0) {
            negate_row(h, k);
            negate_row(u, k);
        }
        for (std::size_t i = 0; i < k; ++i) {
            Integer q = floor_div(h(i, j), h(k, j));
            sub_row(h, i, k, q);
            sub_row(u, i, k, q);
        }
        ++k;
    }
    out.rank = k;
    return out;
}

IntMatrix row_lattice_basis(const IntMatrix& a)
{
    HermiteForm hf = hermite_normal_form(a);
    std::vector<std::size_t> idx(hf.rank);
    for (std::size_t i = 0; i < hf.rank; ++i)
        idx[i] = i;
    return hf.H.select_rows(idx);
}

IntMatrix integer_kernel_basis(const IntMatrix& a)
{
    // U * A^T = H; the rows of U facing zero rows of H span the left kernel of A^T.
    HermiteForm hf = hermite_normal_form(a.transpose());
    std::vector<std::size_t> idx;
    for (std::size_t i = hf.rank; i < hf.U.rows(); ++i)
        idx.push_back(i);
    IntMatrix k = hf.U.select_rows(idx);
    if (k.rows() == 0)
        return IntMatrix(0, a.cols());
    return row_lattice_basis(k);
}

std::vector<Integer> smith_invariants(const IntMatrix& a)
{
    IntMatrix m = a;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Integer> inv;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m(i, j) != 0 && (bi == rows || abs(m(i, j)) < abs(m(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows)
                return inv;
            swap_rows(m, t, bi);
            swap_cols(m, t, bj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                sub_row(m, i, t, trunc_div(m(i, t), m(t, t)));
                dirty = dirty || m(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                sub_col(m, j, t, trunc_div(m(t, j), m(t, t)));
                dirty = dirty || m(t, j) != 0;
            }
            if (dirty)
                continue;

            // Pivot must divide the whole trailing block.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            sub_row(m, t, bad, Integer(-1));
        }
        inv.push_back(abs(m(t, t)));
    }
    return inv;
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_rational: dimension mismatch");
    RatMatrix m = to_rat(a);
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i].push_back(b[i]);
    auto pivots = rref(m, a.cols());
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (m[i][a.cols()] != 0)
            return std::nullopt;
    RatVector x(a.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = m[r][a.cols()];
    return x;
}

std::size_t rank(const IntMatrix& a)
{
    RatMatrix m = to_rat(a);
    return rref(m, a.cols()).size();
}

Integer determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix not square");
    RatMatrix m = to_rat(a);
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return det.get_num();
}

IntMatrix unimodular_inverse(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || abs(determinant(a)) != 1)
        throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
    RatMatrix m = to_rat(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i].push_back(Rational(i == j ? 1 : 0));
    rref(m, n);
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = m[i][n + j].get_num();
    return inv;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        return false;
    return row_lattice_basis(a) == row_lattice_basis(b);
}

// ---------------------------------------------------------------------------

Integer dot(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

IntVector to_int_vector(std::initializer_list<long> v)
{
    IntVector out;
    out.reserve(v.size());
    for (long x : v)
        out.emplace_back(x);
    return out;
}

RatVector to_rat_vector(const IntVector& v)
{
    return RatVector(v.begin(), v.end());
}

bool is_zero(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVector make_primitive(IntVector v)
{
    Integer g = content(v);
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVector make_primitive(const RatVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        out[i] = s.get_num();
    }
    return make_primitive(std::move(out));
}

std::vector<IntVector> span_basis(const std::vector<IntVector>& rows, std::size_t dim)
{
    RatMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != dim)
            throw std::invalid_argument("span_basis: dimension mismatch");
        m.push_back(to_rat_vector(r));
    }
    auto pivots = rref(m, dim);
    std::vector<IntVector> out;
    out.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        out.push_back(make_primitive(m[i]));
    return out;
}

std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& rows, std::size_t dim)
{
    RatMatrix m;
    for (const auto& r : rows)
        m.push_back(to_rat_vector(r));
    auto pivots = rref(m, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f])
            continue;
        RatVector x(dim, Rational(0));
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -m[r][f];
        basis.push_back(make_primitive(x));
    }
    return span_basis(basis, dim);
}

std::string to_string(const IntVector& v)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].get_str();
    os << "]";
    return os.str();
}

}  // namespace fanforge

#pragma once

// Exact scalars and dense linear algebra.
//
// Integer and Rational are GMP types. mpq_class keeps every arithmetic
// result canonical (lowest terms, positive denominator) as long as its
// inputs are canonical; make_rational is the only place a raw
// numerator/denominator pair enters the system.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modeq {

using Integer = mpz_class;
using Rational = mpq_class;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

/// Parses "a" or "a/b" (optionally signed) into a canonical rational.
inline Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(m, h); zero when h > m.
inline Integer binomial(unsigned long m, unsigned long h)
{
    if (h > m) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), m, h);
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// base^e for any integer e; negative exponents need a nonzero base.
inline Rational rpow(const Rational& base, long e)
{
    if (e >= 0) {
        Rational r(ipow(base.get_num(), static_cast<unsigned long>(e)),
                   ipow(base.get_den(), static_cast<unsigned long>(e)));
        return r;
    }
    if (base == 0) throw std::domain_error("zero to a negative power");
    return make_rational(ipow(base.get_den(), static_cast<unsigned long>(-e)),
                         ipow(base.get_num(), static_cast<unsigned long>(-e)));
}

inline Rational pow2(long e) { return rpow(Rational(2), e); }

inline Integer sign_power(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

/// Dense row-major matrix with fixed dimensions.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init)
        : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0)
    {
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix id(n, n);
        for (std::size_t i = 0; i < n; ++i) id(i, i) = T(1);
        return id;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    std::vector<T> column(std::size_t c) const
    {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    void set_column(std::size_t c, const std::vector<T>& values)
    {
        if (values.size() != rows_) throw DimensionError("column length mismatch");
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x)
{
    if (a.cols() != x.size()) throw DimensionError("matrix-vector size mismatch");
    std::vector<T> y(a.rows(), T(0));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) y[r] += a(r, c) * x[c];
    return y;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows()) throw DimensionError("matrix-matrix size mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b)
{
    if (a.size() != b.size()) throw DimensionError("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <typename T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b)
{
    if (a.size() != b.size()) throw DimensionError("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <typename T>
std::vector<T> scaled(std::vector<T> v, const T& s)
{
    for (auto& x : v) x *= s;
    return v;
}

namespace detail {

inline std::size_t first_nonzero_pivot(const IntegerMatrix& a, std::size_t k)
{
    for (std::size_t r = k; r < a.rows(); ++r)
        if (a(r, k) != 0) return r;
    return a.rows();
}

inline void swap_rows(IntegerMatrix& a, std::size_t r1, std::size_t r2)
{
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

// Fraction-free (Bareiss) forward elimination over the leading `n` columns.
// Returns the permutation sign, or 0 if a pivot column is entirely zero.
inline int bareiss_eliminate(IntegerMatrix& a, std::size_t n)
{
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = first_nonzero_pivot(a, k);
        if (piv == a.rows()) return 0;
        if (piv != k) {
            swap_rows(a, piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < a.rows(); ++i) {
            for (std::size_t j = k + 1; j < a.cols(); ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign;
}

// Scales each row by the lcm of its denominators. `scales[r]` is the factor.
inline IntegerMatrix clear_denominators(const RationalMatrix& a, std::vector<Integer>& scales)
{
    IntegerMatrix out(a.rows(), a.cols());
    scales.assign(a.rows(), Integer(1));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c).get_num() * (l / a(r, c).get_den());
        scales[r] = l;
    }
    return out;
}

} // namespace detail

/// Exact determinant. Rows are brought to integers and reduced with
/// Bareiss elimination, taking the first nonzero pivot in each column.
inline Rational det_exact(const RationalMatrix& a)
{
    if (!a.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<Integer> scales;
    IntegerMatrix m = detail::clear_denominators(a, scales);
    int sign = detail::bareiss_eliminate(m, n);
    if (sign == 0) return 0;
    Integer denom = 1;
    for (const auto& s : scales) denom *= s;
    return make_rational(sign * m(n - 1, n - 1), denom);
}

/// Textbook Gaussian elimination over any field type (first nonzero pivot).
template <typename T>
T det_gauss(Matrix<T> a)
{
    if (!a.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return T(0);
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(k, c));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            T f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

/// Unique solution of a·x = b for square nonsingular a.
inline std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b)
{
    if (!a.square()) throw DimensionError("solve with a non-square matrix");
    if (b.size() != a.rows()) throw DimensionError("right-hand side length mismatch");
    const std::size_t n = a.rows();
    if (n == 0) return {};

    RationalMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    std::vector<Integer> scales;
    IntegerMatrix m = detail::clear_denominators(aug, scales);
    if (detail::bareiss_eliminate(m, n) == 0) throw SingularMatrixError("singular system");

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(m(i, n));
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m(i, j)) * x[j];
        x[i] = acc / Rational(m(i, i));
    }
    return x;
}

inline RationalMatrix inverse_exact(const RationalMatrix& a)
{
    if (!a.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rational> e(n, Rational(0));
        e[c] = 1;
        inv.set_column(c, solve_exact(a, e));
    }
    return inv;
}

} // namespace modeq

#pragma once

// Truncated formal power series in q = e^{i pi tau} over exact rationals,
// eta-quotient assembly, and the two routes to the q-expansion of
// X^i Y^h / (2^{ni} q^{mi}).

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modeq/bpoly.hpp"
#include "modeq/exact.hpp"

namespace modeq {

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// c_0 + c_1 q + ... + c_T q^T + O(q^{T+1}).
class TruncatedSeries {
public:
    /// The zero series known through q^order.
    explicit TruncatedSeries(unsigned order) : coeffs_(order + 1, Rational(0)) {}

    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) throw SeriesError("a series needs at least one coefficient");
    }

    static TruncatedSeries constant(const Rational& c, unsigned order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c q^k, truncated at `order`.
    static TruncatedSeries monomial(const Rational& c, unsigned k, unsigned order)
    {
        TruncatedSeries s(order);
        if (k <= order) s.coeffs_[k] = c;
        return s;
    }

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](unsigned k) const { return coeffs_.at(k); }
    Rational& operator[](unsigned k) { return coeffs_.at(k); }

    TruncatedSeries truncated(unsigned order) const
    {
        std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
        return TruncatedSeries(std::move(c));
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    /// Index of the first nonzero coefficient, or -1.
    long first_nonzero() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return static_cast<long>(k);
        return -1;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (unsigned k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (unsigned k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const unsigned t = std::min(a.order(), b.order());
        TruncatedSeries r(t);
        for (unsigned i = 0; i <= t; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (unsigned j = 0; i + j <= t; ++j)
                if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries s)
    {
        for (auto& x : s.coeffs_) x *= c;
        return s;
    }

private:
    std::vector<Rational> coeffs_;
};

/// 1/s for a series with nonzero constant term.
inline TruncatedSeries inverse(const TruncatedSeries& s)
{
    if (s[0] == 0) throw SeriesError("inverse of a series with zero constant term");
    TruncatedSeries r(s.order());
    const Rational inv0 = 1 / s[0];
    r[0] = inv0;
    for (unsigned k = 1; k <= s.order(); ++k) {
        Rational acc = 0;
        for (unsigned j = 1; j <= k; ++j)
            if (s[j] != 0) acc += s[j] * r[k - j];
        r[k] = -acc * inv0;
    }
    return r;
}

/// s^e by repeated squaring; negative e goes through the inverse.
inline TruncatedSeries int_pow(const TruncatedSeries& s, long e)
{
    if (e < 0) return int_pow(inverse(s), -e);
    TruncatedSeries result = TruncatedSeries::constant(1, s.order());
    TruncatedSeries base = s;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// exp(s) for a series with zero constant term.
inline TruncatedSeries exp(const TruncatedSeries& s)
{
    if (s[0] != 0) throw SeriesError("exp of a series with nonzero constant term");
    TruncatedSeries r(s.order());
    r[0] = 1;
    for (unsigned l = 1; l <= s.order(); ++l) {
        Rational acc = 0;
        for (unsigned k = 1; k <= l; ++k)
            if (s[k] != 0) acc += Rational(k) * s[k] * r[l - k];
        r[l] = acc / l;
    }
    return r;
}

/// q -> q^a. The result keeps the same truncation order.
inline TruncatedSeries scale_q(const TruncatedSeries& s, unsigned a)
{
    if (a == 0) throw SeriesError("scale_q needs a positive factor");
    TruncatedSeries r(s.order());
    for (unsigned k = 0; k * a <= s.order(); ++k) r[k * a] = s[k];
    return r;
}

/// Multiplication by q^k; the top k coefficients become unknown, so the
/// order grows by k.
inline TruncatedSeries shift(const TruncatedSeries& s, unsigned k)
{
    std::vector<Rational> c(k, Rational(0));
    c.insert(c.end(), s.coeffs().begin(), s.coeffs().end());
    return TruncatedSeries(std::move(c));
}

/// D = q d/dq.
inline TruncatedSeries q_derivative(TruncatedSeries s)
{
    for (unsigned k = 0; k <= s.order(); ++k) s[k] *= k;
    return s;
}

/// prod_{k>=1} (1 - q^{a k}) through q^order.
inline TruncatedSeries euler_product(unsigned a, unsigned order)
{
    if (a == 0) throw SeriesError("euler_product needs a positive step");
    std::vector<Rational> c(order + 1, Rational(0));
    c[0] = 1;
    for (unsigned step = a; step <= order; step += a)
        for (unsigned k = order; k >= step; --k) c[k] -= c[k - step];
    return TruncatedSeries(std::move(c));
}

/// One factor Q(a tau)^e of an eta quotient.
struct EtaFactor {
    unsigned scale;
    long exponent;
};

/// prod Q(a tau)^e through q^order.
inline TruncatedSeries eta_quotient(const std::vector<EtaFactor>& factors, unsigned order)
{
    TruncatedSeries r = TruncatedSeries::constant(1, order);
    for (const auto& f : factors)
        if (f.exponent != 0) r = r * int_pow(euler_product(f.scale, order), f.exponent);
    return r;
}

/// lambda = 16 q Q(tau)^8 Q(4 tau)^16 / Q(2 tau)^24 through q^order.
inline TruncatedSeries lambda_series(unsigned order)
{
    if (order < 1) throw SeriesError("lambda_series needs order >= 1");
    TruncatedSeries body = eta_quotient({{1, 8}, {4, 16}, {2, -24}}, order - 1);
    return shift(Rational(16) * body, 1);
}

/// 1 - lambda = Q(tau)^16 Q(4 tau)^8 / Q(2 tau)^24.
inline TruncatedSeries one_minus_lambda_series(unsigned order)
{
    return eta_quotient({{1, 16}, {4, 8}, {2, -24}}, order);
}

/// Exponents i of X and h of Y for a fixed prime.
struct XYParams {
    std::int64_t p;
    int m;
    int n;
    unsigned i;
    unsigned h;
};

/// X^i Y^h / (2^{ni} q^{mi}) by direct eta-quotient multiplication:
/// Q(t)^{n(i+2h)} Q(4t)^{n(2i+h)} Q(2t)^{-3n(i+h)} at t = tau and t = p tau.
inline TruncatedSeries xy_normalized_direct(const XYParams& xp, unsigned order)
{
    const long n = xp.n;
    const long i = xp.i;
    const long h = xp.h;
    const long e1 = n * (i + 2 * h);
    const long e4 = n * (2 * i + h);
    const long e2 = -3 * n * (i + h);
    const auto p = static_cast<unsigned>(xp.p);
    return eta_quotient({{1, e1}, {4, e4}, {2, e2}, {p, e1}, {4 * p, e4}, {2 * p, e2}}, order);
}

/// The same series with coefficient b_l(i + 2h, i) at q^l.
inline TruncatedSeries xy_normalized_lemma(const XYParams& xp, unsigned order)
{
    BContext bc(AlphaContext(xp.p), xp.n);
    return TruncatedSeries(b_eval_fast(bc, order, Rational(xp.i + 2 * xp.h), Rational(xp.i)));
}

/// "16 q - 128 q^2 + ..." with zero terms omitted.
inline std::string format_series(const TruncatedSeries& s)
{
    std::ostringstream out;
    bool first = true;
    for (unsigned k = 0; k <= s.order(); ++k) {
        const Rational& c = s[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        const bool unit = (mag == 1);
        if (k == 0 || !unit) out << mag.get_str();
        if (k > 0) out << (unit ? "" : " ") << "q";
        if (k > 1) out << "^" << k;
    }
    if (first) out << "0";
    out << " + O(q^" << s.order() + 1 << ")";
    return out.str();
}

/// One "c_k at q^k" line per coefficient.
inline void write_series_listing(std::ostream& out, const TruncatedSeries& s)
{
    for (unsigned k = 0; k <= s.order(); ++k) out << s[k].get_str() << " at q^" << k << "\n";
}

} // namespace modeq

#pragma once

// The two-variable polynomials b_l(u, v), the P_s(m) family with its
// c-coefficients, and the alternating binomial moments.
//
//   b_l(u, v) = sum over J in J[l] of (-n)^{|J|} u^{J_o} v^{J_e} W_p(J)
//
// b_eval sums over partitions directly. b_eval_fast reads the same numbers
// off exp(-n sum_k g(k) q^k), g(k) = u alpha_p(k) (k odd) or v alpha_p(k)
// (k even), using the recurrence l b_l = sum_k (-n k g(k)) b_{l-k}.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modeq/arith.hpp"
#include "modeq/exact.hpp"
#include "modeq/partitions.hpp"

namespace modeq {

class BContext {
public:
    BContext(AlphaContext ctx, int n) : ctx_(ctx), n_(n)
    {
        if (n != 1 && n != 2 && n != 4) throw InvalidInputError("n must be 1, 2 or 4");
    }

    const AlphaContext& alpha_context() const noexcept { return ctx_; }
    std::int64_t p() const noexcept { return ctx_.p(); }
    int n() const noexcept { return n_; }

private:
    AlphaContext ctx_;
    int n_;
};

class ThresholdError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// b_l(u, v) by summing over J[l]. 0^0 is taken as 1.
inline Rational b_eval(const BContext& bc, unsigned l, const Rational& u, const Rational& v,
                       unsigned threshold = default_enumeration_threshold)
{
    if (l > threshold)
        throw ThresholdError("b_eval: weight " + std::to_string(l) + " is above the enumeration threshold " +
                             std::to_string(threshold) + "; use b_eval_fast");
    const Rational minus_n(-bc.n());
    std::vector<Rational> a(l + 1);
    for (unsigned k = 1; k <= l; ++k) a[k] = alpha(bc.alpha_context(), k);
    Rational sum = 0;
    for (const Partition& j : enumerate(l)) {
        Rational term = rpow(minus_n, j.norm());
        term *= rpow(u, j.odd_count());
        term *= rpow(v, j.even_count());
        if (term == 0) continue;
        // W_p(J), with alpha looked up rather than recomputed per part
        for (const auto& part : j.parts()) {
            term *= rpow(a[part.size], part.multiplicity);
            term /= Rational(factorial(part.multiplicity));
        }
        sum += term;
    }
    return sum;
}

namespace detail {

// k * alpha_p(k) is always an integer.
inline std::vector<Integer> scaled_alpha_table(const AlphaContext& ctx, unsigned max_k)
{
    std::vector<Integer> t(max_k + 1, Integer(0));
    for (unsigned k = 1; k <= max_k; ++k) {
        Rational a = alpha(ctx, k) * k;
        t[k] = a.get_num();
    }
    return t;
}

// Integer route for integral u, v: B_l = l! b_l satisfies
//   B_l = sum_{k=1}^{l} s_k (l-1)!/(l-k)! B_{l-k},  s_k = -n k g(k).
inline std::vector<Rational> b_series_integral(const BContext& bc, unsigned max_l, const Integer& u,
                                               const Integer& v)
{
    std::vector<Integer> ka = scaled_alpha_table(bc.alpha_context(), max_l);
    std::vector<Integer> s(max_l + 1, Integer(0));
    for (unsigned k = 1; k <= max_l; ++k) s[k] = -bc.n() * (k % 2 == 1 ? u : v) * ka[k];

    std::vector<Integer> big(max_l + 1);
    big[0] = 1;
    for (unsigned l = 1; l <= max_l; ++l) {
        Integer acc = 0;
        Integer falling = 1;
        for (unsigned k = 1; k <= l; ++k) {
            if (k > 1) falling *= (l - k + 1);
            if (s[k] != 0 && big[l - k] != 0) acc += s[k] * falling * big[l - k];
        }
        big[l] = acc;
    }
    std::vector<Rational> out(max_l + 1);
    Integer fact = 1;
    for (unsigned l = 0; l <= max_l; ++l) {
        if (l > 0) fact *= l;
        out[l] = make_rational(big[l], fact);
    }
    return out;
}

inline std::vector<Rational> b_series_rational(const BContext& bc, unsigned max_l, const Rational& u,
                                               const Rational& v)
{
    std::vector<Rational> s(max_l + 1, Rational(0));
    for (unsigned k = 1; k <= max_l; ++k)
        s[k] = Rational(-bc.n() * static_cast<long>(k)) * (k % 2 == 1 ? u : v) * alpha(bc.alpha_context(), k);

    std::vector<Rational> b(max_l + 1, Rational(0));
    b[0] = 1;
    for (unsigned l = 1; l <= max_l; ++l) {
        Rational acc = 0;
        for (unsigned k = 1; k <= l; ++k)
            if (s[k] != 0) acc += s[k] * b[l - k];
        b[l] = acc / l;
    }
    return b;
}

} // namespace detail

/// (b_0(u,v), ..., b_{max_l}(u,v)) by the series-exponential recurrence.
inline std::vector<Rational> b_eval_fast(const BContext& bc, unsigned max_l, const Rational& u, const Rational& v)
{
    if (is_integral(u) && is_integral(v)) return detail::b_series_integral(bc, max_l, u.get_num(), v.get_num());
    return detail::b_series_rational(bc, max_l, u, v);
}

/// P_s(m) from (m+s) P_s(m) = m (P_{s-1}(m) + P_s(m-1)), P_0 = 1, P_s(0) = 0 for s >= 1.
inline Rational p_poly(unsigned s, unsigned m)
{
    // table[t][k] = P_t(k)
    std::vector<std::vector<Rational>> table(s + 1, std::vector<Rational>(m + 1, Rational(0)));
    for (unsigned k = 0; k <= m; ++k) table[0][k] = 1;
    for (unsigned t = 1; t <= s; ++t)
        for (unsigned k = 1; k <= m; ++k)
            table[t][k] = Rational(k) * (table[t - 1][k] + table[t][k - 1]) / Rational(k + t);
    return table[s][m];
}

/// c_{s,r} with c_{0,0} = 1, c_{s,r} = r/(s+r) (c_{s-1,r-1} + c_{s-1,r}); zero outside 0 <= r <= s.
inline Rational c_coeff(unsigned s, unsigned r)
{
    if (r > s) return 0;
    std::vector<Rational> row{Rational(1)}; // c_{0,*}
    for (unsigned t = 1; t <= s; ++t) {
        std::vector<Rational> next(t + 1, Rational(0));
        for (unsigned q = 1; q <= t; ++q) {
            Rational left = row[q - 1];
            Rational up = q < row.size() ? row[q] : Rational(0);
            next[q] = Rational(q) * (left + up) / Rational(t + q);
        }
        row = std::move(next);
    }
    return row[r];
}

/// sum_{h=0}^{m} h^N (-1)^{h-1} C(m, h), with 0^0 = 1.
inline Rational binomial_moment(unsigned big_n, unsigned m)
{
    Integer sum = 0;
    for (unsigned h = 0; h <= m; ++h) {
        Integer term = ipow(Integer(h), big_n) * binomial(m, h);
        if (h % 2 == 0)
            sum -= term;
        else
            sum += term;
    }
    return Rational(sum);
}

} // namespace modeq

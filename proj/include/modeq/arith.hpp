#pragma once

// Divisor sums and the multiplicative functions alpha_p, beta_p, gamma_{p,i,h}
// together with the partition weight W_p(J).

#include <cstdint>
#include <stdexcept>
#include <string>

#include "modeq/exact.hpp"
#include "modeq/partitions.hpp"

namespace modeq {

class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(std::int64_t x)
{
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::int64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

inline bool is_odd_prime(std::int64_t x) { return x != 2 && is_prime(x); }

/// Sum of the divisors of a positive integer.
inline Integer sigma1(std::uint64_t k)
{
    Integer s = 0;
    for (std::uint64_t d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        s += d;
        if (d != k / d) s += k / d;
    }
    return s;
}

/// sigma_1 extended to rationals: zero unless x is a positive integer.
inline Rational sigma1(const Rational& x)
{
    if (!is_integral(x) || x <= 0 || !x.get_num().fits_ulong_p()) return 0;
    return Rational(sigma1(x.get_num().get_ui()));
}

/// sigma_1(x)/x, which vanishes off the positive integers.
inline Rational sigma_ratio(const Rational& x)
{
    Rational s = sigma1(x);
    if (s == 0) return 0;
    return s / x;
}

/// Holds an odd prime p; the constructor rejects anything else.
class AlphaContext {
public:
    explicit AlphaContext(std::int64_t p) : p_(p)
    {
        if (!is_odd_prime(p)) throw InvalidInputError("p must be an odd prime");
    }

    std::int64_t p() const noexcept { return p_; }

private:
    std::int64_t p_;
};

namespace detail {

// c1*s(k) + c2*s(k/2) + c4*s(k/4) + the same at k/p, with s(x) = sigma_1(x)/x.
inline Rational six_term(const AlphaContext& ctx, std::uint64_t k, long c1, long c2, long c4)
{
    if (k == 0) throw std::invalid_argument("k must be positive");
    const Rational kk(Integer(static_cast<unsigned long>(k)));
    const Rational p(Integer(static_cast<long>(ctx.p())));
    Rational acc = 0;
    const Rational bases[] = {kk, Rational(kk / p)};
    for (const Rational& base : bases) {
        acc += c1 * sigma_ratio(base);
        acc += c2 * sigma_ratio(base / 2);
        acc += c4 * sigma_ratio(base / 4);
    }
    return acc;
}

} // namespace detail

inline Rational alpha(const AlphaContext& ctx, std::uint64_t k) { return detail::six_term(ctx, k, 1, -3, 2); }

inline Rational beta(const AlphaContext& ctx, std::uint64_t k) { return detail::six_term(ctx, k, 2, -3, 1); }

/// gamma_{p,i,h}(k) = i alpha_p(k) + h beta_p(k).
inline Rational gamma(const AlphaContext& ctx, unsigned i, unsigned h, std::uint64_t k)
{
    return Rational(i) * alpha(ctx, k) + Rational(h) * beta(ctx, k);
}

/// W_p(J) = prod_k alpha_p(k)^{j_k} / j_k!.
inline Rational weight_w(const AlphaContext& ctx, const Partition& j)
{
    Rational w = 1;
    for (const auto& part : j.parts()) {
        w *= rpow(alpha(ctx, part.size), part.multiplicity);
        w /= Rational(factorial(part.multiplicity));
    }
    return w;
}

} // namespace modeq

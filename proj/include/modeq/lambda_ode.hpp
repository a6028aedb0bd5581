#pragma once

// The third-order differential equation for lambda, checked as an identity
// between q-series. With D = q d/dq every tau-derivative of lambda is a
// power of (i pi) times a D-derivative, and the powers cancel, so
//
//   2 f'''/f'^3 - 3 f''^2/f'^4 = -(f^2 - f + 1) / (f^2 (1-f)^2)
//
// becomes, after multiplying through by (Df)^4 f^2 (1-f)^2,
//
//   2 D^3f Df f^2 (1-f)^2 - 3 (D^2f)^2 f^2 (1-f)^2 + (f^2 - f + 1) (Df)^4 = 0.
//
// Multiplying the equation by 4/27 gives the equivalent form
//   (4/27)(1 - f + f^2)/(f^2 (1-f)^2) = (2/3)^2 (f''/f'^2)^2 - (2/3)^3 f'''/f'^3.

#include "modeq/qseries.hpp"

namespace modeq {

struct OdeResidual {
    TruncatedSeries residual;
    /// Coefficients through q^effective_order are exact.
    unsigned effective_order;

    bool vanishes() const { return residual.is_zero(); }
};

/// Residual of the cleared identity for an arbitrary series f. Only
/// products are taken, so the result is exact through f's own order.
inline OdeResidual ode_residual_for(const TruncatedSeries& f)
{
    const unsigned t = f.order();
    const TruncatedSeries one = TruncatedSeries::constant(1, t);
    const TruncatedSeries d1 = q_derivative(f);
    const TruncatedSeries d2 = q_derivative(d1);
    const TruncatedSeries d3 = q_derivative(d2);
    const TruncatedSeries g = one - f;
    const TruncatedSeries f2g2 = f * f * g * g;
    const TruncatedSeries d1sq = d1 * d1;

    TruncatedSeries r = Rational(2) * (d3 * d1 * f2g2) - Rational(3) * (d2 * d2 * f2g2) +
                        (f * f - f + one) * (d1sq * d1sq);
    return OdeResidual{std::move(r), t};
}

inline OdeResidual ode_residual(unsigned order)
{
    if (order < 10) throw SeriesError("ode_residual needs order >= 10");
    return ode_residual_for(lambda_series(order));
}

} // namespace modeq

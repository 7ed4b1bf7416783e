// oscillatory.hpp: integrals of e^{iωt} and composite Gauss–Legendre quadrature.

#pragma once

#include "chronos/extended.hpp"

#include <complex>
#include <functional>

namespace chronos {

// |ω|·width below this switches phase_integral to its Taylor series.
inline constexpr double kSmallPhase = 1e-8;

// ∫_0^width e^{iωt} dt in closed form. The numerator e^{ix}−1 is evaluated as
// −2sin²(x/2) + i·sin x so it stays accurate for small x; below kSmallPhase the
// series width·(1 + ix/2 − x²/6 − ix³/24) is used.
std::complex<double> phase_integral(const Extended& omega, const Extended& width);

// ∫_a^b e^{iωt} dt = e^{iωa}·phase_integral(ω, b − a).
std::complex<double> phase_integral(const Extended& omega, const Extended& a, const Extended& b);

// Composite 10-point Gauss–Legendre over [a, b] with panels no wider than max_panel.
// Panel integrals are summed in a fixed pairwise order, so the result does not depend
// on the number of worker threads.
std::complex<double> integrate_composite(const std::function<std::complex<double>(double)>& f, double a,
                                         double b, double max_panel);

}  // namespace chronos

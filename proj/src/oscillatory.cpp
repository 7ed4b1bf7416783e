#include "chronos/oscillatory.hpp"

#include "chronos/errors.hpp"
#include "chronos/parallel.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <vector>

namespace chronos {

std::complex<double> phase_integral(const Extended& omega, const Extended& width) {
    const Extended x_ext = omega * width;
    const double x = to_double(x_ext);
    const double w = to_double(width);
    if (std::abs(x) < kSmallPhase) {
        const double x2 = x * x;
        return w * std::complex<double>(1.0 - x2 / 6.0, x / 2.0 - x * x2 / 24.0);
    }
    const double r = reduce_angle_symmetric(x_ext);
    const double s = std::sin(0.5 * r);
    const std::complex<double> numerator(-2.0 * s * s, std::sin(r));
    // numerator / (iω)
    const double om = to_double(omega);
    return {numerator.imag() / om, -numerator.real() / om};
}

std::complex<double> phase_integral(const Extended& omega, const Extended& a, const Extended& b) {
    return unit_phase(omega * a) * phase_integral(omega, b - a);
}

std::complex<double> integrate_composite(const std::function<std::complex<double>(double)>& f, double a,
                                         double b, double max_panel) {
    if (!(b >= a)) throw ContractError("integrate_composite", "upper limit below lower limit");
    if (b == a) return {};
    if (!(max_panel > 0.0)) throw ContractError("integrate_composite", "panel width must be positive");
    using rule = boost::math::quadrature::gauss<double, 10>;
    const auto& nodes = rule::abscissa();
    const auto& weights = rule::weights();

    const auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_panel));
    const double h = (b - a) / static_cast<double>(panels);
    std::vector<std::complex<double>> partial(panels);
    parallel_for(panels, [&](std::size_t i) {
        const double lo = a + h * static_cast<double>(i);
        const double mid = lo + 0.5 * h;
        const double half = 0.5 * h;
        std::complex<double> acc{};
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            acc += weights[k] * (f(mid - half * nodes[k]) + f(mid + half * nodes[k]));
        }
        partial[i] = acc * half;
    });
    return pairwise_sum<std::complex<double>>(partial, 0, partial.size());
}

}  // namespace chronos

#include "chronos/classical_demo.hpp"

#include "chronos/errors.hpp"
#include "chronos/extended.hpp"

#include <cmath>

namespace chronos {

AnglePair angles_at(double t, double omega1, double omega2) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0)) throw ContractError("angles_at", "frequencies must be positive");
    const Extended te(t);
    return {reduce_angle(Extended(omega1) * te), reduce_angle(Extended(omega2) * te)};
}

double circle_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * M_PI);
    return d > M_PI ? 2.0 * M_PI - d : d;
}

std::vector<double> reconstruct_time(const AnglePair& target, double omega1, double omega2,
                                     const TimeWindow& window, double tol) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0)) throw ContractError("reconstruct_time", "frequencies must be positive");
    if (!(window.t_max > window.t_min)) throw ContractError("reconstruct_time", "empty window");
    if (!(tol > 0.0)) throw ContractError("reconstruct_time", "tolerance must be positive");

    const Extended w1(omega1);
    const Extended w2(omega2);
    const Extended phi1(target.phi1);
    const Extended& two_pi = two_pi_extended();
    // j range with t_j inside the window, widened by one on each side and filtered below.
    const auto j_lo = static_cast<long long>(floor((Extended(window.t_min) * w1 - phi1) / two_pi)) - 1;
    const auto j_hi = static_cast<long long>(ceil((Extended(window.t_max) * w1 - phi1) / two_pi)) + 1;

    std::vector<double> out;
    for (long long j = j_lo; j <= j_hi; ++j) {
        const Extended t = (phi1 + two_pi * Extended(j)) / w1;
        const double td = to_double(t);
        if (td < window.t_min || td > window.t_max) continue;
        const double d1 = circle_distance(reduce_angle(w1 * t), target.phi1);
        const double d2 = circle_distance(reduce_angle(w2 * t), target.phi2);
        if (d1 < tol && d2 < tol) out.push_back(td);
    }
    return out;
}

}  // namespace chronos

// classical_demo.hpp: recovering elapsed time from two incommensurate angles.
//
// With φ_k(t) = ω_k t mod 2π and ω_2/ω_1 irrational, distinct times give distinct angle
// pairs. Over a finite window and tolerance this becomes a testable statement: scanning
// the times where φ_1 matches and filtering on φ_2 leaves a single candidate.

#pragma once

#include <vector>

namespace chronos {

struct AnglePair {
    double phi1;
    double phi2;
};

struct TimeWindow {
    double t_min;
    double t_max;
};

// (ω_1 t, ω_2 t) reduced modulo 2π at extended precision.
AnglePair angles_at(double t, double omega1, double omega2);

// Distance on the circle, in [0, π].
double circle_distance(double a, double b);

// All t in the window with both angle distances below tol, ascending. Candidates are
// the φ_1 matches t_j = (φ_1 + 2πj)/ω_1.
std::vector<double> reconstruct_time(const AnglePair& target, double omega1, double omega2,
                                     const TimeWindow& window, double tol);

}  // namespace chronos

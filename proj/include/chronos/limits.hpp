// limits.hpp: the quasiperiodic time observable as a limit of periodic ones.
//
// Each approximant spectrum E^(k) evolves with period T_k. The periodic observable's
// expectation of f_k(t) = f(t mod T_k) is (1/T_k)∫_0^{T_k} f(t)|Σ c_n e^{iE_n^(k) t}|² dt,
// which tends to the Bohr-mean expectation ⟨f⟩_ψ as k grows.

#pragma once

#include "chronos/bohr_measure.hpp"

#include <cstdint>
#include <vector>

namespace chronos {

struct LimitEntry {
    int k;                     // convergent index of the step
    double period;             // T_k
    std::int64_t denominator;  // q_k
    double expectation;        // ⟨f_k⟩ under the k-th periodic observable
};

struct LimitTrace {
    std::vector<LimitEntry> entries;
    double target;             // ⟨f⟩_ψ for the quasiperiodic observable
};

// t ↦ f(t mod T), the reduction done at extended precision.
ComplexFunction periodize(const FourierSeries& f, double period);

// (1/T_k)∫_0^{T_k} f·p^(k) dt for one approximant step, integrated term by term in
// closed form. `state` supplies the amplitudes; its spectrum is ignored.
double periodic_expectation(const QuantumState& state, const FourierSeries& f, const ApproximantStep& step);

// f is real-valued over the target bases; state is bound to approximants.target.
LimitTrace expectation_sequence(const QuantumState& state, const FourierSeries& f,
                                const ApproximantSequence& approximants);

// f with every label (l1, l2) mapped to l1·q + l2·p over the step's single base β_1/q,
// i.e. f with β_2/β_1 replaced by p/q.
FourierSeries project_onto(const FourierSeries& f, const ApproximantStep& step);

}  // namespace chronos

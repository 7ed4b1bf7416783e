// extended.hpp: extended-precision scalars and phase reduction.
//
// Energies, base frequencies and periods are carried as 113-bit binary floats so that
// phases E·t stay accurate for t far beyond the natural period of the system. Phases
// are reduced modulo 2π at that precision and only then rounded to double.

#pragma once

#include <boost/multiprecision/float128.hpp>

#include <complex>
#include <string>
#include <string_view>

namespace chronos {

using Extended = boost::multiprecision::float128;

const Extended& two_pi_extended();
const Extended& pi_extended();

// x mod 2π in [0, 2π), rounded to double.
double reduce_angle(const Extended& x);

// x mod 2π in (-π, π], rounded to double.
double reduce_angle_symmetric(const Extended& x);

// e^{ix}, with x reduced at extended precision first.
std::complex<double> unit_phase(const Extended& x);

// Parses a decimal literal ("1.25", "-3e-2") or one of the symbolic tokens
// "sqrt2", "golden", "pi". Throws ContractError on anything else.
Extended parse_extended(std::string_view text);

inline double to_double(const Extended& x) { return static_cast<double>(x); }

std::string to_string(const Extended& x);

}  // namespace chronos

#include "chronos/extended.hpp"

#include "chronos/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace chronos {

const Extended& two_pi_extended() {
    static const Extended value = boost::math::constants::two_pi<Extended>();
    return value;
}

const Extended& pi_extended() {
    static const Extended value = boost::math::constants::pi<Extended>();
    return value;
}

double reduce_angle(const Extended& x) {
    Extended r = fmod(x, two_pi_extended());
    if (r < 0) r += two_pi_extended();
    double d = to_double(r);
    // rounding can land exactly on 2π
    return d >= 2.0 * M_PI ? 0.0 : d;
}

double reduce_angle_symmetric(const Extended& x) {
    Extended r = fmod(x, two_pi_extended());
    if (r > pi_extended()) r -= two_pi_extended();
    if (r <= -pi_extended()) r += two_pi_extended();
    return to_double(r);
}

std::complex<double> unit_phase(const Extended& x) {
    const double r = reduce_angle_symmetric(x);
    return {std::cos(r), std::sin(r)};
}

Extended parse_extended(std::string_view text) {
    if (text == "sqrt2") return sqrt(Extended(2));
    if (text == "golden") return (Extended(1) + sqrt(Extended(5))) / 2;
    if (text == "pi") return pi_extended();
    if (text.empty()) throw ContractError("parse_extended", "empty number");
    for (char ch : text) {
        const bool ok = (ch >= '0' && ch <= '9') || ch == '.' || ch == '-' || ch == '+' ||
                        ch == 'e' || ch == 'E';
        if (!ok) {
            throw ContractError("parse_extended",
                                "not a decimal literal or known token: '" + std::string(text) + "'");
        }
    }
    try {
        return Extended(std::string(text));
    } catch (const std::exception&) {
        throw ContractError("parse_extended", "malformed decimal literal '" + std::string(text) + "'");
    }
}

std::string to_string(const Extended& x) {
    std::ostringstream os;
    os.precision(std::numeric_limits<Extended>::max_digits10);
    os << x;
    return os.str();
}

}  // namespace chronos

#include "cores/bigint.hpp"

namespace cores {

std::string rational_decimal(const Rat& value, unsigned digits) {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    const Int scaled = value.get_num() * scale / value.get_den();
    const Int whole = scaled / scale;
    if (digits == 0) return whole.get_str();
    std::string frac = Int(scaled - whole * scale).get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return whole.get_str() + "." + frac;
}

}  // namespace cores

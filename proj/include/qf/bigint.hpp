#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qf {

/** Exact arbitrary-precision integer used for multiplicities and coefficients. */
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("bad integer literal: " + text);
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("bad integer literal: " + text);
    return BigInt(text);
}

}  // namespace qf

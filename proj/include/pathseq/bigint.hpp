#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "pathseq/errors.hpp"

namespace pathseq {

// All path counts are exact arbitrary-precision integers; there is no
// fixed-width fallback anywhere in the counting paths.
using BigInt = boost::multiprecision::cpp_int;

// Floor square root, plus a flag telling whether the input was a perfect
// square. Used by the closed-form inversions (quadratics in n1 and m).
inline BigInt isqrt(const BigInt& x, bool& exact) {
    if (x < 0) {
        exact = false;
        return 0;
    }
    BigInt r = boost::multiprecision::sqrt(x);
    exact = (r * r == x);
    return r;
}

// Narrow to `int`, throwing when the value is outside the supported range.
inline int to_int_checked(const BigInt& x, int max_value, const char* what) {
    if (x < 0 || x > max_value)
        throw UnsupportedSizeError(std::string(what) + " out of supported range [0, " +
                                   std::to_string(max_value) + "]: " + x.str());
    return static_cast<int>(x);
}

// Strict decimal parse (optional leading '-', digits only).
inline BigInt parse_bigint(std::string_view text, std::size_t offset_base = 0) {
    if (text.empty())
        throw ParseError("empty integer", offset_base);
    std::size_t i = text[0] == '-' ? 1 : 0;
    if (i == text.size())
        throw ParseError("sign without digits", offset_base);
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw ParseError("invalid digit in integer", offset_base + j);
    return BigInt(std::string(text));
}

} // namespace pathseq

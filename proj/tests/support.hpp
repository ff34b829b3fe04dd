#pragma once

#include <doctest.h>

#include "eisen/eisenstein.hpp"
#include "eisen/text.hpp"
#include "oracle.hpp"

namespace doctest {
template <>
struct StringMaker<eisen::EisensteinInt> {
    static String convert(const eisen::EisensteinInt &x) { return eisen::format_eisenstein(x).c_str(); }
};
} // namespace doctest

inline eisen::EisensteinInt E(long a, long b) { return {a, b}; }

#pragma once

#include <doctest.h>

#include "sigmatau/poly.hpp"

namespace doctest {
template <> struct StringMaker<sigmatau::MultiPoly> {
    static String convert(const sigmatau::MultiPoly& p) { return p.to_string().c_str(); }
};
} // namespace doctest

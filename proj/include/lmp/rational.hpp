// Copyright (c) 2026 The lmp-minuscule Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmp {

/// Arbitrary-precision exact rational.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(Rational const & q) { return boost::multiprecision::denominator(q) == 1; }

/// Narrow an integral rational to int64; throws if it is not an integer or does not fit.
inline std::int64_t to_int64(Rational const & q) {
    if (!is_integral(q))
        throw std::domain_error("rational " + q.str() + " is not an integer");
    auto const num = boost::multiprecision::numerator(q);
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational " + q.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(num);
}

inline std::string to_string(Rational const & q) { return q.str(); }

inline std::vector<Rational> to_rational(std::vector<std::int64_t> const & v) {
    return {v.begin(), v.end()};
}

} // namespace lmp

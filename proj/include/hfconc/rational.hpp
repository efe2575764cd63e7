#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace hfconc {

/// Exact rational; d-invariants have denominators dividing 4pq.
/// Compare only against other Rationals: with C++20 rewritten operators,
/// Boost 1.74's mixed rational/integer comparisons recurse without end.
using Rational = boost::rational<std::int64_t>;

/// "a/b" in lowest terms with b > 0, integers included ("2/1").
inline std::string to_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace hfconc

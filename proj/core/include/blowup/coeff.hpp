#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace blowup {

/// Exact arbitrary-precision integer. All coefficient arithmetic in the
/// engine is exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

/// Coefficient domain of a computation. `integers` is the Chern-class
/// calculus; `mod2` is the Stiefel-Whitney calculus over the two-element
/// field. The two modes never mix: every value carries its mode and
/// cross-mode arithmetic is an error.
enum class Coeff {
    integers,
    mod2,
};

/// Cohomological degree of a "unit" characteristic class: c_1 of a line
/// bundle has degree 2 over the integers, w_1 has degree 1 over Z/2. All
/// degree bookkeeping (class degrees, shriek shifts, dimensions) scales by
/// this unit.
constexpr int degree_unit(Coeff mode) {
    return mode == Coeff::integers ? 2 : 1;
}

constexpr const char* coeff_name(Coeff mode) {
    return mode == Coeff::integers ? "integers" : "mod2";
}

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
Int binomial(int n, int k);

} // namespace blowup

#pragma once

#include <algorithm>
#include <cassert>

namespace bohr {

/// Enclosure [lower, upper] of a nonnegative functional value.  The upper end
/// carries the analytic truncation tail; the lower end is the computed
/// truncated sum.
struct ValueInterval {
    double lower = 0.0;
    double upper = 0.0;

    static ValueInterval exact(double v) { return {v, v}; }
    static ValueInterval with_tail(double v, double tail) { return {v, v + tail}; }

    double width() const { return upper - lower; }

    ValueInterval& operator+=(const ValueInterval& o) {
        lower += o.lower;
        upper += o.upper;
        return *this;
    }
    ValueInterval& operator+=(double v) {
        lower += v;
        upper += v;
        return *this;
    }
};

inline ValueInterval operator+(ValueInterval a, const ValueInterval& b) { return a += b; }
inline ValueInterval operator+(ValueInterval a, double b) { return a += b; }
inline ValueInterval operator+(double a, ValueInterval b) { return b += a; }

/// Scale by a nonnegative factor.
inline ValueInterval scale(double c, const ValueInterval& v) {
    assert(c >= 0.0);
    return {c * v.lower, c * v.upper};
}

/// Square an interval of nonnegative values.
inline ValueInterval square(const ValueInterval& v) {
    const double lo = std::max(v.lower, 0.0);
    return {lo * lo, v.upper * v.upper};
}

/// Raise to an integer power in {1, 2}.
inline ValueInterval pow_head(const ValueInterval& v, int power) {
    return power == 2 ? square(v) : v;
}

} // namespace bohr

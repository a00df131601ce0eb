#pragma once

#include <gmpxx.h>

#include <string>

#include "planeweave/errors.hpp"

namespace planeweave {

// Arbitrary-precision rational. mpq_class keeps values canonical (reduced,
// positive denominator) under arithmetic; construction must go through
// rat()/parse_rat so raw integer pairs get canonicalized too.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DegenerateInput("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with arbitrary-precision integers.
Rat parse_rat(const std::string& text);

// Prints "p/q" reduced, "/q" omitted when the denominator is 1.
std::string format_rat(const Rat& value);

// Bit length of the larger of |numerator|, denominator. Used by the
// coordinate-growth diagnostics.
std::size_t rat_bits(const Rat& value);

struct Point {
    Rat x;
    Rat y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point point(long x, long y) { return Point{rat(x), rat(y)}; }

struct Segment {
    Point a;
    Point b;
};

inline Segment segment(long ax, long ay, long bx, long by) {
    return Segment{point(ax, ay), point(bx, by)};
}

} // namespace planeweave

#pragma once

#include <gmpxx.h>

#include <string>

namespace gasper {

// Exact arbitrary-precision rational. All entry statistics and case
// decisions are made on this type; doubles appear only in bound values.
using Rat = mpq_class;

// Accepts "p/q", plain integers, and decimal literals like "-0.25".
Rat parse_rational(const std::string& token);

// Integers print bare, everything else as "p/q".
std::string format_rational(const Rat& v);

inline double to_double(const Rat& v) { return v.get_d(); }

// GMP comparisons assume canonical form; always build ratios through this.
inline Rat make_rat(long num, long den) {
    Rat v(num, den);
    v.canonicalize();
    return v;
}

// True iff v is the square of a rational; on success root is the
// non-negative square root.
bool rational_sqrt(const Rat& v, Rat& root);

}  // namespace gasper

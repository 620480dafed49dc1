#pragma once

#include <gmpxx.h>

#include <string>

namespace lcsk {

// Exact rational scalar. All kernel arithmetic is over Q; nothing is ever
// rounded.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// Accepts "a" or "a/b" with optional leading '-'. Throws UsageError on junk.
Rat rat_parse(const std::string& text);

// Canonical rendering: "a" or "a/b", denominator positive, gcd reduced.
std::string rat_str(const Rat& r);

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

} // namespace lcsk

// Exact rational arithmetic helpers shared by every verification module.
// All lemma/weight/regime checks run on mpq_class; doubles appear only in the
// Monte Carlo simulator and in rendered output.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pg {

using Rat = mpq_class;

// Parse "3/4", "-2", "0.25", "1e-3", "2.5e-2" into an exact rational.
// Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

// Render with exactly `sig_digits` significant digits (round half away from
// zero), e.g. 1/4 -> "0.250000000000" at 12 digits. Deterministic; used for
// byte-stable CSV/JSON output.
std::string to_decimal(const Rat& x, int sig_digits = 12);

// Canonical "num/den" form (den omitted when 1).
std::string to_fraction(const Rat& x);

// Exact integer power, n >= 0.
Rat rat_pow(const Rat& base, unsigned n);

// Deterministic pseudo-random rational in [0, 1] with denominator `den`,
// derived from a counter-based mix of (seed, index). Used to pick random
// rational parameter points for exact identity checks.
Rat random_rational(std::uint64_t seed, std::uint64_t index, unsigned den = 10000);

}  // namespace pg
